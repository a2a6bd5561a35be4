#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace olab {

// Counter-based generator: a Weyl sequence through a 64-bit finalizer, keyed
// by (master seed, trial index, stream id).  Streams are independent and a
// trial's draws do not depend on the execution order of other trials.
class CounterRng {
public:
    CounterRng(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t stream) {
        state_ = mix(mix(mix(master_seed + 0x9e3779b97f4a7c15ULL) ^ (trial * 0xbf58476d1ce4e5b9ULL)) ^
                     (stream * 0x94d049bb133111ebULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // uniform on [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // standard normal, Marsaglia polar method
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    std::complex<double> next_complex_gaussian(double component_sd) {
        return {component_sd * next_gaussian(), component_sd * next_gaussian()};
    }

    // gamma(shape) for shape >= 1, Marsaglia-Tsang
    double next_gamma(double shape) {
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_gaussian();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u = next_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // chi with k degrees of freedom
    double next_chi(double k) { return std::sqrt(2.0 * next_gamma(0.5 * k)); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace olab
