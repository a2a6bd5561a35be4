#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace olab {

// Sign/log-magnitude representation of a real value.  Carries polynomial and
// Bessel magnitudes that overflow IEEE doubles; log_mag is the natural log of
// the absolute value (-inf for exact zero) and sign is +1 or -1.
struct LogReal {
    double log_mag = -std::numeric_limits<double>::infinity();
    double sign = 1.0;

    static LogReal from_value(double v) {
        if (v == 0.0) return {};
        return {std::log(std::abs(v)), v > 0 ? 1.0 : -1.0};
    }
    static LogReal from_log(double log_mag, double sign = 1.0) { return {log_mag, sign}; }

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }
    double value() const { return is_zero() ? 0.0 : sign * std::exp(log_mag); }

    LogReal operator*(const LogReal& o) const {
        if (is_zero() || o.is_zero()) return {};
        return {log_mag + o.log_mag, sign * o.sign};
    }
    LogReal operator/(const LogReal& o) const { return {log_mag - o.log_mag, sign * o.sign}; }

    // log-sum-exp style addition
    LogReal operator+(const LogReal& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const LogReal& big = log_mag >= o.log_mag ? *this : o;
        const LogReal& small = log_mag >= o.log_mag ? o : *this;
        double t = big.sign + small.sign * std::exp(small.log_mag - big.log_mag);
        if (t == 0.0) return {};
        return {big.log_mag + std::log(std::abs(t)), t > 0 ? 1.0 : -1.0};
    }
};

// Same idea for complex values: unit-modulus factor plus log magnitude.
struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    std::complex<double> factor = {1.0, 0.0};

    static LogComplex from_value(std::complex<double> v) {
        double a = std::abs(v);
        if (a == 0.0) return {};
        return {std::log(a), v / a};
    }
    static LogComplex from_log(double log_mag, std::complex<double> factor) {
        return {log_mag, factor};
    }

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }
    std::complex<double> value() const { return is_zero() ? 0.0 : factor * std::exp(log_mag); }

    LogComplex operator*(const LogComplex& o) const {
        if (is_zero() || o.is_zero()) return {};
        return {log_mag + o.log_mag, factor * o.factor};
    }
    LogComplex conj() const { return {log_mag, std::conj(factor)}; }
};

}  // namespace olab
