#include "olab/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace olab::specfun {

namespace {
constexpr double kRescaleAt = 1e300;  // renormalize recurrences past e^{~690}
constexpr double kLog2Pi = 1.8378770664093454836;

double lfact(int n) { return std::lgamma(n + 1.0); }
}  // namespace

HermiteSeq hermite_orthonormal_seq(int degree_max, std::complex<double> w) {
    if (degree_max < 0) throw std::invalid_argument("hermite_orthonormal_seq: degree_max < 0");
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw std::invalid_argument("hermite_orthonormal_seq: non-finite argument");

    HermiteSeq seq;
    seq.degree_max = degree_max;
    seq.argument = w;
    seq.values.resize(degree_max + 1);

    // p_0 = pi^{-1/4}; p_{k+1} = w sqrt(2/(k+1)) p_k - sqrt(k/(k+1)) p_{k-1}.
    // Shared running exponent keeps the pair of live values in range.
    double scale = 0.0;  // log of the factor divided out so far
    std::complex<double> prev = 0.0;
    std::complex<double> cur = std::pow(M_PI, -0.25);
    seq.values[0] = LogComplex::from_value(cur);
    for (int k = 0; k < degree_max; ++k) {
        std::complex<double> next =
            w * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
        double m = std::max(std::abs(prev), std::abs(cur));
        if (m > kRescaleAt) {
            double s = std::log(m);
            prev *= std::exp(-s);
            cur *= std::exp(-s);
            scale += s;
        }
        double a = std::abs(cur);
        seq.values[k + 1] =
            a == 0.0 ? LogComplex{} : LogComplex::from_log(std::log(a) + scale, cur / a);
    }
    return seq;
}

LogReal laguerre_neg(int k, int alpha, double x) {
    if (k < 0 || alpha < 0) throw std::invalid_argument("laguerre_neg: k, alpha must be >= 0");
    if (x > 0.0) throw std::domain_error("laguerre_neg: restricted to x <= 0");
    if (!std::isfinite(x)) throw std::invalid_argument("laguerre_neg: non-finite x");

    if (k == 0) return LogReal::from_value(1.0);
    // (n+1) L_{n+1} = (2n+alpha+1-x) L_n - (n+alpha) L_{n-1}; every L positive
    // for x <= 0, so only the magnitude can overflow.
    double scale = 0.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int n = 1; n < k; ++n) {
        double next = ((2.0 * n + alpha + 1.0 - x) * cur - (n + alpha) * prev) / (n + 1.0);
        prev = cur;
        cur = next;
        if (cur > kRescaleAt) {
            double s = std::log(cur);
            prev *= std::exp(-s);
            cur = 1.0;
            scale += s;
        }
    }
    return LogReal::from_log(std::log(cur) + scale, 1.0);
}

LogReal bessel_i(int order, double z) {
    if (order < 0 || order > 2) throw std::invalid_argument("bessel_i: order must be 0, 1 or 2");
    if (!(z >= 0.0) || !std::isfinite(z)) throw std::invalid_argument("bessel_i: need finite z >= 0");
    if (z == 0.0) return order == 0 ? LogReal::from_value(1.0) : LogReal{};

    if (z < kBesselSwitch) {
        // I_nu(z) = (z/2)^nu / nu! * sum_k (z^2/4)^k nu! / (k! (k+nu)!)
        double q = 0.25 * z * z;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 400; ++k) {
            term *= q / (k * (k + order));
            sum += term;
            if (term < sum * 1e-18) break;
        }
        return LogReal::from_log(order * std::log(0.5 * z) - lfact(order) + std::log(sum), 1.0);
    }
    // 10-term asymptotic expansion: I_nu(z) ~ e^z/sqrt(2 pi z) sum_k (-1)^k a_k(nu)/z^k,
    // a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k)
    double nu2 = 4.0 * order * order;
    double sum = 1.0;
    double a = 1.0;
    for (int k = 1; k <= 10; ++k) {
        a *= (nu2 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0);
        sum += a / std::pow(z, k) * ((k % 2) ? -1.0 : 1.0);
    }
    return LogReal::from_log(z - 0.5 * (kLog2Pi + std::log(z)) + std::log(sum), 1.0);
}

LogReal laguerre_asymptotic(int N, int k, int alpha, double Y, LagRegime regime) {
    if (Y <= 0.0) throw std::domain_error("laguerre_asymptotic: need Y > 0");
    if (N < 10) throw std::invalid_argument("laguerre_asymptotic: need N >= 10");
    if (regime == LagRegime::automatic)
        regime = (Y < std::pow(N, -0.25)) ? LagRegime::small_y : LagRegime::order_one;

    double r = 2.0 / (std::sqrt(Y * Y + 4.0) + Y);  // r_*(Y), cancellation-safe
    double lg = N * Y * r - 0.5 * (kLog2Pi + std::log(static_cast<double>(N))) -
                (2.0 * (N - k) + alpha + 1.0) * std::log(r) - (alpha + 0.5) * std::log(Y) -
                0.25 * std::log(Y * Y + 4.0);
    double bracket = 1.0;
    if (regime == LagRegime::small_y) bracket -= r * (alpha * alpha - 0.25) / (4.0 * Y * N);
    return LogReal::from_log(lg + std::log(bracket), 1.0);
}

std::complex<double> sigma_plus(std::complex<double> z) {
    return 0.5 * (std::complex<double>(0, 1) * z + std::sqrt(4.0 - z * z));
}

std::complex<double> sigma_minus(std::complex<double> z) {
    std::complex<double> zb = std::conj(z);
    return 0.5 * (std::complex<double>(0, 1) * zb - std::sqrt(4.0 - zb * zb));
}

namespace {
LogComplex pi_saddle(int k, int N, std::complex<double> zeff, std::complex<double> sigma) {
    const std::complex<double> i(0, 1);
    const double nd = static_cast<double>(N);
    std::complex<double> total = 0.5 * std::log(2.0 * M_PI / (nd * (1.0 + sigma * sigma))) +
                                 static_cast<double>(k) * std::log(-i * sigma) -
                                 0.5 * nd * (1.0 + i * zeff * sigma + 2.0 * std::log(-i * sigma));
    return LogComplex::from_log(total.real(), std::exp(i * total.imag()));
}
}  // namespace

LogComplex hermite_asymptotic_pi(int k, int N, std::complex<double> z) {
    if (z.imag() <= 0.0) throw std::domain_error("hermite_asymptotic_pi: need Im z > 0");
    if (std::abs(z) > 0.5 || N < 50)
        throw std::invalid_argument("hermite_asymptotic_pi: need |z| <= 0.5, N >= 50");
    return pi_saddle(k, N, z, sigma_plus(z));
}

LogComplex hermite_asymptotic_pi_conj(int k, int N, std::complex<double> z) {
    if (z.imag() <= 0.0) throw std::domain_error("hermite_asymptotic_pi_conj: need Im z > 0");
    if (std::abs(z) > 0.5 || N < 50)
        throw std::invalid_argument("hermite_asymptotic_pi_conj: need |z| <= 0.5, N >= 50");
    return pi_saddle(k, N, std::conj(z), sigma_minus(z));
}

}  // namespace olab::specfun
