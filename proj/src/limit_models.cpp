#include "olab/limit_models.hpp"

#include <cmath>
#include <stdexcept>

#include "olab/quadrature.hpp"
#include "olab/specfun.hpp"

namespace olab::limit_models {

double semicircle(double x) {
    if (std::abs(x) >= 2.0) return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * M_PI);
}

double edge_scaled_density(double y, double g) {
    if (!(y > 0.0)) throw std::domain_error("edge_scaled_density: need y > 0");
    if (y < 1e-3) {
        // series of e^{-gy}(g*s - s') with s = sinh(y)/y
        double y2 = y * y;
        double s = 1.0 + y2 / 6.0 + y2 * y2 / 120.0;
        double sp = y / 3.0 + y * y2 / 30.0;
        return std::exp(-g * y) * (g * s - sp);
    }
    double s = std::sinh(y) / y;
    double sp = (y * std::cosh(y) - std::sinh(y)) / (y * y);
    return std::exp(-g * y) * (g * s - sp);
}

double bulk_scaled_density(const BulkPoint& pt) {
    if (std::abs(pt.x) >= 2.0) throw std::domain_error("bulk_scaled_density: need |X| < 2");
    if (!(pt.gamma > 0.0)) throw std::invalid_argument("bulk_scaled_density: gamma must be positive");
    double g = (pt.gamma + 1.0 / pt.gamma) / (2.0 * M_PI * semicircle(pt.x));
    return edge_scaled_density(pt.y, g);
}

// -d/dy [e^{-cy} I1(2y)/y] = (e^{-cy}/y) [c I1(2y) - I0(2y) - I2(2y) + I1(2y)/y],
// c = gamma + 1/gamma.  Small-y series keeps the bracket's cancellation exact.
double limit_imag_density(double y, double gamma) {
    if (!(y > 0.0)) throw std::domain_error("limit_imag_density: need y > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("limit_imag_density: gamma must be positive");
    double c = gamma + 1.0 / gamma;
    if (y < 0.05) {
        // bracket/y = c - y + c y^2/2 - y^3/3 + c y^4/12 - y^5/24
        double y2 = y * y;
        double b = c - y + c * y2 / 2.0 - y * y2 / 3.0 + c * y2 * y2 / 12.0 - y * y2 * y2 / 24.0;
        return std::exp(-c * y) * b;
    }
    double l1 = specfun::bessel_i(1, 2.0 * y).log_mag;
    double g0 = std::exp(specfun::bessel_i(0, 2.0 * y).log_mag - l1);
    double g2 = std::exp(specfun::bessel_i(2, 2.0 * y).log_mag - l1);
    double b = c - g0 - g2 + 1.0 / y;  // in units of I1(2y)
    return std::exp(l1 - c * y) * b / y;
}

LogReal limit_count_fraction_log(double y, double gamma) {
    if (!(y > 0.0)) throw std::domain_error("limit_count_fraction: need y > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("limit_count_fraction: gamma must be positive");
    double c = gamma + 1.0 / gamma;
    LogReal i1 = specfun::bessel_i(1, 2.0 * y);
    return LogReal::from_log(i1.log_mag - c * y - std::log(y), 1.0);
}

double limit_count_fraction(double y, double gamma) {
    return limit_count_fraction_log(y, gamma).value();
}

LogReal expected_count_log(long n, double y, double gamma, CountVariant v) {
    if (!(y > 0.0)) throw std::domain_error("expected_count: need Y > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("expected_count: gamma must be positive");
    const double ny = static_cast<double>(n) * y;
    if (v == CountVariant::gaussian_tail) {
        double lg = -ny * (1.0 - gamma) * (1.0 - gamma) / gamma -
                    std::log(2.0 * std::sqrt(M_PI * n) * y * std::sqrt(y));
        return LogReal::from_log(lg, 1.0);
    }
    LogReal i1 = specfun::bessel_i(1, 2.0 * ny);
    double c = gamma + 1.0 / gamma;
    return LogReal::from_log(i1.log_mag - ny * c - std::log(y), 1.0);
}

double expected_count(long n, double y, double gamma, CountVariant v) {
    return expected_count_log(n, y, gamma, v).value();
}

double window_count(long n, double y, double gamma, double w) {
    if (!(w > 0.0) || w > 2.0) throw std::invalid_argument("window_count: need 0 < W <= 2");
    if (!(y > 0.0)) throw std::domain_error("window_count: need Y > 0");
    const double u = static_cast<double>(n) * y;
    const double c = gamma + 1.0 / gamma;
    // T_W(u) - T_W(-u) = 2 e^{2u} int_0^W [e^{u(r-2)} - e^{-u(r+2)}] dX, r = sqrt(4-X^2);
    // the integrand is bounded by 1 so only the prefactor needs log handling
    auto f = [u](double x) {
        double r = std::sqrt(std::max(0.0, 4.0 - x * x));
        return std::exp(u * (r - 2.0)) - std::exp(-u * (r + 2.0));
    };
    auto q = integrate(f, 0.0, w, 1e-12, 1e-10);
    if (q.value <= 0.0) return 0.0;
    double lg = -u * c + 2.0 * u + std::log(2.0 * q.value) - std::log(4.0 * M_PI * y);
    return std::exp(lg);
}

double solve_extreme_scale(long n, double gamma) {
    if (n < 10) throw std::invalid_argument("solve_extreme_scale: need N >= 10");
    if (!(gamma > 0.0)) throw std::invalid_argument("solve_extreme_scale: gamma must be positive");
    double lo = 1e-9, hi = gamma;
    // expected_count is strictly decreasing; count(lo) ~ N > 1, count(hi) < 1
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (expected_count_log(n, mid, gamma).log_mag > 0.0)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) <= 1e-12 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace olab::limit_models
