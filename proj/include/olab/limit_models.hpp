#pragma once

#include "olab/log_scaled.hpp"

namespace olab::limit_models {

// semicircle density nu(X) = sqrt(4 - X^2)/(2 pi) on [-2, 2]
double semicircle(double x);

struct BulkPoint {
    double x;      // position in (-2, 2)
    double y;      // height in units of 1/(2 pi nu(X) N)
    double gamma;  // coupling
};

// scaled bulk density rho~(X, y) = -d/dy [e^{-y g(X)} sinh(y)/y],
// g(X) = (gamma + 1/gamma) / (2 pi nu(X)); analytic derivative
double bulk_scaled_density(const BulkPoint& pt);

// shared closed form -d/dy [e^{-g y} sinh(y)/y] (also the CUE radial limit)
double edge_scaled_density(double y, double g);

// limiting density of scaled imaginary parts y = N Y (Bessel form)
double limit_imag_density(double y, double gamma);

// limiting fraction of eigenvalues above level y/N: e^{-y(g+1/g)} I_1(2y)/y
double limit_count_fraction(double y, double gamma);
LogReal limit_count_fraction_log(double y, double gamma);

enum class CountVariant { bessel, gaussian_tail };

// expected number of eigenvalues above Y: e^{-NY(g+1/g)} I_1(2NY)/Y, or the
// Gaussian-tail simplification
double expected_count(long n, double y, double gamma, CountVariant v = CountVariant::bessel);
LogReal expected_count_log(long n, double y, double gamma, CountVariant v = CountVariant::bessel);

// expected count above Y restricted to |X| < W
double window_count(long n, double y, double gamma, double w);

// the level Y_e with expected_count(n, Y_e, gamma) = 1 (bisection)
double solve_extreme_scale(long n, double gamma);

}  // namespace olab::limit_models
