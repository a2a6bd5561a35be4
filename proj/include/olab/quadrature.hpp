#pragma once

#include <functional>

namespace olab {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

// Adaptive Gauss-Kronrod (7/15 pair) on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-9, double rel_tol = 1e-12, int max_depth = 48);

// [a, inf) through the map y = a + t/(1-t).
QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double abs_tol = 1e-9);

}  // namespace olab
