#pragma once

#include <optional>

namespace olab::finite_density {

// Exact finite-n mean densities of the deformed ensemble, assembled in
// log-space (individual factors overflow doubles long before n=50).
class FiniteDensity {
public:
    enum class Form { f1, f2, f3 };

    FiniteDensity(int n, double gamma);  // n >= 3, gamma > 0

    int n() const { return n_; }
    double gamma() const { return gamma_; }

    // two-dimensional mean density rho_n(X, Y), 0 < Y < gamma
    double rho2d(double x, double y) const;

    // density of imaginary parts, all three algebraic forms
    double rho_imag(double y, Form form = Form::f3) const;

    // X-integration of rho2d; consistency oracle for rho_imag
    double rho_imag_from_2d(double y, double abs_tol = 1e-9) const;

    // lazily computed integral of rho_imag over (0, gamma); outputs are
    // rescaled when it drifts from 1 beyond 1e-3
    double normalization() const;
    bool renormalized() const;

private:
    double rho2d_unnormalized(double x, double y) const;
    double rho_imag_unnormalized(double y, Form form) const;
    double norm_factor() const;

    int n_;
    double gamma_;
    mutable std::optional<double> norm_;
};

}  // namespace olab::finite_density
