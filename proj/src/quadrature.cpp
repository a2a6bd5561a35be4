#include "olab/quadrature.hpp"

#include <cmath>
#include <utility>

namespace olab {

namespace {

// G7/K15 nodes and weights on [-1, 1], positive half.  Odd indices plus the
// centre are the embedded Gauss-7 points.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWeightK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWeightG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// one G7/K15 panel; returns (k15, |g7 - k15|)
std::pair<double, double> panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k15 = kWeightK[7] * fc;
    double g7 = kWeightG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double x = h * kNodes[i];
        double fv = f(c - x) + f(c + x);
        k15 += kWeightK[i] * fv;
        if (i % 2 == 1) g7 += kWeightG[i / 2] * fv;
    }
    k15 *= h;
    g7 *= h;
    return {k15, std::abs(k15 - g7)};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           int max_depth, QuadResult& out) {
    auto [v, e] = panel(f, a, b);
    out.evaluations += 15;
    if (e <= tol || depth >= max_depth) {
        out.value += v;
        out.abs_error += e;
        return;
    }
    double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth + 1, max_depth, out);
    adapt(f, m, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol, int max_depth) {
    QuadResult out;
    if (a == b) return out;
    auto [v0, e0] = panel(f, a, b);
    (void)e0;
    double tol = std::max(abs_tol, rel_tol * std::abs(v0));
    adapt(f, a, b, tol, 0, max_depth, out);
    return out;
}

QuadResult integrate_to_inf(const std::function<double(double)>& f, double a, double abs_tol) {
    auto g = [&](double t) {
        double u = 1.0 - t;
        double y = a + t / u;
        return f(y) / (u * u);
    };
    return integrate(g, 0.0, 1.0, abs_tol);
}

}  // namespace olab
