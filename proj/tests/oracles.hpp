#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <cmath>
#include <functional>
#include <vector>

#include "olab/linalg.hpp"

namespace oracles {

// ---- double-double arithmetic (~32 significant digits) ----
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    DD t = two_sum(s.hi, s.lo);
    return t;
}

inline DD dd_mul(DD a, DD b) {
    double p = a.hi * b.hi;
    double e = std::fma(a.hi, b.hi, -p);
    e += a.hi * b.lo + a.lo * b.hi;
    DD t = two_sum(p, e);
    return t;
}

inline DD dd_div(DD a, double b) {
    double q1 = a.hi / b;
    double r = std::fma(-q1, b, a.hi) + a.lo;
    double q2 = r / b;
    DD t = two_sum(q1, q2);
    return t;
}

// Exact Laguerre series at x <= 0, all terms positive, summed in double-double:
// L_k^{(a)}(x) = sum_i binom(k+a, k-i) (-x)^i / i!
inline double laguerre_series_dd(int k, int alpha, double x) {
    DD term{1.0, 0.0};
    for (int j = 1; j <= k; ++j) term = dd_div(dd_mul(term, {static_cast<double>(alpha + j), 0.0}), j);
    DD sum = term;  // i = 0 term = binom(k+alpha, k)
    for (int i = 0; i < k; ++i) {
        // term_{i+1} = term_i * (-x)(k-i) / ((i+1)(alpha+i+1))
        term = dd_mul(term, {-x * (k - i), 0.0});
        term = dd_div(term, (i + 1.0) * (alpha + i + 1.0));
        sum = dd_add(sum, term);
    }
    return sum.hi;
}

// ---- Gauss-Hermite rule by Golub-Welsch, reusing the tridiagonal QL ----
struct GaussRule {
    std::vector<double> nodes, weights;
};

inline GaussRule gauss_hermite(int n) {
    std::vector<double> d(n, 0.0), e(n - 1), row(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) e[i] = std::sqrt((i + 1) / 2.0);
    row[0] = 1.0;
    auto r = olab::linalg::tridiag_eigen_row(d, e, row);
    GaussRule g;
    g.nodes = r.lambda;
    g.weights.resize(n);
    const double mu0 = std::sqrt(M_PI);
    for (int i = 0; i < n; ++i) g.weights[i] = mu0 * r.row[i] * r.row[i];
    return g;
}

// ---- regularized incomplete gamma Q(a, x) and chi-square survival ----
inline double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 0.0;
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        // P by series, Q = 1-P
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        return 1.0 - p;
    }
    // Q by continued fraction
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-30) d = 1e-30;
        c = b + an / c;
        if (std::abs(c) < 1e-30) c = 1e-30;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double chi2_survival(double stat, int dof) { return gamma_q(0.5 * dof, 0.5 * stat); }

// two-sample chi-square on equal-length count vectors; returns p-value
inline double two_sample_chi2_p(const std::vector<long long>& a, const std::vector<long long>& b) {
    double na = 0, nb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        na += a[i];
        nb += b[i];
    }
    double k1 = std::sqrt(nb / na), k2 = std::sqrt(na / nb);
    double stat = 0.0;
    int dof = -1;
    for (size_t i = 0; i < a.size(); ++i) {
        double tot = a[i] + b[i];
        if (tot < 8) continue;  // merge-poor bins dropped
        double t = k1 * a[i] - k2 * b[i];
        stat += t * t / tot;
        ++dof;
    }
    if (dof < 1) return 1.0;
    return chi2_survival(stat, dof);
}

// central finite difference
inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles
