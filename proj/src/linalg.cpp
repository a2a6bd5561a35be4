#include "olab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "olab/errors.hpp"

namespace olab::linalg {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

Tridiagonal hermitian_tridiagonalize(CMatrix a) {
    const int n = a.n();
    Tridiagonal t;
    t.d.resize(n);
    t.e.assign(std::max(0, n - 1), 0.0);
    std::vector<cplx> v(n), p(n);

    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1;
        double xnorm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            v[i] = a(k + 1 + i, k);
            xnorm2 += std::norm(v[i]);
        }
        double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) {
            t.e[k] = 0.0;
            continue;
        }
        double aab = std::abs(v[0]);
        cplx phase = aab == 0.0 ? cplx(1.0, 0.0) : v[0] / aab;
        v[0] += phase * xnorm;
        double tau = 1.0 / (xnorm2 + aab * xnorm);  // = 2/||v||^2

        // p = tau * A22 * v;  w = p - (tau/2)(v^* p) v;  A22 -= v w^* + w v^*
        for (int i = 0; i < m; ++i) {
            cplx s = 0.0;
            for (int j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
            p[i] = tau * s;
        }
        cplx vp = 0.0;
        for (int i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
        cplx half = 0.5 * tau * vp;
        for (int i = 0; i < m; ++i) p[i] -= half * v[i];
        for (int i = 0; i < m; ++i) {
            const cplx vi = v[i], wi = p[i];
            for (int j = 0; j < m; ++j)
                a(k + 1 + i, k + 1 + j) -= vi * std::conj(p[j]) + wi * std::conj(v[j]);
        }
        // pivot column collapses to a single (complex) subdiagonal entry; only
        // its modulus matters after the diagonal phase similarity
        t.e[k] = xnorm;
    }
    if (n >= 2) t.e[n - 2] = std::abs(a(n - 1, n - 2));
    for (int i = 0; i < n; ++i) t.d[i] = a(i, i).real();
    return t;
}

TridiagEigenRow tridiag_eigen_row(std::vector<double> d, std::vector<double> e,
                                  std::vector<double> row) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return {};
    e.resize(n, 0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            while (m < n - 1) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
                ++m;
            }
            if (m == l) break;
            if (++iter > 80) throw SolverFailure("tridiag_eigen_row: QL did not converge", iter);

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, pshift = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= pshift;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - pshift;
                r = (d[i] - g) * s + 2.0 * c * b;
                pshift = s * r;
                d[i + 1] = g + pshift;
                g = c * r - b;
                f = row[i + 1];
                row[i + 1] = s * row[i] + c * f;
                row[i] = c * row[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= pshift;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    TridiagEigenRow out;
    out.lambda.resize(n);
    out.row.resize(n);
    for (int i = 0; i < n; ++i) {
        out.lambda[i] = d[idx[i]];
        out.row[i] = row[idx[i]];
    }
    return out;
}

namespace {

void hessenberg_reduce(CMatrix& a) {
    const int n = a.n();
    std::vector<cplx> v(n);
    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1;
        double xnorm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            v[i] = a(k + 1 + i, k);
            xnorm2 += std::norm(v[i]);
        }
        double below2 = xnorm2 - std::norm(v[0]);
        if (below2 <= xnorm2 * kEps * kEps) continue;  // already in Hessenberg form here
        double xnorm = std::sqrt(xnorm2);
        double aab = std::abs(v[0]);
        cplx phase = aab == 0.0 ? cplx(1.0, 0.0) : v[0] / aab;
        v[0] += phase * xnorm;
        double tau = 1.0 / (xnorm2 + aab * xnorm);

        // A <- P A on rows k+1.., columns k..n-1
        for (int j = k; j < n; ++j) {
            cplx s = 0.0;
            for (int i = 0; i < m; ++i) s += std::conj(v[i]) * a(k + 1 + i, j);
            s *= tau;
            for (int i = 0; i < m; ++i) a(k + 1 + i, j) -= s * v[i];
        }
        // A <- A P on columns k+1..
        for (int i = 0; i < n; ++i) {
            cplx s = 0.0;
            for (int j = 0; j < m; ++j) s += a(i, k + 1 + j) * v[j];
            s *= tau;
            for (int j = 0; j < m; ++j) a(i, k + 1 + j) -= s * std::conj(v[j]);
        }
    }
}

struct Givens {
    double c;
    cplx s;
    cplx r;
};

Givens make_givens(cplx x, cplx y) {
    double ax = std::abs(x), ay = std::abs(y);
    if (ay == 0.0) return {1.0, 0.0, x};
    if (ax == 0.0) return {0.0, std::conj(y) / ay, ay};
    double nrm = std::hypot(ax, ay);
    cplx ph = x / ax;
    return {ax / nrm, ph * std::conj(y) / nrm, ph * nrm};
}

// eigenvalues of [[a,b],[c,d]]
std::pair<cplx, cplx> eig2(cplx a, cplx b, cplx c, cplx d) {
    cplx tr = a + d;
    cplx disc = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
    return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

}  // namespace

std::vector<cplx> eigenvalues_dense(CMatrix a, int max_sweeps_per_n) {
    const int n = a.n();
    std::vector<cplx> ev(n);
    if (n == 0) return ev;
    if (n == 1) return {a(0, 0)};

    hessenberg_reduce(a);

    long total = 0;
    const long budget = static_cast<long>(max_sweeps_per_n) * n;
    int hi = n - 1;
    int since_deflation = 0;
    while (hi >= 0) {
        if (hi == 0) {
            ev[0] = a(0, 0);
            break;
        }
        // deflation scan; fall back to a window-scale threshold when the
        // neighbouring diagonal entries vanish (companion matrices)
        double window_scale = 0.0;
        for (int i = 0; i <= hi; ++i)
            window_scale = std::max(window_scale, std::abs(a(i, i)) + std::abs(a(i, std::min(i + 1, hi))));
        int lo = hi;
        while (lo > 0) {
            double off = std::abs(a(lo, lo - 1));
            double tst = std::abs(a(lo - 1, lo - 1)) + std::abs(a(lo, lo));
            if (tst == 0.0) tst = window_scale;
            if (off <= kEps * tst) {
                a(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            ev[hi] = a(hi, hi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (lo == hi - 1) {
            auto [z1, z2] = eig2(a(lo, lo), a(lo, hi), a(hi, lo), a(hi, hi));
            ev[hi] = z1;
            ev[hi - 1] = z2;
            hi -= 2;
            since_deflation = 0;
            continue;
        }
        if (++total > budget)
            throw SolverFailure("eigenvalues_dense: QR iteration exceeded budget", total);

        // Wilkinson shift from the trailing 2x2; exceptional shift on stalls
        cplx shift;
        if (++since_deflation % 12 == 0) {
            shift = a(hi, hi) + 0.75 * std::abs(a(hi, hi - 1));
        } else {
            auto [z1, z2] = eig2(a(hi - 1, hi - 1), a(hi - 1, hi), a(hi, hi - 1), a(hi, hi));
            shift = (std::abs(z1 - a(hi, hi)) < std::abs(z2 - a(hi, hi))) ? z1 : z2;
        }

        cplx x = a(lo, lo) - shift;
        cplx y = a(lo + 1, lo);
        for (int k = lo; k < hi; ++k) {
            Givens g = make_givens(x, y);
            // rows k, k+1
            int jstart = (k > lo) ? k - 1 : lo;
            for (int j = jstart; j <= hi; ++j) {
                cplx t1 = a(k, j), t2 = a(k + 1, j);
                a(k, j) = g.c * t1 + g.s * t2;
                a(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
            }
            // columns k, k+1
            int iend = std::min(k + 2, hi);
            for (int i = lo; i <= iend; ++i) {
                cplx t1 = a(i, k), t2 = a(i, k + 1);
                a(i, k) = g.c * t1 + std::conj(g.s) * t2;
                a(i, k + 1) = -g.s * t1 + g.c * t2;
            }
            if (k < hi - 1) {
                x = a(k + 1, k);
                y = a(k + 2, k);
            }
        }
    }
    return ev;
}

namespace {

// one Aberth-Ehrlich pass; returns the largest correction relative to 1+|z|.
// Hand-rolled complex arithmetic: the poles are real and libm complex
// division is far too slow for the O(n^2) inner loops.
double aberth_sweep(const std::vector<double>& lam, const std::vector<double>& w, double gamma,
                    std::vector<cplx>& z, std::vector<char>& locked) {
    const int n = static_cast<int>(z.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        if (locked[i]) continue;
        const double zr = z[i].real(), zi = z[i].imag();
        double s1r = 0, s1i = 0, s2r = 0, s2i = 0, spr = 0, spi = 0;
        for (int j = 0; j < n; ++j) {
            double dr = zr - lam[j];
            double nrm = dr * dr + zi * zi;
            if (nrm < 1e-280) {
                dr = 0.0;
                nrm = 1e-24;
            }
            double inv = 1.0 / nrm;
            double ir = dr * inv, ii = -zi * inv;  // 1/(z - lam_j)
            spr += ir;
            spi += ii;
            double tr = w[j] * ir, ti = w[j] * ii;
            s1r += tr;
            s1i += ti;
            s2r += tr * ir - ti * ii;
            s2i += tr * ii + ti * ir;
        }
        // f = 1 - i*gamma*s1; f' = i*gamma*s2; inv_u = spole + f'/f
        double fr = 1.0 + gamma * s1i, fi = -gamma * s1r;
        double fpr = -gamma * s2i, fpi = gamma * s2r;
        double fn = fr * fr + fi * fi;
        if (fn == 0.0) fn = 1e-300;
        double iur = spr + (fpr * fr + fpi * fi) / fn;
        double iui = spi + (fpi * fr - fpr * fi) / fn;
        double qr = 0, qi = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double dr = zr - z[j].real(), di = zi - z[j].imag();
            double nrm = dr * dr + di * di;
            if (nrm < 1e-280) continue;
            double inv = 1.0 / nrm;
            qr += dr * inv;
            qi -= di * inv;
        }
        double denr = iur - qr, deni = iui - qi;
        double dn = denr * denr + deni * deni;
        if (dn == 0.0) continue;
        double stepr = denr / dn, stepi = -deni / dn;
        z[i] = cplx(zr - stepr, zi - stepi);
        double rel = std::sqrt(stepr * stepr + stepi * stepi) / (1.0 + std::abs(z[i]));
        worst = std::max(worst, rel);
        if (rel < 1e-14) locked[i] = 1;
    }
    return worst;
}

}  // namespace

namespace {

// gamma-homotopy Aberth run with a fixed stage count; returns false on stall
bool resonance_attempt(const std::vector<double>& lambda, const std::vector<double>& w,
                       double gamma, int stages, std::vector<cplx>& z, long& sweeps) {
    const int n = static_cast<int>(lambda.size());
    for (int s = 1; s <= stages; ++s) {
        double g = gamma * s / stages;
        if (s == 1) {
            for (int i = 0; i < n; ++i) z[i] = cplx(lambda[i], g * std::max(w[i], 1e-12));
        }
        std::vector<char> locked(n, 0);
        double prev = 1e300;
        int it = 0, plateau = 0;
        for (;;) {
            double worst = aberth_sweep(lambda, w, g, z, locked);
            ++it;
            ++sweeps;
            if (worst <= 1e-13) break;
            // roundoff plateau: corrections stop shrinking at a level already
            // far below the downstream residual gates
            if (worst <= 1e-11 && worst > 0.5 * prev) {
                if (++plateau >= 2) break;
            } else {
                plateau = 0;
            }
            prev = worst;
            if (it >= 40 * stages) {
                if (worst <= 1e-10) break;
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<cplx> resonance_roots(const std::vector<double>& lambda, const std::vector<double>& w,
                                  double gamma, long* sweeps_out) {
    const int n = static_cast<int>(lambda.size());
    std::vector<cplx> z(n);
    if (sweeps_out) *sweeps_out = 0;
    if (n == 0) return z;
    if (n == 1) {
        z[0] = cplx(lambda[0], gamma * w[0]);
        return z;
    }

    long sweeps = 0;
    int stages = std::max(1, static_cast<int>(std::ceil(gamma)));
    for (int attempt = 0; attempt < 4; ++attempt, stages *= 2) {
        if (resonance_attempt(lambda, w, gamma, stages, z, sweeps)) {
            if (sweeps_out) *sweeps_out = sweeps;
            return z;
        }
    }
    throw SolverFailure("resonance_roots: Aberth iteration stalled", sweeps);
}

CMatrix haar_from_ginibre(CMatrix a) {
    const int n = a.n();
    std::vector<std::vector<cplx>> vs;
    std::vector<double> taus;
    std::vector<cplx> rdiag(n);

    for (int k = 0; k < n; ++k) {
        const int m = n - k;
        std::vector<cplx> v(m);
        double xnorm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            v[i] = a(k + i, k);
            xnorm2 += std::norm(v[i]);
        }
        double xnorm = std::sqrt(xnorm2);
        double aab = std::abs(v[0]);
        cplx phase = aab == 0.0 ? cplx(1.0, 0.0) : v[0] / aab;
        double tau = 0.0;
        if (xnorm > 0.0) {
            v[0] += phase * xnorm;
            tau = 1.0 / (xnorm2 + aab * xnorm);
        }
        // apply P_k to remaining columns
        for (int j = k; j < n; ++j) {
            cplx s = 0.0;
            for (int i = 0; i < m; ++i) s += std::conj(v[i]) * a(k + i, j);
            s *= tau;
            for (int i = 0; i < m; ++i) a(k + i, j) -= s * v[i];
        }
        rdiag[k] = a(k, k);  // = -phase * xnorm
        vs.push_back(std::move(v));
        taus.push_back(tau);
    }

    // Q = P_0 P_1 ... P_{n-1} applied to the identity
    CMatrix q(n);
    for (int i = 0; i < n; ++i) q(i, i) = 1.0;
    for (int k = n - 1; k >= 0; --k) {
        const int m = n - k;
        const auto& v = vs[k];
        double tau = taus[k];
        for (int j = k; j < n; ++j) {
            cplx s = 0.0;
            for (int i = 0; i < m; ++i) s += std::conj(v[i]) * q(k + i, j);
            s *= tau;
            for (int i = 0; i < m; ++i) q(k + i, j) -= s * v[i];
        }
    }
    // phase fix: scale column j by R_jj/|R_jj| so R's diagonal is positive
    for (int j = 0; j < n; ++j) {
        double r = std::abs(rdiag[j]);
        cplx ph = r == 0.0 ? cplx(1.0, 0.0) : rdiag[j] / r;
        for (int i = 0; i < n; ++i) q(i, j) *= ph;
    }
    return q;
}

}  // namespace olab::linalg
