#include <cmath>
#include <complex>

#include "doctest.h"
#include "olab/errors.hpp"
#include "olab/linalg.hpp"
#include "olab/rng.hpp"
#include "oracles.hpp"

using namespace olab;
using namespace olab::linalg;

namespace {

CMatrix random_hermitian(int n, std::uint64_t seed) {
    CounterRng rng(seed, 0, 0);
    CMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = rng.next_gaussian();
        for (int j = i + 1; j < n; ++j) {
            cplx v = rng.next_complex_gaussian(1.0 / std::sqrt(2.0));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    return a;
}

// (A^k)_{00}
cplx matpow00(const CMatrix& a, int k) {
    int n = a.n();
    std::vector<cplx> v(n, 0.0);
    v[0] = 1.0;
    for (int rep = 0; rep < k; ++rep) {
        std::vector<cplx> w(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += a(i, j) * v[j];
        v = std::move(w);
    }
    return v[0];
}

}  // namespace

TEST_CASE("gauss-hermite rule from tridiagonal QL") {
    auto g = oracles::gauss_hermite(2);
    CHECK(std::abs(g.nodes[0] + 1.0 / std::sqrt(2.0)) <= 1e-14);
    CHECK(std::abs(g.nodes[1] - 1.0 / std::sqrt(2.0)) <= 1e-14);
    CHECK(g.weights[0] == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-13));

    auto g64 = oracles::gauss_hermite(64);
    double sum = 0.0, m2 = 0.0;
    for (int i = 0; i < 64; ++i) {
        sum += g64.weights[i];
        m2 += g64.weights[i] * g64.nodes[i] * g64.nodes[i];
    }
    CHECK(sum == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(m2 == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-12));
}

TEST_CASE("hermitian tridiagonalization preserves the spectral measure at e1") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        int n = 9;
        CMatrix a = random_hermitian(n, seed);
        auto tri = hermitian_tridiagonalize(a);
        std::vector<double> row(n, 0.0);
        row[0] = 1.0;
        auto er = tridiag_eigen_row(tri.d, tri.e, row);

        // moments sum w_j lambda_j^k must equal (A^k)_{00}
        for (int k = 0; k <= 4; ++k) {
            double mom = 0.0;
            for (int i = 0; i < n; ++i) mom += er.row[i] * er.row[i] * std::pow(er.lambda[i], k);
            cplx direct = matpow00(a, k);
            CHECK(std::abs(direct.imag()) <= 1e-10);
            CHECK(mom == doctest::Approx(direct.real()).epsilon(1e-9));
        }
    }
}

TEST_CASE("dense complex QR eigenvalues") {
    // 2x2 against the quadratic formula
    CMatrix a(2);
    a(0, 0) = cplx(0.3, 1.0);
    a(0, 1) = cplx(-0.2, 0.4);
    a(1, 0) = cplx(0.7, 0.1);
    a(1, 1) = cplx(-0.5, 0.0);
    auto ev = eigenvalues_dense(a);
    cplx tr = a(0, 0) + a(1, 1);
    cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    cplx disc = std::sqrt(tr * tr - 4.0 * det);
    cplx z1 = 0.5 * (tr + disc), z2 = 0.5 * (tr - disc);
    double d1 = std::min(std::abs(ev[0] - z1) + std::abs(ev[1] - z2),
                         std::abs(ev[0] - z2) + std::abs(ev[1] - z1));
    CHECK(d1 <= 1e-12);

    // unitary-conjugated upper triangular matrix: eigenvalues = diagonal
    int n = 12;
    CounterRng rng(5, 0, 0);
    CMatrix t(n);
    std::vector<cplx> diag(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) t(i, j) = rng.next_complex_gaussian(1.0);
        diag[i] = t(i, i);
    }
    CMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian(1.0);
    CMatrix u = haar_from_ginibre(g);
    CMatrix b(n);  // b = u t u^*
    CMatrix tmp(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0;
            for (int k = 0; k < n; ++k) s += u(i, k) * t(k, j);
            tmp(i, j) = s;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0;
            for (int k = 0; k < n; ++k) s += tmp(i, k) * std::conj(u(j, k));
            b(i, j) = s;
        }
    auto evb = eigenvalues_dense(b);
    std::sort(diag.begin(), diag.end(), [](cplx x, cplx y) { return x.real() < y.real(); });
    std::sort(evb.begin(), evb.end(), [](cplx x, cplx y) { return x.real() < y.real(); });
    for (int i = 0; i < n; ++i) CHECK(std::abs(evb[i] - diag[i]) <= 1e-9);

    // companion matrix of (z-2)(z+1)(z-3i) = z^3 + (-1-3i)z^2 + (-2+ -3i... ) expand directly
    cplx r1(2, 0), r2(-1, 0), r3(0, 3);
    cplx c2 = -(r1 + r2 + r3);
    cplx c1 = r1 * r2 + r1 * r3 + r2 * r3;
    cplx c0 = -r1 * r2 * r3;
    CMatrix comp(3);
    comp(0, 0) = -c2;
    comp(0, 1) = -c1;
    comp(0, 2) = -c0;
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    auto evc = eigenvalues_dense(comp);
    for (cplx root : {r1, r2, r3}) {
        double best = 1e9;
        for (cplx z : evc) best = std::min(best, std::abs(z - root));
        CHECK(best <= 1e-12);
    }
}

TEST_CASE("dense QR agrees with tridiagonal QL on Hermitian input") {
    int n = 16;
    CMatrix a = random_hermitian(n, 99);
    auto tri = hermitian_tridiagonalize(a);
    std::vector<double> row(n, 0.0);
    row[0] = 1.0;
    auto er = tridiag_eigen_row(tri.d, tri.e, row);
    auto ev = eigenvalues_dense(a);
    std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) { return x.real() < y.real(); });
    for (int i = 0; i < n; ++i) {
        CHECK(std::abs(ev[i].imag()) <= 1e-10);
        CHECK(ev[i].real() == doctest::Approx(er.lambda[i]).epsilon(1e-10));
    }
}

TEST_CASE("resonance secular roots") {
    // n=1 closed form
    auto z1 = resonance_roots({0.4}, {1.0}, 2.5);
    CHECK(std::abs(z1[0] - cplx(0.4, 2.5)) <= 1e-14);

    // against the dense solve of diag(lambda) + i gamma sqrt(w) sqrt(w)^T
    CounterRng rng(17, 0, 0);
    int n = 7;
    std::vector<double> lam(n), w(n);
    double tot = 0;
    for (int i = 0; i < n; ++i) {
        lam[i] = 2.0 * rng.next_double() - 1.0;
        w[i] = -std::log(1.0 - rng.next_double());
        tot += w[i];
    }
    std::sort(lam.begin(), lam.end());
    for (double& x : w) x /= tot;
    double gamma = 1.7;
    CMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = lam[i];
        for (int j = 0; j < n; ++j)
            a(i, j) += cplx(0, gamma) * std::sqrt(w[i]) * std::sqrt(w[j]);
    }
    auto dense = eigenvalues_dense(a);
    auto sec = resonance_roots(lam, w, gamma);
    auto key = [](cplx x, cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    };
    std::sort(dense.begin(), dense.end(), key);
    std::sort(sec.begin(), sec.end(), key);
    for (int i = 0; i < n; ++i) CHECK(std::abs(dense[i] - sec[i]) <= 1e-10);

    // conservation: sum Im z = gamma * sum w = gamma
    cplx s = 0;
    for (cplx z : sec) s += z;
    CHECK(s.imag() == doctest::Approx(gamma).epsilon(1e-12));
}

TEST_CASE("haar unitary from ginibre") {
    int n = 10;
    CounterRng rng(3, 0, 0);
    CMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian(1.0);
    CMatrix q = haar_from_ginibre(g);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0;
            for (int k = 0; k < n; ++k) s += std::conj(q(k, i)) * q(k, j);
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    CHECK(worst <= 1e-12);
}
