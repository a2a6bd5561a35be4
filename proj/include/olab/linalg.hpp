#pragma once

#include <complex>
#include <vector>

namespace olab::linalg {

using cplx = std::complex<double>;

// Dense complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    CMatrix(int n, std::vector<cplx> data) : n_(n), a_(std::move(data)) {}

    int n() const { return n_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

struct Tridiagonal {
    std::vector<double> d;  // n diagonal entries
    std::vector<double> e;  // n-1 subdiagonal magnitudes
};

// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
// form.  The similarity fixes the first basis vector, so first-row eigenvector
// weights carry over unchanged in modulus.
Tridiagonal hermitian_tridiagonalize(CMatrix a);

struct TridiagEigenRow {
    std::vector<double> lambda;  // ascending
    std::vector<double> row;     // the supplied row transformed alongside
};

// Implicit-shift QL eigenvalues of a symmetric tridiagonal matrix, rotating a
// single accompanying row (pass e_1 to obtain first-component weights).
TridiagEigenRow tridiag_eigen_row(std::vector<double> d, std::vector<double> e,
                                  std::vector<double> row);

// Eigenvalues of a general complex matrix: Householder reduction to upper
// Hessenberg, then Wilkinson-shifted QR, eigenvalues only.  Throws
// SolverFailure past max_sweeps_per_n * n iterations.
std::vector<cplx> eigenvalues_dense(CMatrix a, int max_sweeps_per_n = 30);

// All n roots of 1 - i*gamma * sum_j w_j/(z - lambda_j) = 0, i.e. the
// spectrum of diag(lambda) + i*gamma*w^{1/2}(w^{1/2})^T.  Aberth-Ehrlich with
// gamma-homotopy warm starts; O(n^2) per sweep.  Unsorted.
std::vector<cplx> resonance_roots(const std::vector<double>& lambda,
                                  const std::vector<double>& w, double gamma,
                                  long* sweeps_out = nullptr);

// Haar-distributed unitary from a Ginibre sample: Householder QR with the
// R-diagonal phase correction.
CMatrix haar_from_ginibre(CMatrix ginibre);

}  // namespace olab::linalg
