#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "olab/linalg.hpp"

namespace olab::rmt {

using linalg::cplx;

// GUE sample with E Tr H^2 = n: diagonal N(0, 1/n), off-diagonal complex with
// E|H_jk|^2 = 1/n.  Deterministic per (n, seed).
struct HermitianSample {
    int n = 0;
    std::vector<cplx> entries;  // row-major, exactly Hermitian by construction
    std::uint64_t seed = 0;

    const cplx& at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

HermitianSample sample_gue(int n, std::uint64_t seed);

// J = H + i*gamma*e1 e1^T
struct DeformedMatrix {
    int n = 0;
    double gamma = 0.0;
    std::vector<cplx> entries;

    const cplx& at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

DeformedMatrix build_deformation(const HermitianSample& h, double gamma);

struct Spectrum {
    std::vector<cplx> eigenvalues;  // descending imaginary part, ties by real part
    double sum_imag = 0.0;
    double sum_real = 0.0;
    double trace_residual = 0.0;  // |sum z_j - Tr J|
    std::uint64_t source_seed = 0;
};

// All eigenvalues of J.  Uses the Hermitian structure (tridiagonalize H, QL
// with first-row weights, secular roots); falls back to dense Hessenberg QR
// when the residual gate fails.
Spectrum eigenvalues(const DeformedMatrix& m);

// Dense path on an arbitrary complex matrix (used for the CUE ensemble and as
// a cross-check oracle).
Spectrum eigenvalues_dense_path(const linalg::CMatrix& a, double gamma_for_checks = 0.0,
                                std::uint64_t seed = 0);

struct UnitaryMatrix {
    int n = 0;
    std::vector<cplx> entries;
    std::uint64_t seed = 0;

    const cplx& at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

// Haar unitary via QR of a complex Ginibre sample with the phase correction.
UnitaryMatrix sample_haar_unitary(int n, std::uint64_t seed);

// Spectral-measure sample of the deformed ensemble in O(n^2): tridiagonal GUE
// model (diag N(0,1/n), subdiag chi_{2(n-i)}/sqrt(2n)) plus independent
// Dirichlet(1,..,1) first-row weights; equals the dense route in law.
struct SpectralSample {
    std::vector<double> lambda;  // GUE eigenvalues, ascending
    std::vector<double> weight;  // first-component weights, sum 1
};

SpectralSample sample_gue_spectral(int n, std::uint64_t seed);

// Spectrum of J built from a spectral sample (secular solve).
Spectrum deformed_spectrum_from_spectral(const SpectralSample& s, double gamma,
                                         std::uint64_t seed = 0);

// sort helper shared by all routes: descending Im, ties ascending Re
void sort_spectrum(std::vector<cplx>& z);

}  // namespace olab::rmt
