#pragma once

#include <complex>
#include <vector>

#include "olab/log_scaled.hpp"

namespace olab::specfun {

// Orthonormal Hermite polynomials p_0..p_degree_max at a complex argument,
// weight e^{-x^2}.  Internally scaled so degrees up to ~1e5 cannot overflow.
struct HermiteSeq {
    int degree_max = 0;
    std::complex<double> argument;
    std::vector<LogComplex> values;
};

HermiteSeq hermite_orthonormal_seq(int degree_max, std::complex<double> w);

// Standard Laguerre polynomial L_k^{(alpha)}(x) for x <= 0 (all series terms
// positive there, so the result has sign +1).
LogReal laguerre_neg(int k, int alpha, double x);

// Modified Bessel function I_order(z), order in {0,1,2}, z >= 0.  Power series
// below the switch point, asymptotic expansion above.
LogReal bessel_i(int order, double z);
inline constexpr double kBesselSwitch = 30.0;

// Branch selection for the large-N Laguerre asymptotics.
enum class LagRegime { automatic, order_one, small_y };

// Asymptotic value of L_{N-k}^{(alpha)}(-N Y^2) for N >> 1.  The small_y
// branch keeps the subleading bracket; automatic picks it when Y < N^{-1/4}.
LogReal laguerre_asymptotic(int N, int k, int alpha, double Y,
                            LagRegime regime = LagRegime::automatic);

// Asymptotics of pi_k(z) = int e^{-N s^2/2} (z+is)^{N-k} ds for small |z|,
// Im z > 0, through the saddle sigma_+; and the sigma_- companion which gives
// pi_k(conj z).
LogComplex hermite_asymptotic_pi(int k, int N, std::complex<double> z);
LogComplex hermite_asymptotic_pi_conj(int k, int N, std::complex<double> z);

// the two saddle points (sigma_+ solves s^2 - izs - 1 = 0)
std::complex<double> sigma_plus(std::complex<double> z);
std::complex<double> sigma_minus(std::complex<double> z);

}  // namespace olab::specfun
