#pragma once

#include <complex>

#include "gaussacc/symplectic.hpp"

namespace gaussacc {

struct GaussianState {
    Vec mean;
    CovarianceMatrix cov;
};

GaussianState make_state(const Vec& mean, const Mat& cov);

// Tr rho W(w) = exp(i w^t mean - 1/2 w^t cov w).
std::complex<double> char_fn(const GaussianState& state, const Vec& w);

GaussianState displace(const GaussianState& state, const Vec& z);

// Upsilon(alpha) = sqrt(I + (2 alpha Delta^{-1})^{-2}); satisfies
// Upsilon * alpha = alpha * Upsilon^t. Zero for pure states.
Mat upsilon(const CovarianceMatrix& alpha);

// kappa = Upsilon(alpha) * alpha, symmetric.
Mat kappa(const CovarianceMatrix& alpha);

// Tr sqrt(rho_alpha) W(w) = det(2 alpha_hat)^{1/4} exp(-1/2 w^t alpha_hat w)
// with alpha_hat = alpha + kappa(alpha).
double sqrt_char_fn(const CovarianceMatrix& alpha, const Vec& w);

// Tr W(z1) sqrt(rho_alpha) W(-z2) sqrt(rho_alpha).
std::complex<double> sandwich_overlap(const CovarianceMatrix& alpha, const Vec& z1,
                                      const Vec& z2);

// Tr (sqrt(rho_alpha) rho_{beta,z} sqrt(rho_alpha)) W(z1)
//   = c exp(i z1^t K z - 1/2 z1^t a121 z1).
struct SandwichChar {
    std::complex<double> value;
    double c;
    Mat K;
    Mat alpha121;
};
SandwichChar sandwich_char(const CovarianceMatrix& alpha, const CovarianceMatrix& beta,
                           const Vec& z, const Vec& z1);

// Covariance of the normalized sqrt(rho_a) rho_b sqrt(rho_a):
// a - Upsilon(a) a (b + a)^{-1} a Upsilon(a)^t.
CovarianceMatrix sandwich_cov(const CovarianceMatrix& alpha_tilde,
                              const CovarianceMatrix& beta_tilde);

}  // namespace gaussacc
