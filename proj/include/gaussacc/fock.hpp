#pragma once

#include <complex>

#include "gaussacc/symplectic.hpp"

namespace gaussacc {

using CMat = Eigen::MatrixXcd;

// Single-mode operator truncated to the number basis {|0>, ..., |dim-1>}.
struct FockOperator {
    int dim;
    CMat m;
};

// Ladder conventions: q = (a + a^+)/sqrt(2), p = (a - a^+)/(i sqrt(2)).
CMat annihilation(int dim);
CMat position_op(int dim);
CMat momentum_op(int dim);

// Weyl operator W(w) = exp(i (w_x q + w_y p)).
CMat weyl_op(const Vec& w, int dim);

// Displacement D(z) = exp(zeta a^+ - conj(zeta) a), zeta = (x + i y)/sqrt(2);
// shifts means by exactly z.
CMat displacement_op(const Vec& z, int dim);

// exp(r/2 (a^+^2 - a^2)); multiplies the q-variance by e^{2r}.
CMat squeeze_op(double r, int dim);

// exp(i theta a^+ a); conjugation rotates the covariance by
// R(theta) = [[cos, -sin], [sin, cos]].
CMat rotation_op(double theta, int dim);

// Density matrix of the single-mode Gaussian state with the given mean and
// covariance, built as rotation * squeeze * thermal * squeeze^+ * rotation^+
// then displaced. First and second moments are validated against the
// inputs; a mismatch above 1e-3 throws (cutoff too small).
FockOperator fock_state(const Vec& mean, const Mat& cov, int cutoff);

struct FockMoments {
    Vec mean;
    Mat cov;
};
FockMoments fock_moments(const FockOperator& rho);

// Tr rho_alpha D(z) rho_beta D(z)^+ by matrix trace.
double fock_outcome_prob(const Mat& alpha, const Mat& beta, const Vec& z, int cutoff);

// Tr W(z1) sqrt(rho_alpha) W(-z2) sqrt(rho_alpha).
std::complex<double> fock_sqsq(const Mat& alpha, const Vec& z1, const Vec& z2, int cutoff);

}  // namespace gaussacc
