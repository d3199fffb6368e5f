#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace gaussacc {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Input failed a structural or quantum-validity check (bad dimensions,
// asymmetric matrix, uncertainty-relation violation, singular system).
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// The threshold condition gating the closed-form accessible information
// does not hold; carries the offending minimum eigenvalue.
class threshold_error : public std::runtime_error {
  public:
    threshold_error(const std::string& what, double margin)
        : std::runtime_error(what), margin_(margin) {}
    double margin() const { return margin_; }

  private:
    double margin_;
};

inline Mat symmetrize(const Mat& m) { return 0.5 * (m + m.transpose()); }

bool is_symmetric(const Mat& m, double rel_tol = 1e-10);

// Symmetric PSD square root. Eigenvalues in [-1e-12 * scale, 0) are
// clamped to zero; anything more negative throws.
Mat sym_sqrt(const Mat& m);

// log det of a symmetric positive definite matrix. Throws validation_error
// if not PD or condition number exceeds 1e12.
double logdet_pd(const Mat& m);

double min_eig_sym(const Mat& m);

// Spectral data of a real skew-symmetric matrix B, obtained from the
// Hermitian matrix iB. Eigenvalues are real and come in +/- pairs; this
// route avoids squaring the condition number (unlike forming B B^t).
struct SkewEig {
    Eigen::MatrixXcd vectors;  // eigenvectors of iB
    Vec values;                // eigenvalues of iB, ascending
};

SkewEig skew_eig(const Mat& b);

// Polar part |B|^{-1} B of a nonsingular skew-symmetric B (real, orthogonal,
// skew). Throws if an eigenvalue magnitude falls below abs_tol.
Mat skew_polar(const SkewEig& e, double abs_tol = 1e-12);

// f applied to the eigenvalue magnitudes |lambda| of B: the symmetric real
// matrix U f(|lambda|) U^*. Used for matrix functions of |B|.
template <typename Fn>
Mat skew_even_fn(const SkewEig& e, Fn&& fn) {
    Vec f = e.values;
    for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = fn(std::abs(f[i]));
    return (e.vectors * f.cast<std::complex<double>>().asDiagonal() * e.vectors.adjoint())
        .real();
}

}  // namespace gaussacc
