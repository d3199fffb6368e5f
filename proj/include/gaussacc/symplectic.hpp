#pragma once

#include <vector>

#include "gaussacc/linalg.hpp"

namespace gaussacc {

// Phase-space ordering is (q1, p1, q2, p2, ...); the standard form is
// block-diagonal with s copies of [[0,1],[-1,0]].
struct SymplecticSpace {
    int modes;
    Mat delta;
};

SymplecticSpace standard_form(int s);

// Just the matrix, for callers that do not need the wrapper.
Mat standard_delta(int s);

// A validated quantum covariance matrix: real symmetric with all
// symplectic eigenvalues >= 1/2 (up to tolerance 1e-9).
class CovarianceMatrix {
  public:
    // Throws validation_error on asymmetry or uncertainty violation.
    static CovarianceMatrix validate(const Mat& m);

    const Mat& mat() const { return mat_; }
    double validity_margin() const { return validity_margin_; }
    int modes() const { return static_cast<int>(mat_.rows()) / 2; }
    int dim() const { return static_cast<int>(mat_.rows()); }

  private:
    CovarianceMatrix(Mat m, double margin) : mat_(std::move(m)), validity_margin_(margin) {}
    Mat mat_;
    double validity_margin_;
};

// Symplectic eigenvalues of a symmetric PD matrix, ascending. Computed
// from |B| with B = sqrt(alpha) * Delta^{-1} * sqrt(alpha).
std::vector<double> symplectic_eigenvalues(const Mat& alpha);

// J with J^2 = -I and Delta*J symmetric PSD.
class ComplexStructure {
  public:
    static ComplexStructure validate(const Mat& j);
    const Mat& mat() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

  private:
    explicit ComplexStructure(Mat j) : mat_(std::move(j)) {}
    Mat mat_;
};

// Polar-orthogonal part of Delta^{-1} alpha, computed through the
// symmetric similarity B = sqrt(alpha) Delta^{-1} sqrt(alpha).
ComplexStructure complex_structure(const CovarianceMatrix& alpha);

// (1/2) Delta J, the covariance of the J-vacuum. All symplectic
// eigenvalues equal 1/2.
CovarianceMatrix vacuum_covariance(const ComplexStructure& j);

// True iff every symplectic eigenvalue is 1/2 within 1e-8.
bool is_pure(const CovarianceMatrix& alpha);

}  // namespace gaussacc
