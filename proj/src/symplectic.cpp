#include "gaussacc/symplectic.hpp"

#include <algorithm>
#include <cmath>

namespace gaussacc {

namespace {

// Eigen pair of a symmetric matrix, reused for sqrt and inverse sqrt.
struct SymEig {
    Mat vectors;
    Vec values;
};

SymEig sym_eig(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m));
    return {es.eigenvectors(), es.eigenvalues()};
}

Mat apply_fn(const SymEig& e, const auto& fn) {
    Vec v = e.values;
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = fn(v[i]);
    return e.vectors * v.asDiagonal() * e.vectors.transpose();
}

}  // namespace

Mat standard_delta(int s) {
    if (s < 1) throw validation_error("standard_form: mode count must be >= 1");
    Mat d = Mat::Zero(2 * s, 2 * s);
    for (int j = 0; j < s; ++j) {
        d(2 * j, 2 * j + 1) = 1.0;
        d(2 * j + 1, 2 * j) = -1.0;
    }
    return d;
}

SymplecticSpace standard_form(int s) { return {s, standard_delta(s)}; }

std::vector<double> symplectic_eigenvalues(const Mat& alpha) {
    if (!is_symmetric(alpha)) throw validation_error("symplectic_eigenvalues: not symmetric");
    if (alpha.rows() % 2 != 0) throw validation_error("symplectic_eigenvalues: odd dimension");
    const int s = static_cast<int>(alpha.rows()) / 2;
    SymEig ea = sym_eig(alpha);
    if (ea.values.minCoeff() <= 0.0)
        throw validation_error("symplectic_eigenvalues: matrix not positive definite");
    Mat sqrt_a = apply_fn(ea, [](double x) { return std::sqrt(x); });
    Mat delta_inv = -standard_delta(s);  // Delta^{-1} = -Delta
    Mat b = sqrt_a * delta_inv * sqrt_a;
    // B is skew with eigenvalues -i times +/- the symplectic eigenvalues;
    // iB is Hermitian, so its ascending spectrum is (-a_s..-a_1, a_1..a_s).
    Vec lambda = skew_eig(b).values;
    std::vector<double> out(s);
    for (int j = 0; j < s; ++j) out[j] = 0.5 * (lambda[s + j] - lambda[s - 1 - j]);
    std::sort(out.begin(), out.end());
    return out;
}

CovarianceMatrix CovarianceMatrix::validate(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
        throw validation_error("covariance: dimension must be even and positive");
    if (!is_symmetric(m)) throw validation_error("covariance: matrix not symmetric");
    auto nu = symplectic_eigenvalues(symmetrize(m));
    const double margin = nu.front() - 0.5;
    if (margin < -1e-9)
        throw validation_error("covariance: uncertainty relation violated, min symplectic eigenvalue " +
                               std::to_string(nu.front()));
    return CovarianceMatrix(symmetrize(m), margin);
}

ComplexStructure ComplexStructure::validate(const Mat& j) {
    if (j.rows() != j.cols() || j.rows() % 2 != 0)
        throw validation_error("complex structure: bad dimensions");
    const Eigen::Index n = j.rows();
    if ((j * j + Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9)
        throw validation_error("complex structure: J^2 != -I");
    Mat dj = standard_delta(static_cast<int>(n) / 2) * j;
    if (!is_symmetric(dj, 1e-9))
        throw validation_error("complex structure: Delta*J not symmetric");
    if (min_eig_sym(dj) < -1e-9)
        throw validation_error("complex structure: Delta*J not positive semidefinite");
    return ComplexStructure(j);
}

ComplexStructure complex_structure(const CovarianceMatrix& alpha) {
    const int s = alpha.modes();
    SymEig ea = sym_eig(alpha.mat());
    if (ea.values.minCoeff() <= 0.0)
        throw validation_error("complex_structure: covariance not positive definite");
    Mat sqrt_a = apply_fn(ea, [](double x) { return std::sqrt(x); });
    Mat inv_sqrt_a = apply_fn(ea, [](double x) { return 1.0 / std::sqrt(x); });
    Mat b = sqrt_a * (-standard_delta(s)) * sqrt_a;
    Mat polar;
    try {
        polar = skew_polar(skew_eig(b));
    } catch (const validation_error&) {
        throw validation_error(
            "complex_structure: symplectic eigenvalue below 1e-12, polar part undefined");
    }
    Mat j = inv_sqrt_a * polar * sqrt_a;
    // The polar part must come out Delta-positive; a failure here is a
    // convention bug, never corrected by sign flips.
    return ComplexStructure::validate(j);
}

CovarianceMatrix vacuum_covariance(const ComplexStructure& j) {
    Mat v = 0.5 * standard_delta(j.dim() / 2) * j.mat();
    return CovarianceMatrix::validate(symmetrize(v));
}

bool is_pure(const CovarianceMatrix& alpha) {
    auto nu = symplectic_eigenvalues(alpha.mat());
    for (double v : nu)
        if (std::abs(v - 0.5) > 1e-8) return false;
    return true;
}

}  // namespace gaussacc
