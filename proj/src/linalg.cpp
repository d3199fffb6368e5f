#include "gaussacc/linalg.hpp"

#include <cmath>

namespace gaussacc {

bool is_symmetric(const Mat& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1.0);
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Mat sym_sqrt(const Mat& m) {
    if (!is_symmetric(m)) throw validation_error("sym_sqrt: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m));
    Vec ev = es.eigenvalues();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1.0);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < -1e-12 * scale)
            throw validation_error("sym_sqrt: matrix indefinite beyond tolerance");
        ev[i] = std::sqrt(std::max(ev[i], 0.0));
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

double logdet_pd(const Mat& m) {
    if (!is_symmetric(m)) throw validation_error("logdet_pd: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m), Eigen::EigenvaluesOnly);
    const Vec& ev = es.eigenvalues();
    const double lo = ev.minCoeff();
    const double hi = ev.maxCoeff();
    if (lo <= 0.0) throw validation_error("logdet_pd: matrix not positive definite");
    if (hi / lo > 1e12) throw validation_error("logdet_pd: condition number exceeds 1e12");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) acc += std::log(ev[i]);
    return acc;
}

SkewEig skew_eig(const Mat& b) {
    if (b.rows() != b.cols()) throw validation_error("skew_eig: matrix not square");
    const double scale = std::max(b.cwiseAbs().maxCoeff(), 1.0);
    if ((b + b.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw validation_error("skew_eig: matrix not skew-symmetric");
    Eigen::MatrixXcd ib = std::complex<double>(0.0, 1.0) * b.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((0.5 * (ib + ib.adjoint())).eval());
    return {es.eigenvectors(), es.eigenvalues()};
}

Mat skew_polar(const SkewEig& e, double abs_tol) {
    Eigen::VectorXcd f(e.values.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        if (std::abs(e.values[i]) < abs_tol)
            throw validation_error("skew_polar: eigenvalue too close to zero");
        // B = U diag(-i lambda) U^*, so |B|^{-1} B = U diag(-i sign lambda) U^*.
        f[i] = std::complex<double>(0.0, e.values[i] > 0.0 ? -1.0 : 1.0);
    }
    return (e.vectors * f.asDiagonal() * e.vectors.adjoint()).real();
}

double min_eig_sym(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace gaussacc
