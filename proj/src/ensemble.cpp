#include "gaussacc/ensemble.hpp"

#include <cmath>

namespace gaussacc {

GaussianEnsemble GaussianEnsemble::validate(const Mat& gamma, const Mat& beta) {
    auto b = CovarianceMatrix::validate(beta);
    if (gamma.rows() != b.dim() || gamma.cols() != b.dim())
        throw validation_error("ensemble: gamma/beta dimension mismatch");
    if (!is_symmetric(gamma)) throw validation_error("ensemble: gamma not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(gamma), Eigen::EigenvaluesOnly);
    const Vec& ev = es.eigenvalues();
    if (ev.minCoeff() <= 1e-12 * std::max(ev.maxCoeff(), 1.0))
        throw validation_error("ensemble: prior covariance gamma is degenerate");
    return GaussianEnsemble(symmetrize(gamma), std::move(b));
}

GaussianObservable make_observable(const Mat& K, const Mat& beta_m) {
    auto b = CovarianceMatrix::validate(beta_m);
    if (K.rows() != b.dim() || K.cols() != b.dim())
        throw validation_error("observable: K dimension mismatch");
    if (std::abs(K.determinant()) <= 1e-12)
        throw validation_error("observable: rescaling matrix K is degenerate");
    return {K, std::move(b)};
}

GaussianState average_state(const GaussianEnsemble& e) {
    Vec mean = Vec::Zero(e.dim());
    return make_state(mean, e.gamma() + e.beta().mat());
}

GaussianObservable heterodyne_observable(const CovarianceMatrix& beta) {
    auto noise = vacuum_covariance(complex_structure(beta));
    return {Mat::Identity(beta.dim(), beta.dim()), std::move(noise)};
}

OutcomeModel outcome_density(const GaussianState& state, const GaussianObservable& obs) {
    // For K = I the outcomes are N(mean, cov + beta_m); for general K the
    // outcome variable is K^{-1} of that.
    Mat k_inv = obs.K.inverse();
    Mat cov = k_inv * (state.cov.mat() + obs.beta_m.mat()) * k_inv.transpose();
    return {k_inv, symmetrize(cov)};
}

double gaussian_mi(const Mat& prior_cov, const Mat& cond_cov) {
    if (prior_cov.rows() != cond_cov.rows() || prior_cov.cols() != cond_cov.cols())
        throw validation_error("gaussian_mi: dimension mismatch");
    return 0.5 * (logdet_pd(prior_cov + cond_cov) - logdet_pd(cond_cov));
}

Lemma1Result lemma1_max_info(const CovarianceMatrix& alpha, const CovarianceMatrix& beta_m) {
    if (alpha.dim() != beta_m.dim()) throw validation_error("lemma1_max_info: dimension mismatch");
    Mat vac = vacuum_covariance(complex_structure(beta_m)).mat();
    Mat gamma = symmetrize(alpha.mat() - vac);
    const double margin = min_eig_sym(gamma);
    if (margin < -1e-9)
        throw threshold_error("lemma1_max_info: alpha below 1/2 Delta J_beta, min eigenvalue " +
                                  std::to_string(margin),
                              margin);
    const double info =
        0.5 * (logdet_pd(alpha.mat() + beta_m.mat()) - logdet_pd(beta_m.mat() + vac));
    return {info, gamma};
}

}  // namespace gaussacc
