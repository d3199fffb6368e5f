#include "gaussacc/accinfo.hpp"

#include <cmath>

namespace gaussacc {

namespace {

Mat pd_inverse(const Mat& m, const char* who) {
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m));
    const Vec& ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0 || ev.maxCoeff() / ev.minCoeff() > 1e12)
        throw validation_error(std::string(who) + ": matrix singular or ill-conditioned");
    return es.eigenvectors() * ev.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
}

Mat vacuum_of(const CovarianceMatrix& cov) {
    return vacuum_covariance(complex_structure(cov)).mat();
}

}  // namespace

DualObservable dual_observable(const GaussianEnsemble& e) {
    Mat alpha_tilde = e.gamma() + e.beta().mat();
    auto at = CovarianceMatrix::validate(alpha_tilde);
    Mat ups = upsilon(at);
    Mat gamma_inv = pd_inverse(e.gamma(), "dual_observable");
    Mat au = alpha_tilde * ups.transpose();  // = Upsilon~ alpha~
    Mat beta_tilde_raw = symmetrize(au * gamma_inv * au.transpose() - alpha_tilde);
    auto beta_tilde = CovarianceMatrix::validate(beta_tilde_raw);
    Mat k_tilde = (alpha_tilde + beta_tilde_raw) * pd_inverse(alpha_tilde, "dual_observable") *
                  ups.inverse();
    return {std::move(k_tilde), std::move(beta_tilde), std::move(alpha_tilde), std::move(ups)};
}

ThresholdResult threshold_check(const GaussianEnsemble& e) {
    auto dual = dual_observable(e);
    Mat gap = symmetrize(dual.alpha_tilde - vacuum_of(dual.beta_tilde));
    const double margin = min_eig_sym(gap);
    return {margin >= -1e-9, margin};
}

bool sufficient_condition(const GaussianEnsemble& e) {
    return min_eig_sym(e.gamma() - e.beta().mat()) >= -1e-9;
}

double accessible_info(const GaussianEnsemble& e) {
    auto dual = dual_observable(e);
    Mat vac = vacuum_of(dual.beta_tilde);
    const double margin = min_eig_sym(symmetrize(dual.alpha_tilde - vac));
    if (margin < -1e-9)
        throw threshold_error("accessible_info: threshold condition fails, min eigenvalue " +
                                  std::to_string(margin),
                              margin);
    return 0.5 * (logdet_pd(dual.alpha_tilde + dual.beta_tilde.mat()) -
                  logdet_pd(dual.beta_tilde.mat() + vac));
}

OptimalObservable optimal_observable(const GaussianEnsemble& e) {
    auto dual = dual_observable(e);
    Mat vac = vacuum_of(dual.beta_tilde);
    Mat gap = symmetrize(dual.alpha_tilde - vac);
    const double margin = min_eig_sym(gap);
    if (margin <= 1e-9)
        throw threshold_error(
            "optimal_observable: threshold margin not strictly positive, min eigenvalue " +
                std::to_string(margin),
            margin);
    Mat au = dual.alpha_tilde * dual.upsilon_tilde.transpose();
    Mat beta_star_raw =
        symmetrize(au * pd_inverse(gap, "optimal_observable") * au.transpose() - dual.alpha_tilde);
    auto beta_star = CovarianceMatrix::validate(beta_star_raw);
    Mat k_star = (dual.alpha_tilde + beta_star_raw) *
                 pd_inverse(dual.alpha_tilde, "optimal_observable") * dual.upsilon_tilde.inverse();
    return {std::move(k_star), std::move(beta_star)};
}

double heterodyne_lower_bound(const GaussianEnsemble& e) {
    Mat vac = vacuum_of(e.beta());
    return gaussian_mi(e.gamma(), e.beta().mat() + vac);
}

double gauge_invariant_info(const Vec& photon_numbers, const Vec& signal_powers) {
    if (photon_numbers.size() != signal_powers.size())
        throw validation_error("gauge_invariant_info: dimension mismatch");
    double acc = 0.0;
    for (Eigen::Index j = 0; j < photon_numbers.size(); ++j) {
        const double n = photon_numbers[j];
        const double sig = signal_powers[j];
        if (n < 0.0 || sig < 0.0)
            throw validation_error("gauge_invariant_info: parameters must be nonnegative");
        acc += std::log1p(sig / (n + 1.0));
    }
    return acc;
}

AccInfoReport full_report(const GaussianEnsemble& e) {
    AccInfoReport rep;
    auto dual = dual_observable(e);
    auto j_beta_tilde = complex_structure(dual.beta_tilde);
    Mat vac = 0.5 * standard_delta(e.modes()) * j_beta_tilde.mat();

    rep.alpha_tilde = dual.alpha_tilde;
    rep.beta_tilde = dual.beta_tilde.mat();
    rep.K_tilde = dual.K_tilde;
    rep.J_beta_tilde = j_beta_tilde.mat();
    rep.threshold_margin = min_eig_sym(symmetrize(dual.alpha_tilde - vac));
    rep.threshold_holds = rep.threshold_margin >= -1e-9;
    rep.boundary = rep.threshold_holds && rep.threshold_margin <= 1e-9;
    rep.lower_bound_nats = heterodyne_lower_bound(e);
    rep.sufficient_condition_holds = sufficient_condition(e);

    Mat j_alpha_tilde = complex_structure(CovarianceMatrix::validate(dual.alpha_tilde)).mat();
    Mat j_beta = complex_structure(e.beta()).mat();
    rep.gauge_invariant = (j_alpha_tilde - j_beta).cwiseAbs().maxCoeff() <= 1e-8 &&
                          (j_beta_tilde.mat() - j_beta).cwiseAbs().maxCoeff() <= 1e-8;

    if (rep.threshold_holds) {
        rep.accessible_info_nats =
            0.5 * (logdet_pd(dual.alpha_tilde + dual.beta_tilde.mat()) -
                   logdet_pd(dual.beta_tilde.mat() + vac));
        if (!rep.boundary) {
            auto opt = optimal_observable(e);
            rep.beta_star = opt.beta_star.mat();
            rep.K_star = opt.K_star;
        }
    }
    return rep;
}

}  // namespace gaussacc
