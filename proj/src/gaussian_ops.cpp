#include "gaussacc/gaussian_ops.hpp"

#include <cmath>

namespace gaussacc {

namespace {

void check_dim(const CovarianceMatrix& cov, const Vec& v, const char* who) {
    if (v.size() != cov.dim()) throw validation_error(std::string(who) + ": dimension mismatch");
}

Mat pd_inverse(const Mat& m, const char* who) {
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m));
    const Vec& ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0 || ev.maxCoeff() / ev.minCoeff() > 1e12)
        throw validation_error(std::string(who) + ": matrix singular or ill-conditioned");
    Vec inv = ev.cwiseInverse();
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

GaussianState make_state(const Vec& mean, const Mat& cov) {
    auto c = CovarianceMatrix::validate(cov);
    if (mean.size() != c.dim()) throw validation_error("make_state: mean dimension mismatch");
    if (!mean.allFinite()) throw validation_error("make_state: mean not finite");
    return {mean, c};
}

std::complex<double> char_fn(const GaussianState& state, const Vec& w) {
    check_dim(state.cov, w, "char_fn");
    const double phase = w.dot(state.mean);
    const double quad = 0.5 * w.dot(state.cov.mat() * w);
    return std::exp(std::complex<double>(-quad, phase));
}

GaussianState displace(const GaussianState& state, const Vec& z) {
    check_dim(state.cov, z, "displace");
    return {state.mean + z, state.cov};
}

Mat upsilon(const CovarianceMatrix& alpha) {
    // With S = alpha^{1/2} and B = S Delta^{-1} S (skew),
    // I + (2 alpha Delta^{-1})^{-2} = S (I - 1/4 (B B^t)^{-1}) S^{-1},
    // so Upsilon = S G S^{-1} with G = sqrt(I - 1/4 (B B^t)^{-1}).
    const int s = alpha.modes();
    Eigen::SelfAdjointEigenSolver<Mat> ea(alpha.mat());
    Vec av = ea.eigenvalues();
    if (av.minCoeff() <= 0.0) throw validation_error("upsilon: covariance not positive definite");
    Vec sq = av.cwiseSqrt();
    Mat sqrt_a = ea.eigenvectors() * sq.asDiagonal() * ea.eigenvectors().transpose();
    Mat inv_sqrt_a =
        ea.eigenvectors() * sq.cwiseInverse().asDiagonal() * ea.eigenvectors().transpose();
    Mat b = sqrt_a * (-standard_delta(s)) * sqrt_a;
    SkewEig eb = skew_eig(b);  // |eigenvalues| are the symplectic eigenvalues
    Mat gm = skew_even_fn(eb, [](double nu) {
        const double v = 1.0 - 0.25 / (nu * nu);
        if (v < -1e-9)
            throw validation_error("upsilon: symplectic eigenvalue below 1/2, root indefinite");
        return std::sqrt(std::max(v, 0.0));
    });
    return sqrt_a * gm * inv_sqrt_a;
}

Mat kappa(const CovarianceMatrix& alpha) {
    return symmetrize(upsilon(alpha) * alpha.mat());
}

double sqrt_char_fn(const CovarianceMatrix& alpha, const Vec& w) {
    check_dim(alpha, w, "sqrt_char_fn");
    Mat a_hat = alpha.mat() + kappa(alpha);
    return std::exp(0.25 * logdet_pd(2.0 * a_hat) - 0.5 * w.dot(a_hat * w));
}

std::complex<double> sandwich_overlap(const CovarianceMatrix& alpha, const Vec& z1,
                                      const Vec& z2) {
    check_dim(alpha, z1, "sandwich_overlap");
    check_dim(alpha, z2, "sandwich_overlap");
    Mat k = kappa(alpha);
    const double ex = -0.5 * z2.dot(alpha.mat() * z2) - 0.5 * z1.dot(alpha.mat() * z1) +
                      z2.dot(k * z1);
    return {std::exp(ex), 0.0};
}

SandwichChar sandwich_char(const CovarianceMatrix& alpha, const CovarianceMatrix& beta,
                           const Vec& z, const Vec& z1) {
    check_dim(alpha, z, "sandwich_char");
    check_dim(alpha, z1, "sandwich_char");
    if (alpha.dim() != beta.dim()) throw validation_error("sandwich_char: dimension mismatch");
    Mat sum_inv = pd_inverse(alpha.mat() + beta.mat(), "sandwich_char");
    Mat k = kappa(alpha);
    Mat big_k = k * sum_inv;
    Mat a121 = symmetrize(alpha.mat() - k * sum_inv * k);
    const double c =
        std::exp(-0.5 * logdet_pd(alpha.mat() + beta.mat()) - 0.5 * z.dot(sum_inv * z));
    const double phase = z1.dot(big_k * z);
    const double quad = 0.5 * z1.dot(a121 * z1);
    std::complex<double> value = c * std::exp(std::complex<double>(-quad, phase));
    return {value, c, big_k, a121};
}

CovarianceMatrix sandwich_cov(const CovarianceMatrix& alpha_tilde,
                              const CovarianceMatrix& beta_tilde) {
    if (alpha_tilde.dim() != beta_tilde.dim())
        throw validation_error("sandwich_cov: dimension mismatch");
    Mat ups = upsilon(alpha_tilde);
    Mat sum_inv = pd_inverse(alpha_tilde.mat() + beta_tilde.mat(), "sandwich_cov");
    Mat ua = ups * alpha_tilde.mat();
    Mat beta = alpha_tilde.mat() - ua * sum_inv * ua.transpose();
    return CovarianceMatrix::validate(symmetrize(beta));
}

}  // namespace gaussacc
