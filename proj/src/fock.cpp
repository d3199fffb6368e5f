#include "gaussacc/fock.hpp"

#include <cmath>

namespace gaussacc {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// exp(i H) for Hermitian H.
CMat unitary_exp(const CMat& h) {
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
        phases[k] = std::exp(kI * es.eigenvalues()[k]);
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMat hermitian_sqrt(const CMat& h) {
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    Vec ev = es.eigenvalues();
    for (Eigen::Index k = 0; k < ev.size(); ++k) ev[k] = std::sqrt(std::max(ev[k], 0.0));
    return es.eigenvectors() * ev.cast<std::complex<double>>().asDiagonal() *
           es.eigenvectors().adjoint();
}

void check_one_mode(const Vec& v, const char* who) {
    if (v.size() != 2) throw validation_error(std::string(who) + ": single-mode vectors only");
}

}  // namespace

CMat annihilation(int dim) {
    CMat a = CMat::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

CMat position_op(int dim) {
    CMat a = annihilation(dim);
    return (a + a.adjoint()) / std::sqrt(2.0);
}

CMat momentum_op(int dim) {
    CMat a = annihilation(dim);
    return (a - a.adjoint()) / (kI * std::sqrt(2.0));
}

CMat weyl_op(const Vec& w, int dim) {
    check_one_mode(w, "weyl_op");
    return unitary_exp(w[0] * position_op(dim) + w[1] * momentum_op(dim));
}

CMat displacement_op(const Vec& z, int dim) {
    check_one_mode(z, "displacement_op");
    const std::complex<double> zeta(z[0] / std::sqrt(2.0), z[1] / std::sqrt(2.0));
    CMat a = annihilation(dim);
    CMat gen = zeta * a.adjoint() - std::conj(zeta) * a;  // anti-Hermitian
    return unitary_exp((-kI * gen).eval());
}

CMat squeeze_op(double r, int dim) {
    CMat a = annihilation(dim);
    CMat gen = 0.5 * r * (a.adjoint() * a.adjoint() - a * a);
    return unitary_exp((-kI * gen).eval());
}

CMat rotation_op(double theta, int dim) {
    CMat n = CMat::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return unitary_exp((theta * n).eval());
}

FockMoments fock_moments(const FockOperator& rho) {
    CMat q = position_op(rho.dim);
    CMat p = momentum_op(rho.dim);
    Vec mean(2);
    mean[0] = (rho.m * q).trace().real();
    mean[1] = (rho.m * p).trace().real();
    CMat dq = q - mean[0] * CMat::Identity(rho.dim, rho.dim);
    CMat dp = p - mean[1] * CMat::Identity(rho.dim, rho.dim);
    Mat cov(2, 2);
    cov(0, 0) = (rho.m * dq * dq).trace().real();
    cov(1, 1) = (rho.m * dp * dp).trace().real();
    cov(0, 1) = cov(1, 0) = (rho.m * 0.5 * (dq * dp + dp * dq)).trace().real();
    return {mean, cov};
}

FockOperator fock_state(const Vec& mean, const Mat& cov, int cutoff) {
    check_one_mode(mean, "fock_state");
    if (cutoff < 8) throw validation_error("fock_state: cutoff must be >= 8");
    auto validated = CovarianceMatrix::validate(cov);
    (void)validated;

    // cov = R(theta) diag(nu e^{2r}, nu e^{-2r}) R(theta)^t.
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(cov));
    const double lo = es.eigenvalues()[0], hi = es.eigenvalues()[1];
    const double nu = std::sqrt(lo * hi);
    const double r = 0.25 * std::log(hi / lo);
    Vec v_hi = es.eigenvectors().col(1);  // axis of the larger variance
    const double theta = std::atan2(v_hi[1], v_hi[0]);

    CMat rho = CMat::Zero(cutoff, cutoff);
    const double t = (nu - 0.5) / (nu + 0.5);
    for (int n = 0; n < cutoff; ++n) rho(n, n) = (1.0 - t) * std::pow(t, n);

    CMat u = rotation_op(theta, cutoff) * squeeze_op(r, cutoff);
    rho = u * rho * u.adjoint();
    if (mean.norm() > 0.0) {
        CMat d = displacement_op(mean, cutoff);
        rho = d * rho * d.adjoint();
    }
    FockOperator out{cutoff, rho};

    auto mom = fock_moments(out);
    const double err = std::max((mom.mean - mean).cwiseAbs().maxCoeff(),
                                (mom.cov - symmetrize(cov)).cwiseAbs().maxCoeff());
    if (err > 1e-3)
        throw validation_error("fock_state: truncated moments off by " + std::to_string(err) +
                               ", increase cutoff");
    return out;
}

double fock_outcome_prob(const Mat& alpha, const Mat& beta, const Vec& z, int cutoff) {
    auto rho_a = fock_state(Vec::Zero(2), alpha, cutoff);
    auto rho_b = fock_state(z, beta, cutoff);
    return (rho_a.m * rho_b.m).trace().real();
}

std::complex<double> fock_sqsq(const Mat& alpha, const Vec& z1, const Vec& z2, int cutoff) {
    auto rho = fock_state(Vec::Zero(2), alpha, cutoff);
    CMat s = hermitian_sqrt(rho.m);
    CMat w1 = weyl_op(z1, cutoff);
    CMat w2 = weyl_op((-z2).eval(), cutoff);
    return (w1 * s * w2 * s).trace();
}

}  // namespace gaussacc
