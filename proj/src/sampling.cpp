#include "gaussacc/sampling.hpp"

#include <cmath>
#include <numbers>

namespace gaussacc {

double SplitMix64::next_normal() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec normal_vector(SplitMix64& rng, int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.next_normal();
    return v;
}

Mat random_spd(SplitMix64& rng, int dim) {
    Mat x(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) x(i, j) = rng.next_normal();
    return symmetrize(x * x.transpose()) + 0.05 * Mat::Identity(dim, dim);
}

Mat random_covariance(SplitMix64& rng, int modes) {
    const int dim = 2 * modes;
    Mat base = random_spd(rng, dim);
    const double nu_min = symplectic_eigenvalues(base).front();
    const double target = 0.5 * (1.0 + 3.0 * rng.next_unit());
    return base * (target / nu_min);
}

namespace {

// Random symplectic orthogonal: commutes-with-Delta rotations generated as
// exp(Delta H) with H symmetric commuting with Delta would be overkill at
// test scale; per-mode phase rotations plus a random mode permutation via
// two-mode beamsplitter-style rotations suffice to exercise non-diagonal
// gauge-invariant instances.
Mat random_symplectic_orthogonal(SplitMix64& rng, int modes) {
    const int dim = 2 * modes;
    Mat t = Mat::Identity(dim, dim);
    for (int j = 0; j < modes; ++j) {
        const double th = 2.0 * std::numbers::pi * rng.next_unit();
        Mat r = Mat::Identity(dim, dim);
        r(2 * j, 2 * j) = std::cos(th);
        r(2 * j, 2 * j + 1) = std::sin(th);
        r(2 * j + 1, 2 * j) = -std::sin(th);
        r(2 * j + 1, 2 * j + 1) = std::cos(th);
        t = r * t;
    }
    for (int j = 0; j + 1 < modes; ++j) {
        const double th = 2.0 * std::numbers::pi * rng.next_unit();
        const double c = std::cos(th), s = std::sin(th);
        Mat r = Mat::Identity(dim, dim);
        for (int k = 0; k < 2; ++k) {
            r(2 * j + k, 2 * j + k) = c;
            r(2 * j + k, 2 * (j + 1) + k) = s;
            r(2 * (j + 1) + k, 2 * j + k) = -s;
            r(2 * (j + 1) + k, 2 * (j + 1) + k) = c;
        }
        t = r * t;
    }
    return t;
}

}  // namespace

GaugeInvariantInstance random_gauge_invariant(SplitMix64& rng, int modes, bool rotated) {
    const int dim = 2 * modes;
    Vec n(modes), sigma(modes);
    Mat beta = Mat::Zero(dim, dim);
    Mat gamma = Mat::Zero(dim, dim);
    for (int j = 0; j < modes; ++j) {
        n[j] = 2.0 * rng.next_unit();
        sigma[j] = 0.05 + 3.0 * rng.next_unit();
        beta.block(2 * j, 2 * j, 2, 2) = (n[j] + 0.5) * Mat::Identity(2, 2);
        gamma.block(2 * j, 2 * j, 2, 2) = sigma[j] * Mat::Identity(2, 2);
    }
    if (rotated) {
        Mat t = random_symplectic_orthogonal(rng, modes);
        beta = symmetrize(t * beta * t.transpose());
        gamma = symmetrize(t * gamma * t.transpose());
    }
    return {GaussianEnsemble::validate(gamma, beta), n, sigma};
}

GaussianEnsemble random_dominated_ensemble(SplitMix64& rng, int modes) {
    Mat beta = random_covariance(rng, modes);
    Mat psd = random_spd(rng, 2 * modes);
    return GaussianEnsemble::validate(beta + psd, beta);
}

GaussianEnsemble random_ensemble(SplitMix64& rng, int modes) {
    Mat beta = random_covariance(rng, modes);
    Mat gamma = random_spd(rng, 2 * modes);
    return GaussianEnsemble::validate(gamma, beta);
}

}  // namespace gaussacc
