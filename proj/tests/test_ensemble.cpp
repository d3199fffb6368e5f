#include <doctest.h>

#include <cmath>

#include "gaussacc/ensemble.hpp"
#include "gaussacc/sampling.hpp"

using namespace gaussacc;

namespace {
Mat diag2(double a, double b) { return Vec{{a, b}}.asDiagonal(); }
}  // namespace

TEST_CASE("ensemble validation") {
    CHECK_NOTHROW(GaussianEnsemble::validate(Mat::Identity(2, 2), 0.5 * Mat::Identity(2, 2)));
    // Degenerate prior rejected.
    CHECK_THROWS_AS(GaussianEnsemble::validate(diag2(1.0, 0.0), 0.5 * Mat::Identity(2, 2)),
                    validation_error);
    // Invalid quantum covariance rejected.
    CHECK_THROWS_AS(GaussianEnsemble::validate(Mat::Identity(2, 2), diag2(1.0, 0.01)),
                    validation_error);
}

TEST_CASE("average state") {
    auto e = GaussianEnsemble::validate(Mat::Identity(2, 2), 0.5 * Mat::Identity(2, 2));
    auto avg = average_state(e);
    CHECK(avg.mean.cwiseAbs().maxCoeff() == 0.0);
    CHECK((avg.cov.mat() - 1.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

    auto ed = GaussianEnsemble::validate(diag2(2.0, 1.0), diag2(0.5, 0.5));
    CHECK((average_state(ed).cov.mat() - diag2(2.5, 1.5)).cwiseAbs().maxCoeff() < 1e-15);

    // Block-diagonal inputs stay block-diagonal.
    Mat g4 = Vec{{1.0, 1.0, 2.0, 2.0}}.asDiagonal();
    Mat b4 = Vec{{0.5, 0.5, 1.0, 1.0}}.asDiagonal();
    auto e2 = GaussianEnsemble::validate(g4, b4);
    Mat a4 = average_state(e2).cov.mat();
    CHECK(a4(0, 2) == 0.0);
    CHECK((a4 - Mat(Vec{{1.5, 1.5, 3.0, 3.0}}.asDiagonal())).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("heterodyne observable") {
    auto obs = heterodyne_observable(CovarianceMatrix::validate(Mat::Identity(2, 2)));
    CHECK((obs.K - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((obs.beta_m.mat() - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    const double b1 = 1.8, b2 = 0.6;
    auto obs2 = heterodyne_observable(CovarianceMatrix::validate(diag2(b1, b2)));
    Mat expect = 0.5 * diag2(std::sqrt(b1 / b2), std::sqrt(b2 / b1));
    CHECK((obs2.beta_m.mat() - expect).cwiseAbs().maxCoeff() < 1e-12);

    SplitMix64 rng(41);
    for (int i = 0; i < 10; ++i) {
        auto beta = CovarianceMatrix::validate(random_covariance(rng, 2));
        CHECK(is_pure(heterodyne_observable(beta).beta_m));
    }
}

TEST_CASE("outcome density") {
    auto alpha = CovarianceMatrix::validate(diag2(1.0, 2.0));
    auto obs = make_observable(Mat::Identity(2, 2), 0.5 * Mat::Identity(2, 2));

    auto centered = outcome_density(GaussianState{Vec::Zero(2), alpha}, obs);
    CHECK((centered.noise_cov - diag2(1.5, 2.5)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((centered.mean_map - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

    Vec z(2);
    z << 0.3, -1.1;
    auto shifted = outcome_density(GaussianState{z, alpha}, obs);
    CHECK((shifted.mean_map * z - z).cwiseAbs().maxCoeff() < 1e-14);

    auto scaled = outcome_density(GaussianState{Vec::Zero(2), alpha},
                                  make_observable(2.0 * Mat::Identity(2, 2),
                                                  0.5 * Mat::Identity(2, 2)));
    CHECK((scaled.noise_cov - 0.25 * diag2(1.5, 2.5)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gaussian mutual information") {
    // Scalars 1, 1 -> 1/2 ln 2.
    Mat one = Mat::Identity(1, 1);
    CHECK(gaussian_mi(one, one) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));

    CHECK(gaussian_mi(1e-14 * one, one) == doctest::Approx(0.0).epsilon(1e-10));

    // Invariant under simultaneous congruence by any invertible T.
    SplitMix64 rng(43);
    for (int i = 0; i < 20; ++i) {
        Mat prior = random_spd(rng, 4);
        Mat cond = random_spd(rng, 4);
        Mat t(4, 4);
        do {
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) t(r, c) = rng.next_normal();
        } while (std::abs(t.determinant()) < 1e-3);
        const double base = gaussian_mi(prior, cond);
        const double congr = gaussian_mi(symmetrize(t * prior * t.transpose()),
                                         symmetrize(t * cond * t.transpose()));
        CHECK(std::abs(base - congr) < 1e-10 * std::max(1.0, std::abs(base)));
    }

    CHECK_THROWS_AS(gaussian_mi(diag2(1.0, -1.0), Mat::Identity(2, 2)), validation_error);
}

TEST_CASE("lemma 1 maximal information") {
    // Gauge-invariant: alpha = (S + 1/2) I, beta = (N + 1/2) I reproduces
    // ln(1 + S/(N+1)) per mode.
    const double sig = 1.0, nph = 0.5;
    auto alpha = CovarianceMatrix::validate((sig + 0.5) * Mat::Identity(2, 2));
    auto beta = CovarianceMatrix::validate((nph + 0.5) * Mat::Identity(2, 2));
    auto res = lemma1_max_info(alpha, beta);
    CHECK(res.info_nats == doctest::Approx(std::log(1.0 + sig / (nph + 1.0))).epsilon(1e-12));
    CHECK((res.optimal_gamma - sig * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

    // Diagonal closed form 1/2 log[(b1+a1)(b2+a2) / (sqrt(b1 b2)+1/2)^2].
    const double a1 = 1.5, a2 = 1.2, b1 = 0.9, b2 = 0.5;
    auto r2 = lemma1_max_info(CovarianceMatrix::validate(diag2(a1, a2)),
                              CovarianceMatrix::validate(diag2(b1, b2)));
    const double expect = 0.5 * std::log((b1 + a1) * (b2 + a2) /
                                         std::pow(std::sqrt(b1 * b2) + 0.5, 2));
    CHECK(r2.info_nats == doctest::Approx(expect).epsilon(1e-12));

    // Threshold violated: alpha_1 far below sqrt(b1/b2)/2.
    auto tight = CovarianceMatrix::validate(diag2(0.26, 25.0 / 26.0 / 4.0 * 26.0));
    auto squeezed = CovarianceMatrix::validate(diag2(12.5, 0.02));
    CHECK_THROWS_AS(lemma1_max_info(tight, squeezed), threshold_error);

    // Self-consistency: MI with the optimal prior equals the closed form.
    SplitMix64 rng(47);
    for (int i = 0; i < 15; ++i) {
        auto b = CovarianceMatrix::validate(random_covariance(rng, 2));
        Mat vac = vacuum_covariance(complex_structure(b)).mat();
        // alpha = vac + PD guarantees the threshold.
        auto a = CovarianceMatrix::validate(random_covariance(rng, 2) + vac);
        auto res3 = lemma1_max_info(a, b);
        CHECK(std::abs(gaussian_mi(res3.optimal_gamma, b.mat() + vac) - res3.info_nats) < 1e-10);
    }
}
