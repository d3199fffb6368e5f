#include <doctest.h>

#include <cmath>

#include "gaussacc/accinfo.hpp"
#include "gaussacc/sampling.hpp"
#include "gaussacc/single_mode.hpp"

using namespace gaussacc;

namespace {
Mat diag2(double a, double b) { return Vec{{a, b}}.asDiagonal(); }

SingleModeParams random_params(SplitMix64& rng) {
    SingleModeParams p{};
    p.beta1 = 0.3 + 2.0 * rng.next_unit();
    p.beta2 = std::max(0.25 / p.beta1 + 1e-3, 0.3 + 2.0 * rng.next_unit());
    p.gamma1 = 0.05 + 3.0 * rng.next_unit();
    p.gamma2 = 0.05 + 3.0 * rng.next_unit();
    return p;
}
}  // namespace

TEST_CASE("tilde parameters") {
    auto t = sm_tilde_params({1.0, 1.0, 1.0, 1.0});
    CHECK(t.alpha1 == 2.0);
    CHECK(t.alpha2 == 2.0);
    CHECK(t.beta1 == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(t.beta2 == doctest::Approx(1.75).epsilon(1e-15));

    auto u = sm_tilde_params({0.5, 0.5, 2.0, 1.0});
    CHECK(u.alpha1 == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(u.alpha2 == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(u.beta1 == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
    CHECK(u.beta2 == doctest::Approx(0.6).epsilon(1e-12));

    SplitMix64 rng(83);
    for (int i = 0; i < 200; ++i) {
        auto t2 = sm_tilde_params(random_params(rng));
        CHECK(t2.beta1 * t2.beta2 >= 0.25 - 1e-10);
    }

    CHECK_THROWS_AS(sm_tilde_params({1.0, 1.0, -1.0, 1.0}), validation_error);
    CHECK_THROWS_AS(sm_tilde_params({0.1, 0.1, 1.0, 1.0}), validation_error);
}

TEST_CASE("threshold window") {
    CHECK(sm_threshold({0.5, 0.5, 2.0, 1.0}));   // 1/3 <= 2 <= 5
    CHECK_FALSE(sm_threshold({0.5, 0.5, 1.0, 0.01}));  // 100 > 3

    SplitMix64 rng(89);
    for (int i = 0; i < 100; ++i) {
        const double b = 0.5 + 2.0 * rng.next_unit();
        const double g = 0.05 + 3.0 * rng.next_unit();
        CHECK(sm_threshold({b, b, g, g}));  // symmetric case always inside
    }

    // Proposition 1 restricted to diagonal instances.
    for (int i = 0; i < 200; ++i) {
        auto p = random_params(rng);
        p.gamma1 = p.beta1 + 2.0 * rng.next_unit();
        p.gamma2 = p.beta2 + 2.0 * rng.next_unit();
        CHECK(sm_threshold(p));
    }
}

TEST_CASE("closed-form accessible information") {
    CHECK(sm_accinfo({1.0, 1.0, 1.0, 1.0}) ==
          doctest::Approx(std::log(5.0 / 3.0)).epsilon(1e-12));

    const double expect = std::log(3.5 / (std::sqrt(0.5) + std::sqrt(2.0) / 2.0));
    CHECK(sm_accinfo({0.5, 0.5, 2.0, 1.0}) == doctest::Approx(expect).epsilon(1e-12));
    // ln(3.5 / sqrt(2)): numerator 2.5*1.5 - 1/4, denominator sqrt(0.5) + sqrt(2)/2.
    CHECK(sm_accinfo({0.5, 0.5, 2.0, 1.0}) ==
          doctest::Approx(std::log(3.5 / std::sqrt(2.0))).epsilon(1e-12));

    CHECK_THROWS_AS(sm_accinfo({0.5, 0.5, 1.0, 0.01}), threshold_error);

    // Symmetric under the joint swap (beta1,gamma1) <-> (beta2,gamma2).
    SplitMix64 rng(97);
    for (int i = 0; i < 100; ++i) {
        auto p = random_params(rng);
        if (!sm_threshold(p)) continue;
        SingleModeParams q{p.beta2, p.beta1, p.gamma2, p.gamma1};
        CHECK(sm_accinfo(p) == doctest::Approx(sm_accinfo(q)).epsilon(1e-12));
    }
}

TEST_CASE("equivalence with the general pipeline") {
    SplitMix64 rng(101);
    int done = 0;
    while (done < 300) {
        auto p = random_params(rng);
        if (!sm_threshold(p)) continue;
        ++done;
        auto e = GaussianEnsemble::validate(diag2(p.gamma1, p.gamma2), diag2(p.beta1, p.beta2));
        CHECK(std::abs(sm_accinfo(p) - accessible_info(e)) < 1e-9);
    }
}

TEST_CASE("optimal measurement parameters") {
    auto o = sm_optimal_meas({1.0, 1.0, 1.0, 1.0});
    CHECK(o.beta_star1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(o.beta_star2 == doctest::Approx(0.5).epsilon(1e-12));

    auto o2 = sm_optimal_meas({0.5, 0.5, 2.0, 1.0});
    CHECK(o2.beta_star1 * o2.beta_star2 == doctest::Approx(0.25).epsilon(1e-10));

    // Matches the matrix-valued beta* of the general pipeline.
    SplitMix64 rng(103);
    int done = 0;
    while (done < 100) {
        auto p = random_params(rng);
        if (!sm_threshold(p)) continue;
        auto e = GaussianEnsemble::validate(diag2(p.gamma1, p.gamma2), diag2(p.beta1, p.beta2));
        if (threshold_check(e).margin <= 1e-6) continue;
        ++done;
        auto sm = sm_optimal_meas(p);
        auto full = optimal_observable(e);
        CHECK(full.beta_star.mat()(0, 0) == doctest::Approx(sm.beta_star1).epsilon(1e-9));
        CHECK(full.beta_star.mat()(1, 1) == doctest::Approx(sm.beta_star2).epsilon(1e-9));
        CHECK(sm.beta_star1 * sm.beta_star2 == doctest::Approx(0.25).epsilon(1e-10));
    }
}

TEST_CASE("lemma-level closed form") {
    CHECK(sm_lemma_info(1.5, 1.5, 1.0, 1.0) ==
          doctest::Approx(std::log(5.0 / 3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(sm_lemma_info(0.26, 6.25, 12.5, 0.02), threshold_error);

    SplitMix64 rng(107);
    for (int i = 0; i < 100; ++i) {
        const double a1 = 0.6 + 2.0 * rng.next_unit();
        const double a2 = std::max(0.25 / a1 + 1e-3, 0.6 + 2.0 * rng.next_unit());
        const double b1 = 0.6 + rng.next_unit();
        const double b2 = std::max(0.25 / b1 + 1e-3, 0.6 + rng.next_unit());
        const double ratio = b1 / b2;
        if (ratio < 1.0 / (4 * a2 * a2) || ratio > 4 * a1 * a1) continue;
        auto res = lemma1_max_info(CovarianceMatrix::validate(diag2(a1, a2)),
                                   CovarianceMatrix::validate(diag2(b1, b2)));
        CHECK(std::abs(sm_lemma_info(a1, a2, b1, b2) - res.info_nats) < 1e-10);
    }
}

TEST_CASE("threshold domain scan") {
    GridSpec g{1e-2, 1e2, 40, true};
    auto rows = threshold_domain_scan(0.5, g);
    CHECK(rows.size() == 40u * 40u);

    // Row order: gamma1 outer ascending, gamma2 inner ascending.
    CHECK(rows[0].gamma1 == doctest::Approx(1e-2));
    CHECK(rows[1].gamma1 == rows[0].gamma1);
    CHECK(rows[1].gamma2 > rows[0].gamma2);
    CHECK(rows[40].gamma1 > rows[0].gamma1);

    // Known points for beta = 1/2.
    CHECK(sm_threshold({0.5, 0.5, 2.0, 1.0}));
    CHECK_FALSE(sm_threshold({0.5, 0.5, 1.0, 0.01}));

    for (const auto& r : rows) {
        CHECK(r.accinfo_nats.has_value() == r.holds);
        if (r.accinfo_nats) CHECK(*r.accinfo_nats >= 0.0);
    }

    // The diagonal gamma1 = gamma2 always lies inside, for any beta.
    for (double beta : {0.5, 1.0, 10.0}) {
        auto diag_rows = threshold_domain_scan(beta, GridSpec{1e-2, 1e2, 10, true});
        for (const auto& r : diag_rows)
            if (r.gamma1 == r.gamma2) CHECK(r.holds);
    }

    CHECK_THROWS_AS(threshold_domain_scan(0.4, g), validation_error);
}
