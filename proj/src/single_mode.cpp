#include "gaussacc/single_mode.hpp"

#include <cmath>

namespace gaussacc {

void validate_params(const SingleModeParams& p) {
    if (!(std::isfinite(p.beta1) && std::isfinite(p.beta2) && std::isfinite(p.gamma1) &&
          std::isfinite(p.gamma2)))
        throw validation_error("single_mode: parameters must be finite");
    if (p.beta1 * p.beta2 < 0.25 - 1e-12)
        throw validation_error("single_mode: beta1*beta2 < 1/4");
    if (p.gamma1 <= 0.0 || p.gamma2 <= 0.0)
        throw validation_error("single_mode: gamma components must be positive");
}

SmTildeParams sm_tilde_params(const SingleModeParams& p) {
    validate_params(p);
    const double a1 = p.beta1 + p.gamma1;
    const double a2 = p.beta2 + p.gamma2;
    const double b1 = (a1 / p.gamma1) * (p.beta1 - 1.0 / (4.0 * a2));
    const double b2 = (a2 / p.gamma2) * (p.beta2 - 1.0 / (4.0 * a1));
    return {a1, a2, b1, b2};
}

bool sm_threshold(const SingleModeParams& p) {
    validate_params(p);
    const double ratio = p.gamma1 / p.gamma2;
    const double lo = 1.0 / (4.0 * (p.beta2 + p.gamma2) * p.beta2);
    const double hi = 4.0 * (p.beta1 + p.gamma1) * p.beta1;
    return ratio >= lo - 1e-12 && ratio <= hi + 1e-12;
}

double sm_accinfo(const SingleModeParams& p) {
    if (!sm_threshold(p))
        throw threshold_error("sm_accinfo: threshold condition fails", 0.0);
    const double a1 = p.beta1 + p.gamma1;
    const double a2 = p.beta2 + p.gamma2;
    const double num = a1 * a2 - 0.25;
    const double den = std::sqrt((a1 * p.beta2 - 0.25) * (a2 * p.beta1 - 0.25)) +
                       0.5 * std::sqrt(p.gamma1 * p.gamma2);
    return std::log(num / den);
}

SmOptimal sm_optimal_meas(const SingleModeParams& p) {
    auto t = sm_tilde_params(p);
    const double sq = std::sqrt(t.beta1 / t.beta2);
    const double d1 = t.alpha1 - 0.5 * sq;
    const double d2 = t.alpha2 - 0.5 / sq;
    if (d1 <= 1e-9 || d2 <= 1e-9)
        throw threshold_error("sm_optimal_meas: threshold not strictly satisfied",
                              std::min(d1, d2));
    const double b1 = 0.5 * sq * (t.alpha1 / t.alpha2) * (d2 / d1);
    const double b2 = 0.5 / sq * (t.alpha2 / t.alpha1) * (d1 / d2);
    return {b1, b2};
}

double sm_lemma_info(double alpha1, double alpha2, double beta1, double beta2) {
    if (alpha1 * alpha2 < 0.25 - 1e-12 || beta1 * beta2 < 0.25 - 1e-12)
        throw validation_error("sm_lemma_info: covariance constraints violated");
    const double ratio = beta1 / beta2;
    if (ratio < 1.0 / (4.0 * alpha2 * alpha2) - 1e-12 || ratio > 4.0 * alpha1 * alpha1 + 1e-12)
        throw threshold_error("sm_lemma_info: threshold window violated", 0.0);
    const double num = (beta1 + alpha1) * (beta2 + alpha2);
    const double den = std::sqrt(beta1 * beta2) + 0.5;
    return 0.5 * std::log(num / (den * den));
}

std::vector<double> grid_points(const GridSpec& g) {
    if (g.n < 1 || g.min <= 0.0 || g.max < g.min)
        throw validation_error("grid: need n >= 1 and 0 < min <= max");
    std::vector<double> pts(g.n);
    if (g.n == 1) {
        pts[0] = g.min;
        return pts;
    }
    if (g.log_spaced) {
        const double l0 = std::log(g.min), l1 = std::log(g.max);
        for (int i = 0; i < g.n; ++i) pts[i] = std::exp(l0 + (l1 - l0) * i / (g.n - 1));
    } else {
        for (int i = 0; i < g.n; ++i) pts[i] = g.min + (g.max - g.min) * i / (g.n - 1);
    }
    return pts;
}

std::vector<ScanRow> threshold_domain_scan(double beta1, double beta2, const GridSpec& grid) {
    auto pts = grid_points(grid);
    std::vector<ScanRow> rows;
    rows.reserve(pts.size() * pts.size());
    for (double g1 : pts) {
        for (double g2 : pts) {
            SingleModeParams p{beta1, beta2, g1, g2};
            ScanRow row{g1, g2, sm_threshold(p), std::nullopt};
            if (row.holds) row.accinfo_nats = sm_accinfo(p);
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<ScanRow> threshold_domain_scan(double beta, const GridSpec& grid) {
    if (beta < 0.5) throw validation_error("scan: beta must be >= 1/2");
    return threshold_domain_scan(beta, beta, grid);
}

}  // namespace gaussacc
