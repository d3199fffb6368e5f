#pragma once

#include <optional>
#include <vector>

#include "gaussacc/linalg.hpp"

namespace gaussacc {

// Diagonal one-mode ensemble parameters: beta = diag(beta1, beta2) with
// beta1*beta2 >= 1/4, prior gamma = diag(gamma1, gamma2) > 0.
struct SingleModeParams {
    double beta1;
    double beta2;
    double gamma1;
    double gamma2;
};

void validate_params(const SingleModeParams& p);

struct SmTildeParams {
    double alpha1;
    double alpha2;
    double beta1;
    double beta2;
};

SmTildeParams sm_tilde_params(const SingleModeParams& p);

// 1/(4(b2+g2)b2) <= g1/g2 <= 4(b1+g1)b1.
bool sm_threshold(const SingleModeParams& p);

// Closed-form accessible information, nats. Throws threshold_error when
// sm_threshold fails.
double sm_accinfo(const SingleModeParams& p);

// Optimal squeezed-vacuum noise (beta*_1, beta*_2); product is exactly 1/4.
struct SmOptimal {
    double beta_star1;
    double beta_star2;
};
SmOptimal sm_optimal_meas(const SingleModeParams& p);

// Lemma-level closed form 1/2 log[(b1+a1)(b2+a2)/(sqrt(b1 b2)+1/2)^2];
// requires the window 1/(4 a2^2) <= b1/b2 <= 4 a1^2.
double sm_lemma_info(double alpha1, double alpha2, double beta1, double beta2);

struct GridSpec {
    double min = 1e-2;
    double max = 1e2;
    int n = 200;
    bool log_spaced = true;
};

std::vector<double> grid_points(const GridSpec& g);

struct ScanRow {
    double gamma1;
    double gamma2;
    bool holds;
    std::optional<double> accinfo_nats;
};

// Fixes beta1 = beta2 = beta; row order gamma1 outer, gamma2 inner,
// both ascending.
std::vector<ScanRow> threshold_domain_scan(double beta, const GridSpec& grid);

// General diagonal scan (beta1 != beta2 allowed).
std::vector<ScanRow> threshold_domain_scan(double beta1, double beta2, const GridSpec& grid);

}  // namespace gaussacc
