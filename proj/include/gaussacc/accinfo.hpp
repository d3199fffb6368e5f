#pragma once

#include <optional>

#include "gaussacc/ensemble.hpp"

namespace gaussacc {

// Observable dual to the ensemble: M'(dz) = D(K~ z) rho_{beta~} D(K~ z)^*.
struct DualObservable {
    Mat K_tilde;
    CovarianceMatrix beta_tilde;
    Mat alpha_tilde;   // gamma + beta
    Mat upsilon_tilde; // Upsilon(alpha_tilde)
};

DualObservable dual_observable(const GaussianEnsemble& e);

struct ThresholdResult {
    bool holds;
    double margin;  // min eigenvalue of alpha~ - 1/2 Delta J_{beta~}
};

ThresholdResult threshold_check(const GaussianEnsemble& e);

// gamma >= beta implies the threshold condition (sufficient, not necessary).
bool sufficient_condition(const GaussianEnsemble& e);

// 1/2 logdet (alpha~ + beta~)(beta~ + 1/2 Delta J_{beta~})^{-1}, nats.
// Throws threshold_error when the threshold condition fails.
double accessible_info(const GaussianEnsemble& e);

struct OptimalObservable {
    Mat K_star;
    CovarianceMatrix beta_star;  // squeezed vacuum, all symplectic eigenvalues 1/2
};

// Requires the threshold to hold strictly (margin > 1e-9).
OptimalObservable optimal_observable(const GaussianEnsemble& e);

// Information of the plain squeezed-heterodyne observable with noise
// 1/2 Delta J_beta; a lower bound on accessible_info, tight in the
// gauge-invariant case.
double heterodyne_lower_bound(const GaussianEnsemble& e);

// Gauge-invariant closed form: logdet(I + (N + I)^{-1} Sigma) over the
// per-mode diagonal parameters.
double gauge_invariant_info(const Vec& photon_numbers, const Vec& signal_powers);

struct AccInfoReport {
    Mat alpha_tilde;
    Mat beta_tilde;
    Mat K_tilde;
    Mat J_beta_tilde;
    double threshold_margin = 0.0;
    bool threshold_holds = false;
    bool boundary = false;  // margin within (-1e-9, 1e-9]
    std::optional<double> accessible_info_nats;
    std::optional<Mat> beta_star;
    std::optional<Mat> K_star;
    double lower_bound_nats = 0.0;
    bool sufficient_condition_holds = false;
    bool gauge_invariant = false;
};

AccInfoReport full_report(const GaussianEnsemble& e);

}  // namespace gaussacc
