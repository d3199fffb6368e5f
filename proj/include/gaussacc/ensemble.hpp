#pragma once

#include "gaussacc/gaussian_ops.hpp"

namespace gaussacc {

// Prior pi_gamma over displacements z, applied to the signal state
// rho_{beta,z} = D(z) rho_beta D(z)^*.
class GaussianEnsemble {
  public:
    // gamma must be symmetric strictly PD, beta a valid quantum covariance.
    static GaussianEnsemble validate(const Mat& gamma, const Mat& beta);

    const Mat& gamma() const { return gamma_; }
    const CovarianceMatrix& beta() const { return beta_; }
    int modes() const { return beta_.modes(); }
    int dim() const { return beta_.dim(); }

  private:
    GaussianEnsemble(Mat g, CovarianceMatrix b) : gamma_(std::move(g)), beta_(std::move(b)) {}
    Mat gamma_;
    CovarianceMatrix beta_;
};

// Gaussian POVM D(Kz) rho_{beta_m} D(Kz)^* |det K| dz / (2 pi)^s.
struct GaussianObservable {
    Mat K;
    CovarianceMatrix beta_m;
};

GaussianObservable make_observable(const Mat& K, const Mat& beta_m);

// Classical channel y = mean_map * z + noise, noise ~ N(0, noise_cov).
struct OutcomeModel {
    Mat mean_map;
    Mat noise_cov;
};

GaussianState average_state(const GaussianEnsemble& e);

// K = I, noise = the J_beta vacuum (squeezed heterodyne).
GaussianObservable heterodyne_observable(const CovarianceMatrix& beta);

OutcomeModel outcome_density(const GaussianState& state, const GaussianObservable& obs);

// 1/2 (logdet(prior + cond) - logdet(cond)), nats.
double gaussian_mi(const Mat& prior_cov, const Mat& cond_cov);

struct Lemma1Result {
    double info_nats;
    Mat optimal_gamma;  // alpha - 1/2 Delta J_beta
};

// Max of I(E, M) over ensembles averaging to rho_alpha, for the Gaussian
// observable with noise beta_m. Requires alpha >= 1/2 Delta J_{beta_m}.
Lemma1Result lemma1_max_info(const CovarianceMatrix& alpha, const CovarianceMatrix& beta_m);

}  // namespace gaussacc
