#pragma once

#include <cstdint>

#include "gaussacc/ensemble.hpp"

namespace gaussacc {

// Counter-based stream: every draw is a pure function of (seed, counter),
// so sampling order and parallel schedule cannot change the results.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1].
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (first component only; deterministic
    // two-uniform recipe, no cached state).
    double next_normal();

    // Derive an independent stream for (seed, index).
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return SplitMix64(mix.next_u64());
    }

  private:
    std::uint64_t state_;
};

// Vector of iid standard normals.
Vec normal_vector(SplitMix64& rng, int n);

// Random valid quantum covariance: random SPD rescaled so the minimum
// symplectic eigenvalue lands in [1/2, ~2].
Mat random_covariance(SplitMix64& rng, int modes);

// Random symmetric strictly PD matrix.
Mat random_spd(SplitMix64& rng, int dim);

// Per-mode scalar-multiple-of-identity (gauge-invariant) pair; optionally
// conjugated by a random symplectic orthogonal rotation.
struct GaugeInvariantInstance {
    GaussianEnsemble ensemble;
    Vec photon_numbers;  // N_j >= 0
    Vec signal_powers;   // Sigma_j >= 0
};
GaugeInvariantInstance random_gauge_invariant(SplitMix64& rng, int modes, bool rotated);

// Ensemble with gamma = beta + random PSD (always passes the threshold).
GaussianEnsemble random_dominated_ensemble(SplitMix64& rng, int modes);

// General random ensemble; threshold may or may not hold.
GaussianEnsemble random_ensemble(SplitMix64& rng, int modes);

}  // namespace gaussacc
