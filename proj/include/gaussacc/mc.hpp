#pragma once

#include <cstdint>
#include <string>

#include "gaussacc/ensemble.hpp"

namespace gaussacc {

struct McEstimate {
    double value_nats;
    double stderr_value;
    long n_samples;
    std::uint64_t seed;
    std::string rng;  // algorithm provenance
};

// Monte Carlo estimate of the classical mutual information of the channel
// z ~ N(0, gamma), y | z ~ N(z, beta + beta_m); K = I throughout. Samples
// are drawn from per-index substreams and reduced in fixed chunk order, so
// the estimate is bit-identical for a given seed regardless of threads.
McEstimate mc_mutual_info(const GaussianEnsemble& e, const GaussianObservable& obs, long n,
                          std::uint64_t seed, int threads = 1);

}  // namespace gaussacc
