#include "gaussacc/mc.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "gaussacc/sampling.hpp"

namespace gaussacc {

namespace {

constexpr long kChunk = 8192;

struct Partial {
    double sum = 0.0;
    double sum_sq = 0.0;
};

struct Densities {
    Mat cond_inv;       // (beta + beta_m)^{-1}
    Mat marg_inv;       // (gamma + beta + beta_m)^{-1}
    double logdet_gap;  // 1/2 (logdet marg - logdet cond)
    Mat chol_gamma;
    Mat chol_cond;
};

Mat pd_inv(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m));
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw validation_error("mc_mutual_info: density covariance not positive definite");
    return es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
           es.eigenvectors().transpose();
}

// ln p(y|z) - ln pbar(y) for one sample drawn from the (seed, index) stream.
double sample_value(const Densities& d, std::uint64_t seed, std::uint64_t index, int dim) {
    SplitMix64 rng = SplitMix64::substream(seed, index);
    Vec z = d.chol_gamma * normal_vector(rng, dim);
    Vec noise = d.chol_cond * normal_vector(rng, dim);
    Vec y = z + noise;
    const double log_cond = -0.5 * noise.dot(d.cond_inv * noise);
    const double log_marg = -0.5 * y.dot(d.marg_inv * y);
    return log_cond - log_marg + d.logdet_gap;
}

}  // namespace

McEstimate mc_mutual_info(const GaussianEnsemble& e, const GaussianObservable& obs, long n,
                          std::uint64_t seed, int threads) {
    if (n < 1000) throw validation_error("mc_mutual_info: need n >= 1000");
    if ((obs.K - Mat::Identity(obs.K.rows(), obs.K.cols())).cwiseAbs().maxCoeff() > 1e-12)
        throw validation_error("mc_mutual_info: only K = I observables are supported");
    const int dim = e.dim();

    Densities d;
    Mat cond = e.beta().mat() + obs.beta_m.mat();
    Mat marg = e.gamma() + cond;
    d.cond_inv = pd_inv(cond);
    d.marg_inv = pd_inv(marg);
    d.logdet_gap = 0.5 * (logdet_pd(marg) - logdet_pd(cond));
    d.chol_gamma = Eigen::LLT<Mat>(symmetrize(e.gamma())).matrixL();
    d.chol_cond = Eigen::LLT<Mat>(cond).matrixL();

    const long n_chunks = (n + kChunk - 1) / kChunk;
    std::vector<Partial> partials(n_chunks);
    auto run_chunk = [&](long c) {
        const long begin = c * kChunk;
        const long end = std::min(begin + kChunk, n);
        Partial p;
        for (long i = begin; i < end; ++i) {
            const double v = sample_value(d, seed, static_cast<std::uint64_t>(i), dim);
            p.sum += v;
            p.sum_sq += v * v;
        }
        partials[c] = p;
    };

    if (threads <= 1 || n_chunks == 1) {
        for (long c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        const int nt = static_cast<int>(std::min<long>(threads, n_chunks));
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (long c = t; c < n_chunks; c += nt) run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }

    // Fixed chunk-order reduction keeps the result schedule-independent.
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& p : partials) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = std::max(sum_sq / static_cast<double>(n) - mean * mean, 0.0);
    const double se = std::sqrt(var / static_cast<double>(n));
    return {mean, se, n, seed, "splitmix64+box-muller"};
}

}  // namespace gaussacc
