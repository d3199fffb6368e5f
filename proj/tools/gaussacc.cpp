#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gaussacc/accinfo.hpp"
#include "gaussacc/fock.hpp"
#include "gaussacc/io.hpp"
#include "gaussacc/mc.hpp"
#include "gaussacc/sampling.hpp"
#include "gaussacc/single_mode.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 1 usage/config, 2 threshold failure, 3 numeric validation.
constexpr int kExitUsage = 1;
constexpr int kExitThreshold = 2;
constexpr int kExitValidation = 3;

using gaussacc::GridSpec;
using gaussacc::Mat;
using gaussacc::Vec;
using nlohmann::json;

int resolve_threads() {
    const char* env = std::getenv("GAUSSACC_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    if (v == 0) return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return std::max(v, 1);
}

GridSpec parse_grid(const std::string& spec) {
    GridSpec g;
    double mn, mx;
    int n;
    char scale[8] = {0};
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d:%7s", &mn, &mx, &n, scale) != 4)
        throw gaussacc::validation_error("grid: expected MIN:MAX:N:log|lin");
    g.min = mn;
    g.max = mx;
    g.n = n;
    const std::string sc = scale;
    if (sc == "log")
        g.log_spaced = true;
    else if (sc == "lin")
        g.log_spaced = false;
    else
        throw gaussacc::validation_error("grid: scale must be log or lin");
    return g;
}

int cmd_compute(const std::string& config_path) {
    gaussacc::JobConfig cfg;
    try {
        cfg = gaussacc::load_config(config_path);
        if (cfg.gamma.size() == 0 || cfg.beta.size() == 0)
            throw gaussacc::validation_error("config: compute needs 'gamma' and 'beta'");
    } catch (const gaussacc::validation_error& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitUsage;
    }
    try {
        auto e = gaussacc::GaussianEnsemble::validate(cfg.gamma, cfg.beta);
        auto rep = gaussacc::full_report(e);
        std::cout << gaussacc::report_to_json(rep, cfg, kVersion).dump(2) << "\n";
        return rep.threshold_holds ? 0 : kExitThreshold;
    } catch (const gaussacc::validation_error& ex) {
        json err{{"error", "validation"}, {"message", ex.what()}};
        std::cerr << err.dump(2) << "\n";
        return kExitValidation;
    }
}

int cmd_lemma(const std::string& config_path) {
    gaussacc::JobConfig cfg;
    try {
        cfg = gaussacc::load_config(config_path);
        if (!cfg.alpha || !cfg.beta_m)
            throw gaussacc::validation_error("config: lemma needs 'alpha' and 'beta_m'");
    } catch (const gaussacc::validation_error& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return kExitUsage;
    }
    try {
        auto alpha = gaussacc::CovarianceMatrix::validate(*cfg.alpha);
        auto beta_m = gaussacc::CovarianceMatrix::validate(*cfg.beta_m);
        auto res = gaussacc::lemma1_max_info(alpha, beta_m);
        const bool bits = cfg.units == "bits";
        json out{{"units", cfg.units},
                 {bits ? "max_info_bits" : "max_info_nats",
                  bits ? res.info_nats / std::numbers::ln2 : res.info_nats},
                 {"optimal_gamma", gaussacc::matrix_to_json(res.optimal_gamma)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const gaussacc::threshold_error& ex) {
        json err{{"error", "threshold"}, {"message", ex.what()}, {"margin", ex.margin()}};
        std::cerr << err.dump(2) << "\n";
        return kExitThreshold;
    } catch (const gaussacc::validation_error& ex) {
        json err{{"error", "validation"}, {"message", ex.what()}};
        std::cerr << err.dump(2) << "\n";
        return kExitValidation;
    }
}

int cmd_scan(double beta, const std::string& grid_spec, const std::string& out_path) {
    try {
        auto rows = gaussacc::threshold_domain_scan(beta, parse_grid(grid_spec));
        std::string csv = gaussacc::scan_to_csv(rows);
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "scan: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        out << csv;
        std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
        return 0;
    } catch (const gaussacc::validation_error& ex) {
        std::cerr << "scan error: " << ex.what() << "\n";
        return kExitValidation;
    }
}

struct CheckSink {
    int failures = 0;
    void check(const std::string& name, double deviation, double tol) {
        const bool ok = deviation <= tol;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  deviation="
                  << gaussacc::format_double(deviation) << "  tol=" << gaussacc::format_double(tol)
                  << "\n";
    }
};

int verify_duality(std::uint64_t seed, long n) {
    CheckSink sink;
    gaussacc::SplitMix64 rng(seed);
    double worst = 0.0;
    for (long i = 0; i < n; ++i) {
        const int modes = 1 + static_cast<int>(rng.next_u64() % 3);
        auto e = gaussacc::random_ensemble(rng, modes);
        auto dual = gaussacc::dual_observable(e);
        auto at = gaussacc::CovarianceMatrix::validate(dual.alpha_tilde);
        Mat recovered = gaussacc::sandwich_cov(at, dual.beta_tilde).mat();
        worst = std::max(worst, (recovered - e.beta().mat()).cwiseAbs().maxCoeff());
    }
    sink.check("duality round trip, " + std::to_string(n) + " instances", worst, 1e-9);
    return sink.failures == 0 ? 0 : kExitThreshold;
}

int verify_attainment(std::uint64_t seed, long n) {
    CheckSink sink;
    gaussacc::SplitMix64 rng(seed);
    double worst_info = 0.0, worst_pure = 0.0;
    long done = 0;
    while (done < n) {
        const int modes = 1 + static_cast<int>(rng.next_u64() % 3);
        auto e = (done % 2 == 0) ? gaussacc::random_dominated_ensemble(rng, modes)
                                 : gaussacc::random_ensemble(rng, modes);
        auto thr = gaussacc::threshold_check(e);
        if (!(thr.holds && thr.margin > 1e-6)) continue;
        ++done;
        const double aim = gaussacc::accessible_info(e);
        auto opt = gaussacc::optimal_observable(e);
        const double mi = gaussacc::gaussian_mi(e.gamma(), e.beta().mat() + opt.beta_star.mat());
        worst_info = std::max(worst_info, std::abs(mi - aim));
        for (double nu : gaussacc::symplectic_eigenvalues(opt.beta_star.mat()))
            worst_pure = std::max(worst_pure, std::abs(nu - 0.5));
    }
    sink.check("attainment MI(beta*) vs closed form, " + std::to_string(n) + " instances",
               worst_info, 1e-9);
    sink.check("beta* purity (symplectic eigenvalues at 1/2)", worst_pure, 1e-8);
    return sink.failures == 0 ? 0 : kExitThreshold;
}

int verify_fock(int cutoff) {
    CheckSink sink;
    gaussacc::SplitMix64 rng(20240811);
    double worst_plus = 0.0, worst_sqsq = 0.0;
    for (int i = 0; i < 24; ++i) {
        const double nu_a = 0.5 + 1.5 * rng.next_unit();
        const double nu_b = 0.5 + 1.5 * rng.next_unit();
        const double ra = 0.6 * (rng.next_unit() - 0.5);
        const double rb = 0.6 * (rng.next_unit() - 0.5);
        Mat alpha = Vec{{nu_a * std::exp(2 * ra), nu_a * std::exp(-2 * ra)}}.asDiagonal();
        Mat beta = Vec{{nu_b * std::exp(2 * rb), nu_b * std::exp(-2 * rb)}}.asDiagonal();
        Vec z(2), z1(2), z2(2);
        z << 2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0;
        z1 << 2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0;
        z2 << 2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0;

        const double fock = gaussacc::fock_outcome_prob(alpha, beta, z, cutoff);
        Mat sum = alpha + beta;
        const double closed = std::exp(-0.5 * z.dot(sum.inverse() * z)) /
                              std::sqrt(sum.determinant());
        worst_plus = std::max(worst_plus, std::abs(fock - closed));

        auto ac = gaussacc::CovarianceMatrix::validate(alpha);
        auto direct = gaussacc::sandwich_overlap(ac, z1, z2);
        auto oracle = gaussacc::fock_sqsq(alpha, z1, z2, cutoff);
        worst_sqsq = std::max(worst_sqsq, std::abs(direct - oracle));
    }
    sink.check("outcome density, Fock vs Gaussian closed form", worst_plus, 1e-6);
    sink.check("sqrt-sandwich identity, Fock vs closed form", worst_sqsq, 1e-5);
    return sink.failures == 0 ? 0 : kExitThreshold;
}

int verify_mc(std::uint64_t seed, long n) {
    CheckSink sink;
    const int threads = resolve_threads();
    gaussacc::SplitMix64 rng(seed);
    double worst_sigmas = 0.0;
    for (int i = 0; i < 8; ++i) {
        auto e = gaussacc::random_dominated_ensemble(rng, 1 + static_cast<int>(i % 2));
        auto opt = gaussacc::optimal_observable(e);
        gaussacc::GaussianObservable obs{Mat::Identity(e.dim(), e.dim()), opt.beta_star};
        auto est = gaussacc::mc_mutual_info(e, obs, n, seed + i, threads);
        const double exact = gaussacc::accessible_info(e);
        worst_sigmas =
            std::max(worst_sigmas, std::abs(est.value_nats - exact) / est.stderr_value);
    }
    sink.check("MC estimate within 4 stderr of closed form (worst, in sigmas)", worst_sigmas,
               4.0);
    return sink.failures == 0 ? 0 : kExitThreshold;
}

int verify_singlemode(std::uint64_t seed, long n) {
    CheckSink sink;
    gaussacc::SplitMix64 rng(seed);
    double worst = 0.0;
    long done = 0;
    while (done < n) {
        gaussacc::SingleModeParams p{};
        p.beta1 = 0.3 + 2.0 * rng.next_unit();
        p.beta2 = std::max(0.25 / p.beta1, 0.3 + 2.0 * rng.next_unit());
        p.gamma1 = 0.05 + 3.0 * rng.next_unit();
        p.gamma2 = 0.05 + 3.0 * rng.next_unit();
        if (!gaussacc::sm_threshold(p)) continue;
        ++done;
        Mat beta = Vec{{p.beta1, p.beta2}}.asDiagonal();
        Mat gamma = Vec{{p.gamma1, p.gamma2}}.asDiagonal();
        auto e = gaussacc::GaussianEnsemble::validate(gamma, beta);
        worst = std::max(worst, std::abs(gaussacc::sm_accinfo(p) - gaussacc::accessible_info(e)));
    }
    sink.check("single-mode closed form vs general pipeline, " + std::to_string(n) + " instances",
               worst, 1e-9);
    return sink.failures == 0 ? 0 : kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accessible information of multimode Gaussian ensembles"};
    app.require_subcommand(1);

    std::string config_path, grid_spec = "1e-2:1e2:200:log", out_path = "scan.csv", suite;
    double beta_value = 0.5;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long n = 0;
    int cutoff = 60;

    auto* compute = app.add_subcommand("compute", "Full report for a Gaussian ensemble");
    compute->add_option("--config", config_path, "JSON config path")->required();

    auto* lemma = app.add_subcommand("lemma", "Max info for a fixed observable (alpha, beta_m)");
    lemma->add_option("--config", config_path, "JSON config path")->required();

    auto* scan = app.add_subcommand("scan", "Threshold-domain scan over (gamma1, gamma2)");
    scan->add_option("--beta", beta_value, "beta1 = beta2 = beta (>= 1/2)")->required();
    scan->add_option("--grid", grid_spec, "MIN:MAX:N:log|lin");
    scan->add_option("--out", out_path, "output CSV path");

    auto* verify = app.add_subcommand("verify", "Run an oracle suite");
    verify->add_option("suite", suite, "duality|attainment|fock|mc|singlemode")->required();
    auto* seed_opt = verify->add_option("--seed", seed, "RNG seed (required for random suites)");
    verify->add_option("--n", n, "instance / sample count");
    verify->add_option("--cutoff", cutoff, "Fock cutoff");

    CLI11_PARSE(app, argc, argv);
    seed_set = seed_opt->count() > 0;

    try {
        if (*compute) return cmd_compute(config_path);
        if (*lemma) return cmd_lemma(config_path);
        if (*scan) return cmd_scan(beta_value, grid_spec, out_path);
        if (*verify) {
            const bool needs_seed = suite != "fock";
            if (needs_seed && !seed_set) {
                std::cerr << "verify " << suite << ": --seed is required (no wall-clock seeding)\n";
                return kExitUsage;
            }
            if (suite == "duality") return verify_duality(seed, n > 0 ? n : 200);
            if (suite == "attainment") return verify_attainment(seed, n > 0 ? n : 200);
            if (suite == "fock") return verify_fock(cutoff);
            if (suite == "mc") return verify_mc(seed, n > 0 ? n : 100000);
            if (suite == "singlemode") return verify_singlemode(seed, n > 0 ? n : 1000);
            std::cerr << "unknown suite: " << suite << "\n";
            return kExitUsage;
        }
    } catch (const gaussacc::threshold_error& ex) {
        std::cerr << "threshold error: " << ex.what() << "\n";
        return kExitThreshold;
    } catch (const gaussacc::validation_error& ex) {
        std::cerr << "validation error: " << ex.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
