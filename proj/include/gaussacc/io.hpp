#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gaussacc/accinfo.hpp"
#include "gaussacc/single_mode.hpp"

namespace gaussacc {

struct JobConfig {
    int modes = 0;
    Mat gamma;
    Mat beta;
    std::string units = "nats";  // "nats" | "bits"
    std::optional<Mat> alpha;    // for the lemma command
    std::optional<Mat> beta_m;
    std::optional<std::uint64_t> seed;
    std::optional<long> n_samples;
    std::optional<int> cutoff;
};

// Throws validation_error on malformed JSON or shape mismatches; matrix
// validity (uncertainty relation etc.) is checked when building the
// ensemble, not here.
JobConfig parse_config(const std::string& json_text);
JobConfig load_config(const std::string& path);

// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

// FNV-1a over the canonical config serialization.
std::string config_hash(const std::string& canonical);

nlohmann::json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& arr, int rows, int cols, const char* name);

// Report JSON: mirrors AccInfoReport, echoes the input config, adds
// provenance. Absent quantities are omitted. Info values are emitted in
// the configured units ("*_nats" or "*_bits" keys).
nlohmann::json report_to_json(const AccInfoReport& rep, const JobConfig& cfg,
                              const std::string& tool_version);

// CSV rows: header gamma1,gamma2,holds,accinfo_nats; empty field for null.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

}  // namespace gaussacc
