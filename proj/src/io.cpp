#include "gaussacc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gaussacc {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string config_hash(const std::string& canonical) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json matrix_to_json(const Mat& m) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) arr.push_back(m(i, j));
    return arr;
}

Mat matrix_from_json(const json& arr, int rows, int cols, const char* name) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != rows * cols)
        throw validation_error(std::string(name) + ": expected flat row-major array of " +
                               std::to_string(rows * cols) + " numbers");
    Mat m(rows, cols);
    int k = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!arr[k].is_number()) throw validation_error(std::string(name) + ": non-numeric entry");
            m(i, j) = arr[k++].get<double>();
        }
    return m;
}

JobConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw validation_error(std::string("config: invalid JSON: ") + ex.what());
    }
    JobConfig cfg;
    if (!j.contains("modes") || !j["modes"].is_number_integer())
        throw validation_error("config: missing integer field 'modes'");
    cfg.modes = j["modes"].get<int>();
    if (cfg.modes < 1) throw validation_error("config: modes must be >= 1");
    const int d = 2 * cfg.modes;
    if (j.contains("gamma")) cfg.gamma = matrix_from_json(j["gamma"], d, d, "gamma");
    if (j.contains("beta")) cfg.beta = matrix_from_json(j["beta"], d, d, "beta");
    if (j.contains("alpha")) cfg.alpha = matrix_from_json(j["alpha"], d, d, "alpha");
    if (j.contains("beta_m")) cfg.beta_m = matrix_from_json(j["beta_m"], d, d, "beta_m");
    if (j.contains("units")) {
        cfg.units = j["units"].get<std::string>();
        if (cfg.units != "nats" && cfg.units != "bits")
            throw validation_error("config: units must be 'nats' or 'bits'");
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("n_samples")) cfg.n_samples = j["n_samples"].get<long>();
    if (j.contains("cutoff")) cfg.cutoff = j["cutoff"].get<int>();
    return cfg;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

double in_units(double nats, const std::string& units) {
    return units == "bits" ? nats / std::numbers::ln2 : nats;
}

std::string info_key(const std::string& base, const std::string& units) {
    return base + "_" + units;
}

}  // namespace

json report_to_json(const AccInfoReport& rep, const JobConfig& cfg,
                    const std::string& tool_version) {
    json input{{"modes", cfg.modes},
               {"gamma", matrix_to_json(cfg.gamma)},
               {"beta", matrix_to_json(cfg.beta)},
               {"units", cfg.units}};
    json j;
    j["tool_version"] = tool_version;
    j["config_hash"] = config_hash(input.dump());
    j["input"] = input;
    j["units"] = cfg.units;
    j["alpha_tilde"] = matrix_to_json(rep.alpha_tilde);
    j["beta_tilde"] = matrix_to_json(rep.beta_tilde);
    j["K_tilde"] = matrix_to_json(rep.K_tilde);
    j["J_beta_tilde"] = matrix_to_json(rep.J_beta_tilde);
    j["threshold_margin"] = rep.threshold_margin;
    j["threshold_holds"] = rep.threshold_holds;
    j["boundary"] = rep.boundary;
    j[info_key("lower_bound", cfg.units)] = in_units(rep.lower_bound_nats, cfg.units);
    j["sufficient_condition_holds"] = rep.sufficient_condition_holds;
    j["gauge_invariant"] = rep.gauge_invariant;
    if (rep.accessible_info_nats)
        j[info_key("accessible_info", cfg.units)] = in_units(*rep.accessible_info_nats, cfg.units);
    if (rep.beta_star) j["beta_star"] = matrix_to_json(*rep.beta_star);
    if (rep.K_star) j["K_star"] = matrix_to_json(*rep.K_star);
    return j;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "gamma1,gamma2,holds,accinfo_nats\n";
    for (const auto& r : rows) {
        out += format_double(r.gamma1);
        out += ',';
        out += format_double(r.gamma2);
        out += ',';
        out += r.holds ? "true" : "false";
        out += ',';
        if (r.accinfo_nats) out += format_double(*r.accinfo_nats);
        out += '\n';
    }
    return out;
}

}  // namespace gaussacc
