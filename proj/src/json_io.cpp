#include "lure/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lure/errors.hpp"

namespace lure {

namespace {

std::string format_double(double x) {
    if (!std::isfinite(x)) throw ValidationError("dump_json: non-finite number");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_value(std::string& out, const ordered_json& v, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    if (v.is_object()) {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in + ordered_json(it.key()).dump() + ": ";
            write_value(out, it.value(), depth + 1);
        }
        out += "\n" + pad + "}";
    } else if (v.is_array()) {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& item : v) {
            if (!first) out += ",\n";
            first = false;
            out += pad_in;
            write_value(out, item, depth + 1);
        }
        out += "\n" + pad + "]";
    } else if (v.is_string()) {
        out += v.dump();
    } else if (v.is_boolean()) {
        out += v.get<bool>() ? "true" : "false";
    } else if (v.is_null()) {
        out += "null";
    } else if (v.is_number_integer()) {
        out += std::to_string(v.get<long long>());
    } else if (v.is_number_unsigned()) {
        out += std::to_string(v.get<unsigned long long>());
    } else {
        out += format_double(v.get<double>());
    }
}

void reject_unknown_keys(const ordered_json& j, std::initializer_list<const char*> allowed,
                         const std::string& ctx) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known)
            throw ValidationError("unknown key \"" + it.key() + "\" in " + ctx);
    }
}

const ordered_json& require_key(const ordered_json& j, const char* key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError("missing key \"" + std::string(key) + "\" in " + ctx);
    return *it;
}

void expect_object(const ordered_json& j, const std::string& ctx) {
    if (!j.is_object()) throw ValidationError(ctx + " must be a JSON object");
}

double as_double(const ordered_json& j, const std::string& ctx) {
    if (!j.is_number()) throw ValidationError(ctx + " must be a number");
    return j.get<double>();
}

int as_int(const ordered_json& j, const std::string& ctx) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw ValidationError(ctx + " must be an integer");
    return j.get<int>();
}

std::uint64_t as_u64(const ordered_json& j, const std::string& ctx) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw ValidationError(ctx + " must be an integer");
    return j.get<std::uint64_t>();
}

Vector as_vector(const ordered_json& j, const std::string& ctx) {
    if (!j.is_array()) throw ValidationError(ctx + " must be an array");
    Vector v(j.size());
    Eigen::Index i = 0;
    for (const auto& item : j) v(i++) = as_double(item, ctx + " entry");
    return v;
}

ordered_json vector_to_json(const Vector& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

ordered_json parse_text(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("failed to parse " + what + ": " + e.what());
    }
}

ordered_json nonlinearity_to_json(const Nonlinearity& phi) {
    ordered_json j;
    j["kind"] = phi.kind_name();
    ordered_json params;
    if (phi.kind == NonlinearityKind::linear) {
        params["k"] = phi.k;
    } else {
        params["c"] = phi.c;
        params["d"] = phi.d;
    }
    j["params"] = params;
    return j;
}

Nonlinearity nonlinearity_from_json(const ordered_json& j) {
    expect_object(j, "nonlinearity");
    reject_unknown_keys(j, {"kind", "params"}, "nonlinearity");
    const auto& kind_j = require_key(j, "kind", "nonlinearity");
    if (!kind_j.is_string()) throw ValidationError("nonlinearity kind must be a string");
    const std::string kind = kind_j.get<std::string>();
    const auto& params = require_key(j, "params", "nonlinearity");
    expect_object(params, "nonlinearity params");
    if (kind == "saturating_abs" || kind == "scaled_tanh") {
        reject_unknown_keys(params, {"c", "d"}, "nonlinearity params");
        const double c = as_double(require_key(params, "c", "nonlinearity params"), "c");
        const double d = as_double(require_key(params, "d", "nonlinearity params"), "d");
        return kind == "saturating_abs" ? Nonlinearity::saturating_abs(c, d)
                                        : Nonlinearity::scaled_tanh(c, d);
    }
    if (kind == "linear") {
        reject_unknown_keys(params, {"k"}, "nonlinearity params");
        return Nonlinearity::linear(as_double(require_key(params, "k", "nonlinearity params"), "k"));
    }
    throw ValidationError("unknown nonlinearity kind \"" + kind + "\"");
}

}  // namespace

std::string dump_json(const ordered_json& value) {
    std::string out;
    write_value(out, value, 0);
    out += "\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
    if (!out) throw ValidationError("write failed: " + path);
}

ordered_json network_spec_to_json(const NetworkSpec& spec) {
    ordered_json j;
    j["n_nodes"] = spec.n_nodes;
    ordered_json edges = ordered_json::array();
    for (const auto& e : spec.edges)
        edges.push_back(ordered_json::array({e.i + 1, e.j + 1, e.weight}));
    j["edges"] = edges;
    j["leak"] = vector_to_json(spec.leak);
    j["slopes"] = vector_to_json(spec.slopes);
    ordered_json inputs = ordered_json::array();
    for (const auto& g : spec.inputs)
        inputs.push_back(ordered_json::array({g.node + 1, g.input + 1, g.gain}));
    j["inputs"] = inputs;
    j["n_inputs"] = spec.n_inputs;
    if (spec.nonlinearity) j["nonlinearity"] = nonlinearity_to_json(*spec.nonlinearity);
    return j;
}

NetworkSpec network_spec_from_json(const ordered_json& j) {
    expect_object(j, "network");
    reject_unknown_keys(
        j, {"n_nodes", "edges", "leak", "slopes", "inputs", "n_inputs", "nonlinearity"},
        "network");

    NetworkSpec spec;
    spec.n_nodes = as_int(require_key(j, "n_nodes", "network"), "n_nodes");

    const auto& edges = require_key(j, "edges", "network");
    if (!edges.is_array()) throw ValidationError("network edges must be an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 3)
            throw ValidationError("each edge must be [i, j, weight]");
        Edge edge;
        edge.i = as_int(e[0], "edge node") - 1;
        edge.j = as_int(e[1], "edge node") - 1;
        edge.weight = as_double(e[2], "edge weight");
        spec.edges.push_back(edge);
    }

    spec.leak = as_vector(require_key(j, "leak", "network"), "leak");
    spec.slopes = as_vector(require_key(j, "slopes", "network"), "slopes");

    if (auto it = j.find("inputs"); it != j.end()) {
        if (!it->is_array()) throw ValidationError("network inputs must be an array");
        for (const auto& g : *it) {
            if (!g.is_array() || g.size() != 3)
                throw ValidationError("each input gain must be [node, input, gain]");
            InputGain gain;
            gain.node = as_int(g[0], "input node") - 1;
            gain.input = as_int(g[1], "input index") - 1;
            gain.gain = as_double(g[2], "input gain");
            spec.inputs.push_back(gain);
        }
    }
    if (auto it = j.find("n_inputs"); it != j.end())
        spec.n_inputs = as_int(*it, "n_inputs");
    if (auto it = j.find("nonlinearity"); it != j.end())
        spec.nonlinearity = nonlinearity_from_json(*it);

    spec.validate();
    return spec;
}

NetworkSpec load_network_spec(const std::string& path) {
    return network_spec_from_json(parse_text(read_text_file(path), path));
}

void save_network_spec(const std::string& path, const NetworkSpec& spec) {
    write_text_file(path, dump_json(network_spec_to_json(spec)));
}

ordered_json partition_to_json(const Partition& partition) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (int l : partition.assignment) arr.push_back(l + 1);
    j["assignment"] = arr;
    return j;
}

Partition partition_from_json(const ordered_json& j) {
    expect_object(j, "partition");
    reject_unknown_keys(j, {"assignment"}, "partition");
    const auto& arr = require_key(j, "assignment", "partition");
    if (!arr.is_array()) throw ValidationError("partition assignment must be an array");
    std::vector<int> labels;
    for (const auto& item : arr) labels.push_back(as_int(item, "cluster label"));
    const int n = static_cast<int>(labels.size());
    for (int& l : labels) {
        if (l < 1 || l > n)
            throw ValidationError("cluster labels must lie in [1, " + std::to_string(n) + "]");
        --l;
    }
    return Partition::from_labels(labels);
}

Partition load_partition(const std::string& path) {
    return partition_from_json(parse_text(read_text_file(path), path));
}

void save_partition(const std::string& path, const Partition& partition) {
    write_text_file(path, dump_json(partition_to_json(partition)));
}

ordered_json certificate_to_json(const StabilityCertificate& cert) {
    ordered_json j;
    j["system"] = cert.system;
    j["verdict"] = verdict_name(cert.verdict);
    j["method"] = cert.method;
    j["hurwitz_margin"] = cert.hurwitz_margin;
    j["spr_margin"] = cert.spr_margin;
    j["spr_tolerance"] = cert.spr_tolerance;
    j["frequencies_tested"] = cert.frequencies_tested;
    if (cert.lyapunov_margin)
        j["lyapunov_margin"] = *cert.lyapunov_margin;
    else
        j["lyapunov_margin"] = nullptr;
    ordered_json grid;
    grid["omega_min"] = cert.grid.omega_min;
    grid["omega_max"] = cert.grid.omega_max;
    grid["points"] = cert.grid.points;
    grid["include_zero"] = cert.grid.include_zero;
    j["grid"] = grid;
    return j;
}

ordered_json error_bound_report_to_json(const ErrorBoundReport& report) {
    ordered_json j;
    j["N"] = report.N;
    j["r"] = report.r;
    j["gamma_H"] = report.gamma_H;
    j["kappa_ue"] = report.kappa_ue;
    j["kappa_v"] = report.kappa_v;
    j["mu_max"] = report.mu_max;
    j["condition_holds"] = report.condition_holds;
    if (report.Gamma)
        j["Gamma"] = *report.Gamma;
    else
        j["Gamma"] = nullptr;
    j["rel_tol"] = report.rel_tol;
    j["boundary_tol"] = report.boundary_tol;
    return j;
}

ordered_json empirical_gamma_to_json(const EmpiricalGamma& gamma) {
    ordered_json j;
    j["error_ratio"] = gamma.error_ratio;
    j["output_ratio"] = gamma.output_ratio;
    return j;
}

ordered_json reduced_model_to_json(const ReducedModel& reduced) {
    ordered_json j;
    j["r"] = reduced.r();
    j["n"] = reduced.n();
    j["A_L_hat"] = matrix_to_json(reduced.A_hat);
    j["B_hat"] = matrix_to_json(reduced.B_hat);
    j["Pi_dagger"] = matrix_to_json(reduced.Pi_dagger);
    ordered_json arr = ordered_json::array();
    for (int l : reduced.partition.assignment) arr.push_back(l + 1);
    j["assignment"] = arr;
    const StructureParts parts = structure_decompose(reduced);
    ordered_json structure;
    structure["diag_part"] = vector_to_json(parts.diag_part);
    structure["laplacian_part"] = matrix_to_json(parts.laplacian_part);
    j["structure"] = structure;
    return j;
}

namespace {

InputSignal input_from_json(const ordered_json& j, int p, const std::string& base_dir) {
    expect_object(j, "input");
    const auto& kind_j = require_key(j, "kind", "input");
    if (!kind_j.is_string()) throw ValidationError("input kind must be a string");
    const std::string kind = kind_j.get<std::string>();

    InputSignal sig;
    if (kind == "zero") {
        reject_unknown_keys(j, {"kind"}, "input");
        sig.kind = InputSignal::Kind::zero;
    } else if (kind == "sinusoid") {
        reject_unknown_keys(j, {"kind", "channels"}, "input");
        sig.kind = InputSignal::Kind::sinusoid;
        const auto& channels = require_key(j, "channels", "input");
        if (!channels.is_array()) throw ValidationError("input channels must be an array");
        for (const auto& ch : channels) {
            expect_object(ch, "input channel");
            reject_unknown_keys(ch, {"amplitude", "omega"}, "input channel");
            SinusoidChannel c;
            c.amplitude = as_double(require_key(ch, "amplitude", "input channel"), "amplitude");
            c.omega = as_double(require_key(ch, "omega", "input channel"), "omega");
            sig.channels.push_back(c);
        }
    } else if (kind == "step") {
        reject_unknown_keys(j, {"kind", "levels"}, "input");
        sig.kind = InputSignal::Kind::step;
        const auto& levels = require_key(j, "levels", "input");
        if (!levels.is_array()) throw ValidationError("input levels must be an array");
        for (const auto& l : levels) sig.levels.push_back(as_double(l, "step level"));
    } else if (kind == "samples") {
        reject_unknown_keys(j, {"kind", "file"}, "input");
        const auto& file_j = require_key(j, "file", "input");
        if (!file_j.is_string()) throw ValidationError("input file must be a string");
        std::filesystem::path path(file_j.get<std::string>());
        if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
        sig = load_samples_csv(path.string(), p);
    } else {
        throw ValidationError("unknown input kind \"" + kind + "\"");
    }
    sig.validate(p);
    return sig;
}

InitialState x0_from_json(const ordered_json& j) {
    expect_object(j, "x0");
    const auto& kind_j = require_key(j, "kind", "x0");
    if (!kind_j.is_string()) throw ValidationError("x0 kind must be a string");
    const std::string kind = kind_j.get<std::string>();

    InitialState x0;
    if (kind == "zeros") {
        reject_unknown_keys(j, {"kind"}, "x0");
        x0.kind = InitialState::Kind::zeros;
    } else if (kind == "uniform_random") {
        reject_unknown_keys(j, {"kind", "lo", "hi", "seed"}, "x0");
        x0.kind = InitialState::Kind::uniform_random;
        x0.lo = as_double(require_key(j, "lo", "x0"), "lo");
        x0.hi = as_double(require_key(j, "hi", "x0"), "hi");
        x0.seed = as_u64(require_key(j, "seed", "x0"), "seed");
        if (!(x0.lo < x0.hi)) throw ValidationError("x0: need lo < hi");
    } else if (kind == "vector") {
        reject_unknown_keys(j, {"kind", "value"}, "x0");
        x0.kind = InitialState::Kind::vector;
        x0.value = as_vector(require_key(j, "value", "x0"), "x0 value");
    } else {
        throw ValidationError("unknown x0 kind \"" + kind + "\"");
    }
    return x0;
}

SimConfig sim_config_from_json_impl(const ordered_json& j, int p, const std::string& base_dir) {
    expect_object(j, "simulation config");
    reject_unknown_keys(j, {"dt", "T", "input", "x0"}, "simulation config");

    SimConfig config;
    if (auto it = j.find("dt"); it != j.end()) config.dt = as_double(*it, "dt");
    if (auto it = j.find("T"); it != j.end()) config.T = as_double(*it, "T");
    if (auto it = j.find("input"); it != j.end()) config.input = input_from_json(*it, p, base_dir);
    if (auto it = j.find("x0"); it != j.end()) config.x0 = x0_from_json(*it);
    config.validate();
    config.input.validate(p);
    return config;
}

}  // namespace

SimConfig sim_config_from_json(const ordered_json& j, int p) {
    return sim_config_from_json_impl(j, p, "");
}

SimConfig load_sim_config(const std::string& path, int p) {
    const std::string base_dir = std::filesystem::path(path).parent_path().string();
    return sim_config_from_json_impl(parse_text(read_text_file(path), path), p, base_dir);
}

void save_trajectory_csv(const std::string& path, const Trajectory& traj,
                         const std::string& prefix) {
    std::string out = "t";
    for (Eigen::Index j = 0; j < traj.states.cols(); ++j)
        out += "," + prefix + std::to_string(j + 1);
    out += "\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        out += format_double(traj.times[k]);
        for (Eigen::Index j = 0; j < traj.states.cols(); ++j)
            out += "," + format_double(traj.states(static_cast<Eigen::Index>(k), j));
        out += "\n";
    }
    write_text_file(path, out);
}

InputSignal load_samples_csv(const std::string& path, int p) {
    std::istringstream in(read_text_file(path));
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("samples file is empty: " + path);

    std::vector<std::string> header;
    {
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) header.push_back(tok);
    }
    if (header.size() != static_cast<std::size_t>(p) + 1 || header[0] != "t")
        throw ValidationError("samples header must be t,u1,..,u" + std::to_string(p));

    std::vector<double> times;
    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<double> row;
        while (std::getline(ls, tok, ',')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw ValidationError("bad number in " + path + " line " + std::to_string(lineno));
            }
            if (used != tok.size())
                throw ValidationError("bad number in " + path + " line " + std::to_string(lineno));
            row.push_back(v);
        }
        if (row.size() != static_cast<std::size_t>(p) + 1)
            throw ValidationError("wrong column count in " + path + " line " + std::to_string(lineno));
        times.push_back(row[0]);
        row.erase(row.begin());
        rows.push_back(row);
    }
    if (rows.size() < 2) throw ValidationError("samples file needs at least 2 rows: " + path);

    const double dt = times[1] - times[0];
    if (!(dt > 0.0)) throw ValidationError("samples times must be strictly increasing: " + path);
    const double span = std::max(1.0, std::abs(times.back()));
    for (std::size_t k = 0; k < times.size(); ++k)
        if (std::abs(times[k] - times[0] - static_cast<double>(k) * dt) > 1e-9 * span)
            throw ValidationError("samples times must be uniformly spaced: " + path);

    InputSignal sig;
    sig.kind = InputSignal::Kind::samples;
    sig.sample_dt = dt;
    sig.sample_values.resize(static_cast<Eigen::Index>(rows.size()), p);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (int j = 0; j < p; ++j)
            sig.sample_values(static_cast<Eigen::Index>(k), j) = rows[k][static_cast<std::size_t>(j)];
    sig.validate(p);
    return sig;
}

}  // namespace lure
