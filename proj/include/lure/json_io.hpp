#pragma once

#include <string>

#include "json.hpp"
#include "lure/error_bound.hpp"
#include "lure/network_spec.hpp"
#include "lure/partition.hpp"
#include "lure/reduced_model.hpp"
#include "lure/simulate.hpp"
#include "lure/stability.hpp"

namespace lure {

using ordered_json = nlohmann::ordered_json;

/// Deterministic serializer: insertion-order keys, 2-space indent, doubles
/// printed with %.17g so round-trips are exact and output is byte-stable
/// across platforms. Non-finite numbers are rejected.
std::string dump_json(const ordered_json& value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Network files use 1-based node indices. Unknown keys are rejected.
ordered_json network_spec_to_json(const NetworkSpec& spec);
NetworkSpec network_spec_from_json(const ordered_json& j);
NetworkSpec load_network_spec(const std::string& path);
void save_network_spec(const std::string& path, const NetworkSpec& spec);

/// Partition files carry {"assignment": [...]} with 1-based cluster labels;
/// labels are canonicalized on load.
ordered_json partition_to_json(const Partition& partition);
Partition partition_from_json(const ordered_json& j);
Partition load_partition(const std::string& path);
void save_partition(const std::string& path, const Partition& partition);

ordered_json certificate_to_json(const StabilityCertificate& cert);
ordered_json error_bound_report_to_json(const ErrorBoundReport& report);
ordered_json empirical_gamma_to_json(const EmpiricalGamma& gamma);
ordered_json reduced_model_to_json(const ReducedModel& reduced);

SimConfig sim_config_from_json(const ordered_json& j, int p);
SimConfig load_sim_config(const std::string& path, int p);

/// CSV trajectory: header "t,<prefix>1,..,<prefix>N", values in %.17g.
void save_trajectory_csv(const std::string& path, const Trajectory& traj,
                         const std::string& prefix);

/// CSV input samples: header "t,u1,..,up", uniform time grid, >= 2 rows.
/// Returns the sample matrix and spacing via the InputSignal fields.
InputSignal load_samples_csv(const std::string& path, int p);

}  // namespace lure
