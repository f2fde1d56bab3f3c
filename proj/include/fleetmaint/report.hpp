#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fleetmaint/criteria.hpp"
#include "fleetmaint/fleet.hpp"
#include "fleetmaint/optimize.hpp"
#include "fleetmaint/riskcost.hpp"
#include "fleetmaint/scenario.hpp"
#include "json.hpp"

namespace fleetmaint {

struct PolicySummary {
    std::string policy;
    double expected_cost = 0.0;
    double cvar = 0.0;
    double alpha = 0.0;
    double mean_maintenance_time = 0.0;  // "none" counted as T+1
    double mean_failure_proxy = 0.0;
    bool counts_none = false;            // some asset had "none"
};

struct EcdfStep {
    double cost = 0.0;
    double cum_prob = 0.0;
};

struct EcdfCurve {
    std::vector<EcdfStep> steps;
};

PolicySummary summarize_policy(const std::string& name, const Schedule& schedule,
                               const EvaluationMatrix& matrix, double alpha, const FleetSpec& fleet,
                               const ScenarioSet& set, const RiskParams& params);

/// Merges equal costs, sorts ascending, accumulates weights. The last step is
/// pinned to exactly 1.
EcdfCurve ecdf(const CostDistribution& dist);

struct PolicyOutput {
    std::string name;
    Schedule schedule;
    PolicySummary summary;
    EcdfCurve curve;
};

/// Formats with 6 significant digits, as used in every CSV output.
std::string format_number(double value);

/// Writes summary.csv, ecdf_<policy>.csv, schedules.csv and run_meta.json into
/// `out_dir` (created if missing). Returns the written paths. On failure the
/// files written so far are removed and std::runtime_error names the path.
std::vector<std::filesystem::path> emit_outputs(const std::vector<PolicyOutput>& outputs,
                                                const FleetSpec& fleet,
                                                const nlohmann::json& run_meta,
                                                const std::filesystem::path& out_dir);

/// Plain-text table in Table-I column order.
std::string format_summary_table(const std::vector<PolicySummary>& summaries);

}  // namespace fleetmaint
