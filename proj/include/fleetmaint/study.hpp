#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fleetmaint/config.hpp"
#include "fleetmaint/optimize.hpp"
#include "fleetmaint/policies.hpp"
#include "fleetmaint/report.hpp"
#include "fleetmaint/scenario.hpp"

namespace fleetmaint {

inline constexpr const char* kVersion = "0.1.0";

struct StudyResult {
    FleetSpec fleet;
    ScenarioSet scenarios;
    EvaluationMatrix matrix;
    std::vector<PolicyOutput> policies;  // kAllPolicies order
    CvarSearchResult cvar_search;

    const PolicyOutput& policy(PolicyKind kind) const;
};

/// fleet -> scenarios -> matrix -> five policies -> summaries and ECDFs.
StudyResult run_study(const RunConfig& config, unsigned threads = 0);

/// run_meta.json content: seed, effective config, version, timestamp, and
/// the labelling of cost coefficients as calibration values.
nlohmann::json make_run_meta(const RunConfig& config, const StudyResult& result);

/// emit_outputs for a completed study.
std::vector<std::filesystem::path> write_study(const RunConfig& config, const StudyResult& result,
                                               const std::filesystem::path& out_dir);

/// Writes fleet.csv (one row per asset, all parameters).
std::filesystem::path write_fleet_csv(const FleetSpec& fleet, const std::filesystem::path& out_dir);

/// Reads a schedule CSV with columns asset_id,date ("none" allowed). A leading
/// policy column, as in schedules.csv, is accepted when all rows share it.
Schedule read_schedule_csv(const std::filesystem::path& path);
void write_schedule_csv(const Schedule& schedule, const FleetSpec& fleet,
                        const std::filesystem::path& path);

}  // namespace fleetmaint
