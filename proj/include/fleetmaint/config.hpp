#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fleetmaint/fleet.hpp"
#include "fleetmaint/policies.hpp"
#include "fleetmaint/riskcost.hpp"
#include "json.hpp"

namespace fleetmaint {

struct CostOverride {
    std::optional<double> pm;
    std::optional<double> fail;
    std::optional<double> perf;
    std::optional<double> early;
};

/// Effective study configuration. Every field has a default, so `{}` is the
/// reference profile: 5 assets, 12 periods, 800 scenarios.
struct RunConfig {
    // fleet: either generated from `fleet_gen` or given explicitly
    FleetGenConfig fleet_gen;
    std::vector<AssetSpec> explicit_assets;  // non-empty => explicit fleet
    bool fleet_seed_set = false;             // false => fleet seed follows scenario seed

    std::size_t n_scenarios = 800;
    std::uint64_t seed = 1;

    RiskParams risk;
    CostCoefficients costs;
    std::map<std::string, CostOverride> cost_overrides;
    PolicyParams policies;

    std::string output_dir = "out";
    std::vector<std::string> formats = {"csv"};

    /// Sets the scenario seed and, unless pinned, the fleet seed.
    void set_seed(std::uint64_t s);
    std::uint64_t fleet_seed() const { return fleet_seed_set ? fleet_gen.seed : seed; }
    int horizon() const { return fleet_gen.horizon; }
};

/// Strict parse: unknown keys, wrong types and invalid values raise
/// ConfigError with the dotted key path in the message.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Fully resolved config; parse_config(to_json(c)) reproduces c.
nlohmann::json to_json(const RunConfig& config);

/// Generated or explicit fleet with cost defaults and overrides applied.
FleetSpec build_fleet(const RunConfig& config);

}  // namespace fleetmaint
