#pragma once

#include <vector>

#include "fleetmaint/fleet.hpp"
#include "fleetmaint/scenario.hpp"

namespace fleetmaint {

struct RiskParams {
    double p_max = 0.95;
    double decay_rate = 0.75;  // 1/periods
    double perf_window = 4.0;  // periods

    void validate() const;
};

struct CostBreakdown {
    double pm = 0.0;
    double fail = 0.0;
    double perf = 0.0;
    double early = 0.0;
    double total = 0.0;
};

struct CostSample {
    std::size_t scenario = 0;
    std::vector<CostBreakdown> assets;  // fleet order
    double total = 0.0;
};

/// Remaining margin at period t before any maintenance: R - t.
constexpr double effective_rul(double latent_rul, int period) { return latent_rul - period; }

/// p_max for non-positive margins, p_max * exp(-decay * m) otherwise.
double failure_probability(double margin, const RiskParams& params);

/// Linear ramp: 0 at margin >= W, rising to C^perf at margin 0 and held there.
double performance_penalty(double margin, double perf_coefficient, const RiskParams& params);

/// Unused scenario life at maintenance, normalized by the nominal mean RUL.
double early_penalty(double latent_rul, int maintenance_period, double rul_mean,
                     double early_coefficient);

/// Per-period hazard cost C^fail * P^fail + perf penalty at margin R - t.
double hazard_cost(const AssetSpec& asset, double latent_rul, int period, const RiskParams& params);

// Costs accrue only over the periods before maintenance. Maintenance at τ
// happens at the start of the period, so the window is 1..τ-1; "none"
// accrues over 1..T with no pm or early cost.
CostBreakdown asset_scenario_cost(const AssetSpec& asset, MaintenanceDate date, double latent_rul,
                                  int horizon, const RiskParams& params);

CostSample total_cost(const Schedule& schedule, const FleetSpec& fleet, const ScenarioSet& set,
                      std::size_t scenario, const RiskParams& params);

/// Scenario-weighted failure-probability mass accrued before maintenance,
/// summed over the fleet.
double failure_proxy(const Schedule& schedule, const FleetSpec& fleet, const ScenarioSet& set,
                     const RiskParams& params);

}  // namespace fleetmaint
