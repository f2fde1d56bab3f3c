#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "fleetmaint/fleet.hpp"
#include "fleetmaint/optimize.hpp"
#include "fleetmaint/riskcost.hpp"
#include "fleetmaint/scenario.hpp"

namespace fleetmaint {

enum class PolicyKind { CalendarOnly, UsageOnly, RulThreshold, IntegratedExpected, IntegratedCvar };

inline constexpr std::array<PolicyKind, 5> kAllPolicies = {
    PolicyKind::IntegratedExpected, PolicyKind::IntegratedCvar, PolicyKind::CalendarOnly,
    PolicyKind::UsageOnly, PolicyKind::RulThreshold};

/// Identifier used in output files, e.g. "integrated_cvar".
std::string_view policy_name(PolicyKind kind);
/// Human-readable label for console tables.
std::string_view policy_label(PolicyKind kind);

struct PolicyParams {
    double trigger_prob = 0.60;
    double alpha = 0.9;
    std::uint64_t exhaustive_budget = 1'000'000;

    void validate() const;
};

// Single-trigger baselines. None of them look at cost coefficients, and a rule
// that never fires within the horizon yields "none".

/// First t with a_0 + t >= calendar limit.
Schedule calendar_only(const FleetSpec& fleet);

/// First t where the scenario-mean cumulative usage reaches the usage limit.
Schedule usage_only(const FleetSpec& fleet, const ScenarioSet& set);

/// First t with P(R <= t) >= trigger_prob under the scenario weights.
Schedule rul_threshold(const FleetSpec& fleet, const ScenarioSet& set, double trigger_prob);

/// Per-asset argmin of the scenario-weighted mean cost; exact for the
/// expectation because fleet cost is additive over assets. Ties go to the
/// earliest date, "none" last.
Schedule integrated_expected(const EvaluationMatrix& matrix);
Schedule integrated_expected(const FleetSpec& fleet, const ScenarioSet& set, const RiskParams& params);

struct CvarSearchOptions {
    double alpha = 0.9;
    std::uint64_t exhaustive_budget = 1'000'000;
    bool allow_exhaustive = true;
    unsigned threads = 0;
};

struct CvarSearchResult {
    Schedule schedule;
    double objective = 0.0;       // CVaR_alpha of the returned schedule
    double warm_start_objective = 0.0;
    bool exact = false;           // true when found by full enumeration
    std::uint64_t evaluations = 0;
    int sweeps = 0;               // coordinate-descent sweeps (0 when exact)
};

/// Minimizes CVaR_alpha of the fleet-total cost. Enumerates every schedule
/// when (T+1)^N fits the budget; otherwise runs coordinate descent from the
/// expected-cost schedule, accepting only strict improvements.
CvarSearchResult integrated_cvar(const EvaluationMatrix& matrix, const CvarSearchOptions& options);
Schedule integrated_cvar(const FleetSpec& fleet, const ScenarioSet& set, const RiskParams& params,
                         double alpha);

}  // namespace fleetmaint
