#include "fleetmaint/riskcost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fleetmaint/error.hpp"

namespace fleetmaint {

void RiskParams::validate() const {
    if (!(p_max > 0.0 && p_max <= 0.95)) throw ConfigError("risk.p_max must be in (0, 0.95]");
    if (!(decay_rate > 0.0)) throw ConfigError("risk.decay_rate must be > 0");
    if (!(perf_window > 0.0)) throw ConfigError("risk.perf_window must be > 0");
}

double failure_probability(double margin, const RiskParams& params) {
    if (margin <= 0.0) return params.p_max;
    return std::min(params.p_max, params.p_max * std::exp(-params.decay_rate * margin));
}

double performance_penalty(double margin, double perf_coefficient, const RiskParams& params) {
    const double ramp = std::clamp((params.perf_window - margin) / params.perf_window, 0.0, 1.0);
    return perf_coefficient * ramp;
}

double early_penalty(double latent_rul, int maintenance_period, double rul_mean, double early_coefficient) {
    return early_coefficient * std::max(0.0, latent_rul - maintenance_period) / rul_mean;
}

double hazard_cost(const AssetSpec& asset, double latent_rul, int period, const RiskParams& params) {
    const double m = effective_rul(latent_rul, period);
    return asset.costs.fail * failure_probability(m, params) + performance_penalty(m, asset.costs.perf, params);
}

CostBreakdown asset_scenario_cost(const AssetSpec& asset, MaintenanceDate date, double latent_rul,
                                  int horizon, const RiskParams& params) {
    if (!date.is_none() && (date.period() < 1 || date.period() > horizon)) {
        throw std::invalid_argument("maintenance date " + date.to_string() + " outside 1.." +
                                    std::to_string(horizon));
    }
    CostBreakdown c;
    const int last_accrual = date.is_none() ? horizon : date.period() - 1;
    for (int t = 1; t <= last_accrual; ++t) {
        const double m = effective_rul(latent_rul, t);
        c.fail += asset.costs.fail * failure_probability(m, params);
        c.perf += performance_penalty(m, asset.costs.perf, params);
    }
    if (!date.is_none()) {
        c.pm = asset.costs.pm;
        c.early = early_penalty(latent_rul, date.period(), asset.rul_mean, asset.costs.early);
    }
    c.total = c.pm + c.fail + c.perf + c.early;
    return c;
}

namespace {

void require_valid(const Schedule& schedule, const FleetSpec& fleet) {
    auto violations = validate_schedule(schedule, fleet);
    if (!violations.empty()) throw std::invalid_argument("invalid schedule: " + violations.front().message);
}

}  // namespace

CostSample total_cost(const Schedule& schedule, const FleetSpec& fleet, const ScenarioSet& set,
                      std::size_t scenario, const RiskParams& params) {
    require_valid(schedule, fleet);
    if (scenario >= set.n_scenarios()) throw std::out_of_range("scenario index out of range");
    CostSample sample;
    sample.scenario = scenario;
    sample.assets.reserve(fleet.size());
    for (std::size_t i = 0; i < fleet.size(); ++i) {
        const auto& a = fleet.assets[i];
        sample.assets.push_back(
            asset_scenario_cost(a, schedule.date_for(a.id), set.latent_rul(i, scenario), fleet.horizon, params));
        sample.total += sample.assets.back().total;
    }
    return sample;
}

double failure_proxy(const Schedule& schedule, const FleetSpec& fleet, const ScenarioSet& set,
                     const RiskParams& params) {
    require_valid(schedule, fleet);
    auto weights = set.weights();
    double proxy = 0.0;
    for (std::size_t w = 0; w < set.n_scenarios(); ++w) {
        double mass = 0.0;
        for (std::size_t i = 0; i < fleet.size(); ++i) {
            const auto date = schedule.date_for(fleet.assets[i].id);
            const int last = date.is_none() ? fleet.horizon : date.period() - 1;
            for (int t = 1; t <= last; ++t) {
                mass += failure_probability(effective_rul(set.latent_rul(i, w), t), params);
            }
        }
        proxy += weights[w] * mass;
    }
    return proxy;
}

}  // namespace fleetmaint
