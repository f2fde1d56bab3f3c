#include "fleetmaint/policies.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "fleetmaint/criteria.hpp"
#include "fleetmaint/error.hpp"
#include "fleetmaint/parallel.hpp"

namespace fleetmaint {

std::string_view policy_name(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::CalendarOnly: return "calendar_only";
        case PolicyKind::UsageOnly: return "usage_only";
        case PolicyKind::RulThreshold: return "rul_threshold";
        case PolicyKind::IntegratedExpected: return "integrated_expected";
        case PolicyKind::IntegratedCvar: return "integrated_cvar";
    }
    return "unknown";
}

std::string_view policy_label(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::CalendarOnly: return "Calendar only";
        case PolicyKind::UsageOnly: return "Usage only";
        case PolicyKind::RulThreshold: return "RUL threshold";
        case PolicyKind::IntegratedExpected: return "Integrated expected cost";
        case PolicyKind::IntegratedCvar: return "Integrated CVaR";
    }
    return "unknown";
}

void PolicyParams::validate() const {
    if (!(trigger_prob > 0.0 && trigger_prob < 1.0)) throw ConfigError("policies.trigger_prob must be in (0,1)");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("policies.alpha must be in (0,1)");
    if (exhaustive_budget == 0) throw ConfigError("policies.exhaustive_budget must be >= 1");
}

Schedule calendar_only(const FleetSpec& fleet) {
    Schedule s;
    for (const auto& a : fleet.assets) {
        auto date = MaintenanceDate::none();
        for (int t = 1; t <= fleet.horizon; ++t) {
            if (a.initial_age + t >= a.calendar_limit) {
                date = MaintenanceDate::at(t);
                break;
            }
        }
        s.dates[a.id] = date;
    }
    return s;
}

Schedule usage_only(const FleetSpec& fleet, const ScenarioSet& set) {
    if (set.n_assets() != fleet.size()) throw std::invalid_argument("scenario set does not match fleet");
    auto weights = set.weights();
    Schedule s;
    for (std::size_t i = 0; i < fleet.size(); ++i) {
        const auto& a = fleet.assets[i];
        // expected increment per period under the scenario weights
        std::vector<double> mean_inc(static_cast<std::size_t>(fleet.horizon), 0.0);
        for (std::size_t w = 0; w < set.n_scenarios(); ++w) {
            auto inc = set.usage_increments(i, w);
            for (std::size_t t = 0; t < mean_inc.size(); ++t) mean_inc[t] += weights[w] * inc[t];
        }
        auto date = MaintenanceDate::none();
        if (a.initial_usage >= a.usage_limit) {
            date = MaintenanceDate::at(1);
        } else {
            double u = a.initial_usage;
            for (int t = 1; t <= fleet.horizon; ++t) {
                u += mean_inc[static_cast<std::size_t>(t - 1)];
                if (u >= a.usage_limit) {
                    date = MaintenanceDate::at(t);
                    break;
                }
            }
        }
        s.dates[a.id] = date;
    }
    return s;
}

Schedule rul_threshold(const FleetSpec& fleet, const ScenarioSet& set, double trigger_prob) {
    if (!(trigger_prob > 0.0 && trigger_prob < 1.0)) throw std::invalid_argument("trigger_prob must be in (0,1)");
    if (set.n_assets() != fleet.size()) throw std::invalid_argument("scenario set does not match fleet");
    auto weights = set.weights();
    Schedule s;
    for (std::size_t i = 0; i < fleet.size(); ++i) {
        auto date = MaintenanceDate::none();
        for (int t = 1; t <= fleet.horizon; ++t) {
            double p = 0.0;
            for (std::size_t w = 0; w < set.n_scenarios(); ++w) {
                if (set.latent_rul(i, w) <= t) p += weights[w];
            }
            if (p >= trigger_prob - kCumulativeWeightTolerance) {
                date = MaintenanceDate::at(t);
                break;
            }
        }
        s.dates[fleet.assets[i].id] = date;
    }
    return s;
}

namespace {

std::vector<std::size_t> expected_argmin_slots(const EvaluationMatrix& matrix) {
    auto weights = matrix.weights();
    std::vector<std::size_t> slots(matrix.n_assets(), 0);
    for (std::size_t i = 0; i < matrix.n_assets(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t slot = 0; slot < matrix.n_slots(); ++slot) {
            auto row = matrix.row(i, slot);
            double mean = 0.0;
            for (std::size_t w = 0; w < row.size(); ++w) mean += weights[w] * row[w];
            if (mean < best) {
                best = mean;
                slots[i] = slot;
            }
        }
    }
    return slots;
}

struct Candidate {
    double objective = std::numeric_limits<double>::infinity();
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
};

}  // namespace

Schedule integrated_expected(const EvaluationMatrix& matrix) {
    return matrix.schedule_from_slots(expected_argmin_slots(matrix));
}

Schedule integrated_expected(const FleetSpec& fleet, const ScenarioSet& set, const RiskParams& params) {
    return integrated_expected(build_matrix(fleet, set, params));
}

CvarSearchResult integrated_cvar(const EvaluationMatrix& matrix, const CvarSearchOptions& options) {
    if (!(options.alpha > 0.0 && options.alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
    const std::size_t N = matrix.n_assets();
    const std::size_t S = matrix.n_scenarios();
    auto weights = matrix.weights();

    CvarSearchResult result;
    std::vector<std::size_t> current = expected_argmin_slots(matrix);
    std::vector<double> totals(S);
    std::vector<double> scratch;
    auto objective = [&](std::span<const std::size_t> slots) {
        matrix.fleet_totals(slots, totals);
        return cvar_alpha(totals, weights, options.alpha, scratch);
    };
    result.warm_start_objective = objective(current);

    ScheduleEnumerator space(N, matrix.horizon());
    if (options.allow_exhaustive && space.size() <= options.exhaustive_budget) {
        const unsigned workers = resolve_threads(options.threads);
        std::vector<Candidate> best(workers);
        parallel_for(space.size(), workers, [&](std::size_t begin, std::size_t end, std::size_t worker) {
            if (begin >= end) return;
            std::vector<std::size_t> slots(N);
            std::vector<double> local_totals(S);
            std::vector<double> local_scratch;
            space.decode(begin, slots);
            Candidate local;
            for (std::size_t k = begin; k < end; ++k) {
                matrix.fleet_totals(slots, local_totals);
                const double v = cvar_alpha(local_totals, weights, options.alpha, local_scratch);
                if (v < local.objective) local = {v, k};
                space.next(slots);
            }
            best[worker] = local;
        });
        // workers own ascending index ranges, so strict < keeps the earliest schedule
        Candidate winner;
        for (const auto& c : best) {
            if (c.objective < winner.objective) winner = c;
        }
        space.decode(winner.index, current);
        result.objective = winner.objective;
        result.exact = true;
        result.evaluations = space.size();
    } else {
        double incumbent = result.warm_start_objective;
        result.evaluations = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            ++result.sweeps;
            for (std::size_t i = 0; i < N; ++i) {
                const std::size_t keep = current[i];
                std::size_t best_slot = keep;
                double best_value = incumbent;
                for (std::size_t slot = 0; slot < matrix.n_slots(); ++slot) {
                    if (slot == keep) continue;
                    current[i] = slot;
                    const double v = objective(current);
                    ++result.evaluations;
                    if (v < best_value) {
                        best_value = v;
                        best_slot = slot;
                    }
                }
                current[i] = best_slot;
                if (best_slot != keep) {
                    incumbent = best_value;
                    changed = true;
                }
            }
        }
        result.objective = incumbent;
    }
    result.schedule = matrix.schedule_from_slots(current);
    return result;
}

Schedule integrated_cvar(const FleetSpec& fleet, const ScenarioSet& set, const RiskParams& params, double alpha) {
    CvarSearchOptions options;
    options.alpha = alpha;
    return integrated_cvar(build_matrix(fleet, set, params), options).schedule;
}

}  // namespace fleetmaint
