#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fleetmaint/criteria.hpp"
#include "fleetmaint/fleet.hpp"
#include "fleetmaint/riskcost.hpp"
#include "fleetmaint/scenario.hpp"

namespace fleetmaint {

/// Asset cost for every (asset, candidate date, scenario). Candidate slots are
/// 0..T-1 for periods 1..T and T for "none". Rows are scenario-major so a
/// fleet-total distribution is a sum of contiguous rows.
class EvaluationMatrix {
public:
    EvaluationMatrix() = default;
    EvaluationMatrix(std::vector<std::string> asset_ids, int horizon, std::vector<double> weights);

    std::size_t n_assets() const { return asset_ids_.size(); }
    int horizon() const { return horizon_; }
    std::size_t n_slots() const { return static_cast<std::size_t>(horizon_) + 1; }
    std::size_t n_scenarios() const { return weights_.size(); }
    std::span<const double> weights() const { return weights_; }
    const std::vector<std::string>& asset_ids() const { return asset_ids_; }

    std::span<const double> row(std::size_t asset, std::size_t slot) const;
    std::span<double> row(std::size_t asset, std::size_t slot);
    double at(std::size_t asset, MaintenanceDate date, std::size_t scenario) const {
        return row(asset, static_cast<std::size_t>(date.slot(horizon_)))[scenario];
    }

    /// Candidate date per asset in fleet order; throws std::invalid_argument
    /// for unknown ids or dates outside the horizon.
    std::vector<std::size_t> slots_for(const Schedule& schedule) const;
    Schedule schedule_from_slots(std::span<const std::size_t> slots) const;

    /// Fleet totals per scenario for the given slot selection, written to `out`.
    void fleet_totals(std::span<const std::size_t> slots, std::span<double> out) const;

private:
    std::vector<std::string> asset_ids_;
    int horizon_ = 0;
    std::vector<double> weights_;
    std::vector<double> cells_;  // [asset][slot][scenario]
};

EvaluationMatrix build_matrix(const FleetSpec& fleet, const ScenarioSet& set,
                              const RiskParams& params, unsigned threads = 0);

CostDistribution schedule_cost_distribution(const EvaluationMatrix& matrix, const Schedule& schedule);

/// (T+1)^N, saturating at UINT64_MAX.
std::uint64_t schedule_space_size(std::size_t n_assets, int horizon);

/// All (T+1)^N slot assignments in lexicographic order: asset 0 most
/// significant, dates ascending with "none" last. Also supports random access
/// so that ranges can be split across threads.
class ScheduleEnumerator {
public:
    ScheduleEnumerator(std::size_t n_assets, int horizon);

    std::uint64_t size() const { return size_; }
    /// Writes the slots of schedule number `index` into `slots`.
    void decode(std::uint64_t index, std::span<std::size_t> slots) const;
    /// Advances `slots` to the next schedule; false after the last one.
    bool next(std::span<std::size_t> slots) const;

private:
    std::size_t n_assets_;
    std::size_t radix_;
    std::uint64_t size_;
};

/// Throws BudgetExceeded if (T+1)^N > budget.
ScheduleEnumerator enumerate_schedules(const FleetSpec& fleet, std::uint64_t budget);

}  // namespace fleetmaint
