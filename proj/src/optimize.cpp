#include "fleetmaint/optimize.hpp"

#include <limits>
#include <stdexcept>

#include "fleetmaint/error.hpp"
#include "fleetmaint/parallel.hpp"

namespace fleetmaint {

EvaluationMatrix::EvaluationMatrix(std::vector<std::string> asset_ids, int horizon, std::vector<double> weights)
    : asset_ids_(std::move(asset_ids)), horizon_(horizon), weights_(std::move(weights)) {
    cells_.assign(asset_ids_.size() * n_slots() * weights_.size(), 0.0);
}

std::span<const double> EvaluationMatrix::row(std::size_t asset, std::size_t slot) const {
    const std::size_t S = n_scenarios();
    return std::span<const double>(cells_).subspan((asset * n_slots() + slot) * S, S);
}

std::span<double> EvaluationMatrix::row(std::size_t asset, std::size_t slot) {
    const std::size_t S = n_scenarios();
    return std::span<double>(cells_).subspan((asset * n_slots() + slot) * S, S);
}

std::vector<std::size_t> EvaluationMatrix::slots_for(const Schedule& schedule) const {
    for (const auto& [id, date] : schedule.dates) {
        bool known = false;
        for (const auto& a : asset_ids_) known = known || a == id;
        if (!known) throw std::invalid_argument("unknown asset '" + id + "'");
        if (!date.is_none() && (date.period() < 1 || date.period() > horizon_)) {
            throw std::invalid_argument("date out of horizon for '" + id + "'");
        }
    }
    std::vector<std::size_t> slots(asset_ids_.size());
    for (std::size_t i = 0; i < asset_ids_.size(); ++i) {
        slots[i] = static_cast<std::size_t>(schedule.date_for(asset_ids_[i]).slot(horizon_));
    }
    return slots;
}

Schedule EvaluationMatrix::schedule_from_slots(std::span<const std::size_t> slots) const {
    Schedule s;
    for (std::size_t i = 0; i < asset_ids_.size(); ++i) {
        s.dates[asset_ids_[i]] = MaintenanceDate::from_slot(static_cast<int>(slots[i]), horizon_);
    }
    return s;
}

void EvaluationMatrix::fleet_totals(std::span<const std::size_t> slots, std::span<double> out) const {
    const std::size_t S = n_scenarios();
    auto first = row(0, slots[0]);
    std::copy(first.begin(), first.end(), out.begin());
    for (std::size_t i = 1; i < asset_ids_.size(); ++i) {
        auto r = row(i, slots[i]);
        for (std::size_t w = 0; w < S; ++w) out[w] += r[w];
    }
}

EvaluationMatrix build_matrix(const FleetSpec& fleet, const ScenarioSet& set, const RiskParams& params,
                              unsigned threads) {
    fleet.validate();
    params.validate();
    if (set.n_assets() != fleet.size() || set.horizon() != fleet.horizon) {
        throw std::invalid_argument("scenario set does not match fleet");
    }
    std::vector<std::string> ids;
    for (const auto& a : fleet.assets) ids.push_back(a.id);
    auto weights = set.weights();
    EvaluationMatrix m(std::move(ids), fleet.horizon, std::vector<double>(weights.begin(), weights.end()));

    const std::size_t rows = fleet.size() * m.n_slots();
    parallel_for(rows, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t r = begin; r < end; ++r) {
            const std::size_t i = r / m.n_slots();
            const auto date = MaintenanceDate::from_slot(static_cast<int>(r % m.n_slots()), fleet.horizon);
            auto out = m.row(i, r % m.n_slots());
            for (std::size_t w = 0; w < set.n_scenarios(); ++w) {
                out[w] = asset_scenario_cost(fleet.assets[i], date, set.latent_rul(i, w), fleet.horizon, params).total;
            }
        }
    });
    return m;
}

CostDistribution schedule_cost_distribution(const EvaluationMatrix& matrix, const Schedule& schedule) {
    const auto slots = matrix.slots_for(schedule);
    CostDistribution d;
    d.values.resize(matrix.n_scenarios());
    matrix.fleet_totals(slots, d.values);
    d.weights.assign(matrix.weights().begin(), matrix.weights().end());
    return d;
}

std::uint64_t schedule_space_size(std::size_t n_assets, int horizon) {
    const std::uint64_t radix = static_cast<std::uint64_t>(horizon) + 1;
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n_assets; ++i) {
        if (size > std::numeric_limits<std::uint64_t>::max() / radix) return std::numeric_limits<std::uint64_t>::max();
        size *= radix;
    }
    return size;
}

ScheduleEnumerator::ScheduleEnumerator(std::size_t n_assets, int horizon)
    : n_assets_(n_assets),
      radix_(static_cast<std::size_t>(horizon) + 1),
      size_(schedule_space_size(n_assets, horizon)) {}

void ScheduleEnumerator::decode(std::uint64_t index, std::span<std::size_t> slots) const {
    for (std::size_t i = n_assets_; i-- > 0;) {
        slots[i] = static_cast<std::size_t>(index % radix_);
        index /= radix_;
    }
}

bool ScheduleEnumerator::next(std::span<std::size_t> slots) const {
    for (std::size_t i = n_assets_; i-- > 0;) {
        if (++slots[i] < radix_) return true;
        slots[i] = 0;
    }
    return false;
}

ScheduleEnumerator enumerate_schedules(const FleetSpec& fleet, std::uint64_t budget) {
    const auto size = schedule_space_size(fleet.size(), fleet.horizon);
    if (size > budget) {
        throw BudgetExceeded("schedule space (T+1)^N = " + std::to_string(size) + " exceeds budget " +
                             std::to_string(budget));
    }
    return ScheduleEnumerator(fleet.size(), fleet.horizon);
}

}  // namespace fleetmaint
