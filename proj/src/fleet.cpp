#include "fleetmaint/fleet.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "fleetmaint/error.hpp"
#include "fleetmaint/random.hpp"

namespace fleetmaint {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

void check_range(const Range& r, const char* name) {
    require(std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo >= 0.0 && r.lo <= r.hi,
            std::string(name) + ": expected 0 <= lo <= hi");
}

}  // namespace

MaintenanceDate MaintenanceDate::parse(const std::string& text) {
    if (text == "none") return none();
    std::size_t used = 0;
    int period = 0;
    try {
        period = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid maintenance date '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("invalid maintenance date '" + text + "'");
    return at(period);
}

void AssetSpec::validate() const {
    const std::string prefix = "asset " + id + ": ";
    require(!id.empty(), "asset id must be non-empty");
    require(calendar_limit > 0.0, prefix + "calendar_limit must be > 0");
    require(usage_limit > 0.0, prefix + "usage_limit must be > 0");
    require(rul_mean > 0.0, prefix + "rul_mean must be > 0");
    require(rul_std > 0.0, prefix + "rul_std must be > 0");
    require(usage_mean_per_period > 0.0, prefix + "usage_mean_per_period must be > 0");
    require(usage_cv >= 0.0 && usage_cv < 1.0, prefix + "usage_cv must be in [0,1)");
    require(initial_age >= 0.0, prefix + "initial_age must be >= 0");
    require(initial_usage >= 0.0, prefix + "initial_usage must be >= 0");
    require(costs.pm >= 0.0 && costs.fail >= 0.0 && costs.perf >= 0.0 && costs.early >= 0.0,
            prefix + "cost coefficients must be >= 0");
}

std::optional<std::size_t> FleetSpec::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < assets.size(); ++i) {
        if (assets[i].id == id) return i;
    }
    return std::nullopt;
}

void FleetSpec::validate() const {
    require(!assets.empty(), "fleet must contain at least one asset");
    require(horizon >= 1, "horizon must be >= 1");
    std::set<std::string> seen;
    for (const auto& a : assets) {
        a.validate();
        require(seen.insert(a.id).second, "duplicate asset id " + a.id);
    }
}

MaintenanceDate Schedule::date_for(const std::string& id) const {
    auto it = dates.find(id);
    return it == dates.end() ? MaintenanceDate::none() : it->second;
}

std::vector<MaintenanceDate> Schedule::aligned(const FleetSpec& fleet) const {
    std::vector<MaintenanceDate> out;
    out.reserve(fleet.size());
    for (const auto& a : fleet.assets) out.push_back(date_for(a.id));
    return out;
}

Schedule Schedule::from_aligned(const FleetSpec& fleet, const std::vector<MaintenanceDate>& dates) {
    if (dates.size() != fleet.size()) throw std::invalid_argument("schedule length does not match fleet");
    Schedule s;
    for (std::size_t i = 0; i < dates.size(); ++i) s.dates[fleet.assets[i].id] = dates[i];
    return s;
}

AssetState advance_state(const AssetState& state, bool maintain, double usage_increment) {
    if (!(usage_increment >= 0.0)) throw std::invalid_argument("usage_increment must be >= 0");
    if (maintain) return AssetState{0.0, 0.0};
    return AssetState{state.age + 1.0, state.usage + usage_increment};
}

std::vector<ScheduleViolation> validate_schedule(const Schedule& schedule, const FleetSpec& fleet) {
    std::vector<ScheduleViolation> out;
    for (const auto& [id, date] : schedule.dates) {
        if (!fleet.index_of(id)) {
            out.push_back({ScheduleViolation::Kind::UnknownAsset, id, "unknown asset '" + id + "'"});
            continue;
        }
        if (!date.is_none() && (date.period() < 1 || date.period() > fleet.horizon)) {
            out.push_back({ScheduleViolation::Kind::DateOutOfHorizon, id,
                           "date out of horizon for '" + id + "': " + date.to_string() +
                               " not in 1.." + std::to_string(fleet.horizon)});
        }
    }
    return out;
}

void FleetGenConfig::validate() const {
    require(n_assets >= 1, "n_assets must be >= 1");
    require(horizon >= 1, "horizon must be >= 1");
    check_range(calendar_limit_range, "calendar_limit_range");
    check_range(usage_limit_range, "usage_limit_range");
    check_range(rul_mean_range, "rul_mean_range");
    check_range(rul_std_range, "rul_std_range");
    check_range(usage_mean_range, "usage_mean_range");
    check_range(usage_cv_range, "usage_cv_range");
    check_range(initial_fraction_range, "initial_fraction_range");
    require(std::ceil(calendar_limit_range.lo) <= std::floor(calendar_limit_range.hi) &&
                std::floor(calendar_limit_range.hi) >= 1.0,
            "calendar_limit_range: must contain a positive integer");
    require(usage_limit_range.lo > 0.0, "usage_limit_range: lo must be > 0");
    require(rul_mean_range.lo > 0.0, "rul_mean_range: lo must be > 0");
    require(rul_std_range.lo > 0.0, "rul_std_range: lo must be > 0");
    require(usage_mean_range.lo > 0.0, "usage_mean_range: lo must be > 0");
    require(usage_cv_range.hi < 1.0, "usage_cv_range: hi must be < 1");
    require(costs.pm >= 0.0 && costs.fail >= 0.0 && costs.perf >= 0.0 && costs.early >= 0.0,
            "costs: coefficients must be >= 0");
}

FleetSpec generate_fleet(const FleetGenConfig& config) {
    config.validate();
    auto rng = make_stream(config.seed, kFleetDomain, 0, 0);
    auto uniform = [&rng](const Range& r) {
        return std::uniform_real_distribution<double>(r.lo, r.hi)(rng);
    };

    const auto cal_lo = static_cast<long long>(std::max(1.0, std::ceil(config.calendar_limit_range.lo)));
    const auto cal_hi = static_cast<long long>(std::floor(config.calendar_limit_range.hi));

    FleetSpec fleet;
    fleet.horizon = config.horizon;
    fleet.assets.reserve(static_cast<std::size_t>(config.n_assets));
    for (int i = 0; i < config.n_assets; ++i) {
        AssetSpec a;
        a.id = "A" + std::to_string(i + 1);
        a.calendar_limit = static_cast<double>(std::uniform_int_distribution<long long>(cal_lo, cal_hi)(rng));
        a.usage_limit = uniform(config.usage_limit_range);
        a.rul_mean = uniform(config.rul_mean_range);
        a.rul_std = uniform(config.rul_std_range);
        a.usage_mean_per_period = uniform(config.usage_mean_range);
        a.usage_cv = uniform(config.usage_cv_range);
        a.initial_age = uniform(config.initial_fraction_range) * a.calendar_limit;
        a.initial_usage = uniform(config.initial_fraction_range) * a.usage_limit;
        a.costs = config.costs;
        fleet.assets.push_back(std::move(a));
    }
    return fleet;
}

}  // namespace fleetmaint
