#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fleetmaint {

/// Maintenance period in {1..T}, or "none" when the asset is left alone for the
/// whole horizon.
class MaintenanceDate {
public:
    constexpr MaintenanceDate() = default;

    static constexpr MaintenanceDate none() { return MaintenanceDate{}; }
    static constexpr MaintenanceDate at(int period) { return MaintenanceDate{period}; }

    constexpr bool is_none() const { return !period_.has_value(); }
    constexpr int period() const { return *period_; }

    /// Row index used by dense tables: period τ maps to τ-1, "none" to T.
    int slot(int horizon) const { return is_none() ? horizon : *period_ - 1; }
    static MaintenanceDate from_slot(int slot, int horizon) {
        return slot >= horizon ? none() : at(slot + 1);
    }

    std::string to_string() const { return is_none() ? "none" : std::to_string(*period_); }
    /// Parses "none" or a decimal period; throws std::invalid_argument otherwise.
    static MaintenanceDate parse(const std::string& text);

    friend constexpr bool operator==(const MaintenanceDate&, const MaintenanceDate&) = default;

private:
    constexpr explicit MaintenanceDate(int period) : period_(period) {}
    std::optional<int> period_;
};

struct CostCoefficients {
    double pm = 20.0;
    double fail = 100.0;
    double perf = 5.0;
    double early = 12.0;
};

struct AssetSpec {
    std::string id;
    double calendar_limit = 0.0;          // periods
    double usage_limit = 0.0;             // cycles
    double rul_mean = 0.0;                // periods
    double rul_std = 0.0;                 // periods
    double usage_mean_per_period = 0.0;   // cycles/period
    double usage_cv = 0.0;
    double initial_age = 0.0;
    double initial_usage = 0.0;
    CostCoefficients costs;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

struct FleetSpec {
    std::vector<AssetSpec> assets;
    int horizon = 0;

    std::size_t size() const { return assets.size(); }
    /// Position of `id` in `assets`, or nullopt.
    std::optional<std::size_t> index_of(const std::string& id) const;
    void validate() const;
};

/// One optional maintenance date per asset id. Assets absent from the map are
/// treated as "none"; the map structure makes a second action impossible.
struct Schedule {
    std::map<std::string, MaintenanceDate> dates;

    MaintenanceDate date_for(const std::string& id) const;
    /// Dates in fleet order.
    std::vector<MaintenanceDate> aligned(const FleetSpec& fleet) const;
    static Schedule from_aligned(const FleetSpec& fleet, const std::vector<MaintenanceDate>& dates);

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct AssetState {
    double age = 0.0;
    double usage = 0.0;

    friend bool operator==(const AssetState&, const AssetState&) = default;
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

struct FleetGenConfig {
    int n_assets = 5;
    int horizon = 12;
    Range calendar_limit_range{8.0, 16.0};
    Range usage_limit_range{160.0, 320.0};
    Range rul_mean_range{4.0, 13.0};
    Range rul_std_range{0.8, 2.4};
    Range usage_mean_range{10.0, 22.0};
    Range usage_cv_range{0.15, 0.35};
    Range initial_fraction_range{0.3, 0.8};
    CostCoefficients costs;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Validation failure for a schedule; `asset_id` names the offending entry.
struct ScheduleViolation {
    enum class Kind { DateOutOfHorizon, UnknownAsset };
    Kind kind;
    std::string asset_id;
    std::string message;
};

/// Age advances by one period, usage by the increment; maintenance resets both.
AssetState advance_state(const AssetState& state, bool maintain, double usage_increment);

std::vector<ScheduleViolation> validate_schedule(const Schedule& schedule, const FleetSpec& fleet);

/// Draws every asset parameter uniformly from its configured range. Calendar
/// limits are integer-valued and drawn uniformly from the integers in range.
FleetSpec generate_fleet(const FleetGenConfig& config);

}  // namespace fleetmaint
