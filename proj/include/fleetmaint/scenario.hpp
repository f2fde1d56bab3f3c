#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "fleetmaint/fleet.hpp"

namespace fleetmaint {

/// S sampled futures for a fleet: usage increments per (asset, scenario,
/// period) and one latent RUL per (asset, scenario), with scenario weights.
class ScenarioSet {
public:
    ScenarioSet() = default;
    ScenarioSet(std::size_t n_assets, std::size_t n_scenarios, int horizon, std::uint64_t seed);

    std::size_t n_assets() const { return n_assets_; }
    std::size_t n_scenarios() const { return n_scenarios_; }
    int horizon() const { return horizon_; }
    std::uint64_t seed() const { return seed_; }

    std::span<const double> weights() const { return weights_; }
    std::span<double> weights() { return weights_; }

    /// Increments for periods 1..T, stored at offsets 0..T-1.
    std::span<const double> usage_increments(std::size_t asset, std::size_t scenario) const;
    std::span<double> usage_increments(std::size_t asset, std::size_t scenario);

    double latent_rul(std::size_t asset, std::size_t scenario) const {
        return latent_rul_[asset * n_scenarios_ + scenario];
    }
    double& latent_rul(std::size_t asset, std::size_t scenario) {
        return latent_rul_[asset * n_scenarios_ + scenario];
    }

    /// Throws std::invalid_argument if weights, increments or RULs break the
    /// set's invariants.
    void validate() const;

    friend bool operator==(const ScenarioSet&, const ScenarioSet&) = default;

private:
    std::size_t n_assets_ = 0;
    std::size_t n_scenarios_ = 0;
    int horizon_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<double> weights_;
    std::vector<double> increments_;  // [asset][scenario][period]
    std::vector<double> latent_rul_;  // [asset][scenario]
};

/// Uniform weights; cell (i, w) draws T gamma increments then one truncated
/// normal RUL from its own substream, so output is independent of fill order.
/// threads == 0 uses hardware concurrency.
ScenarioSet generate_scenarios(const FleetSpec& fleet, std::size_t n_scenarios, std::uint64_t seed,
                               unsigned threads = 0);

/// u_{i,0} plus the increments of periods 1..t.
double cumulative_usage(const ScenarioSet& set, const FleetSpec& fleet, std::size_t asset,
                        std::size_t scenario, int period);

/// Writes `usage_increments.csv` (asset_id,scenario,period,usage_increment) and
/// `latent_rul.csv` (asset_id,scenario,latent_rul) into `dir`. Values are
/// written with 17 significant digits so import is exact.
void export_scenarios_csv(const ScenarioSet& set, const FleetSpec& fleet,
                          const std::filesystem::path& dir);

/// Reads the two CSVs written by export_scenarios_csv. Weights are uniform.
ScenarioSet import_scenarios_csv(const FleetSpec& fleet, const std::filesystem::path& dir);

}  // namespace fleetmaint
