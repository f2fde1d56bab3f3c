#include "fleetmaint/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fleetmaint/parallel.hpp"
#include "fleetmaint/random.hpp"

namespace fleetmaint {

namespace fs = std::filesystem;

ScenarioSet::ScenarioSet(std::size_t n_assets, std::size_t n_scenarios, int horizon, std::uint64_t seed)
    : n_assets_(n_assets),
      n_scenarios_(n_scenarios),
      horizon_(horizon),
      seed_(seed),
      weights_(n_scenarios, n_scenarios == 0 ? 0.0 : 1.0 / static_cast<double>(n_scenarios)),
      increments_(n_assets * n_scenarios * static_cast<std::size_t>(horizon), 0.0),
      latent_rul_(n_assets * n_scenarios, 0.0) {
    if (n_scenarios == 0) throw std::invalid_argument("n_scenarios must be >= 1");
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
}

std::span<const double> ScenarioSet::usage_increments(std::size_t asset, std::size_t scenario) const {
    const auto T = static_cast<std::size_t>(horizon_);
    return std::span<const double>(increments_).subspan((asset * n_scenarios_ + scenario) * T, T);
}

std::span<double> ScenarioSet::usage_increments(std::size_t asset, std::size_t scenario) {
    const auto T = static_cast<std::size_t>(horizon_);
    return std::span<double>(increments_).subspan((asset * n_scenarios_ + scenario) * T, T);
}

void ScenarioSet::validate() const {
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) throw std::invalid_argument("scenario weights must be >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("scenario weights must sum to 1");
    for (double d : increments_) {
        if (!(d > 0.0)) throw std::invalid_argument("usage increments must be > 0");
    }
    for (double r : latent_rul_) {
        if (!(r >= 0.0)) throw std::invalid_argument("latent RUL must be >= 0");
    }
}

ScenarioSet generate_scenarios(const FleetSpec& fleet, std::size_t n_scenarios, std::uint64_t seed,
                               unsigned threads) {
    fleet.validate();
    ScenarioSet set(fleet.size(), n_scenarios, fleet.horizon, seed);
    const std::size_t cells = fleet.size() * n_scenarios;
    parallel_for(cells, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t cell = begin; cell < end; ++cell) {
            const std::size_t i = cell / n_scenarios;
            const std::size_t w = cell % n_scenarios;
            const AssetSpec& a = fleet.assets[i];
            auto rng = make_stream(seed, kScenarioDomain, i, w);
            for (double& d : set.usage_increments(i, w)) {
                d = sample_gamma(a.usage_mean_per_period, a.usage_cv, rng);
            }
            set.latent_rul(i, w) = sample_truncated_normal(a.rul_mean, a.rul_std, 0.0, rng);
        }
    });
    return set;
}

double cumulative_usage(const ScenarioSet& set, const FleetSpec& fleet, std::size_t asset,
                        std::size_t scenario, int period) {
    if (asset >= set.n_assets() || asset >= fleet.size()) throw std::out_of_range("asset index out of range");
    if (scenario >= set.n_scenarios()) throw std::out_of_range("scenario index out of range");
    if (period < 0 || period > set.horizon()) throw std::out_of_range("period out of range");
    double u = fleet.assets[asset].initial_usage;
    auto inc = set.usage_increments(asset, scenario);
    for (int s = 0; s < period; ++s) u += inc[static_cast<std::size_t>(s)];
    return u;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& s, const fs::path& path) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::runtime_error(path.string() + ": invalid number '" + s + "'");
    }
    return v;
}

std::size_t parse_index(const std::string& s, const fs::path& path) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::runtime_error(path.string() + ": invalid index '" + s + "'");
    }
    return v;
}

template <typename RowFn>
void read_rows(const fs::path& path, const std::string& expected_header, std::size_t columns, RowFn&& fn) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != expected_header) {
        throw std::runtime_error(path.string() + ": expected header '" + expected_header + "'");
    }
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != columns) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
                                     std::to_string(columns) + " columns");
        }
        fn(fields);
    }
}

}  // namespace

void export_scenarios_csv(const ScenarioSet& set, const FleetSpec& fleet, const fs::path& dir) {
    fs::create_directories(dir);
    const auto inc_path = dir / "usage_increments.csv";
    const auto rul_path = dir / "latent_rul.csv";
    std::ofstream inc(inc_path, std::ios::binary);
    std::ofstream rul(rul_path, std::ios::binary);
    if (!inc) throw std::runtime_error("cannot write " + inc_path.string());
    if (!rul) throw std::runtime_error("cannot write " + rul_path.string());
    inc << "asset_id,scenario,period,usage_increment\n";
    rul << "asset_id,scenario,latent_rul\n";
    for (std::size_t i = 0; i < set.n_assets(); ++i) {
        const std::string& id = fleet.assets[i].id;
        for (std::size_t w = 0; w < set.n_scenarios(); ++w) {
            auto row = set.usage_increments(i, w);
            for (std::size_t t = 0; t < row.size(); ++t) {
                inc << id << ',' << w << ',' << (t + 1) << ',' << fmt17(row[t]) << '\n';
            }
            rul << id << ',' << w << ',' << fmt17(set.latent_rul(i, w)) << '\n';
        }
    }
    if (!inc.flush()) throw std::runtime_error("write failed: " + inc_path.string());
    if (!rul.flush()) throw std::runtime_error("write failed: " + rul_path.string());
}

ScenarioSet import_scenarios_csv(const FleetSpec& fleet, const fs::path& dir) {
    const auto inc_path = dir / "usage_increments.csv";
    const auto rul_path = dir / "latent_rul.csv";

    std::size_t max_scenario = 0;
    bool any = false;
    read_rows(rul_path, "asset_id,scenario,latent_rul", 3, [&](const std::vector<std::string>& f) {
        max_scenario = std::max(max_scenario, parse_index(f[1], rul_path));
        any = true;
    });
    if (!any) throw std::runtime_error(rul_path.string() + ": no rows");

    const std::size_t S = max_scenario + 1;
    ScenarioSet set(fleet.size(), S, fleet.horizon, 0);
    std::vector<char> seen_rul(fleet.size() * S, 0);
    std::vector<char> seen_inc(fleet.size() * S * static_cast<std::size_t>(fleet.horizon), 0);

    auto asset_index = [&](const std::string& id, const fs::path& p) {
        auto idx = fleet.index_of(id);
        if (!idx) throw std::runtime_error(p.string() + ": unknown asset '" + id + "'");
        return *idx;
    };

    read_rows(rul_path, "asset_id,scenario,latent_rul", 3, [&](const std::vector<std::string>& f) {
        const auto i = asset_index(f[0], rul_path);
        const auto w = parse_index(f[1], rul_path);
        set.latent_rul(i, w) = parse_double(f[2], rul_path);
        seen_rul[i * S + w] = 1;
    });
    read_rows(inc_path, "asset_id,scenario,period,usage_increment", 4, [&](const std::vector<std::string>& f) {
        const auto i = asset_index(f[0], inc_path);
        const auto w = parse_index(f[1], inc_path);
        const auto t = parse_index(f[2], inc_path);
        if (w >= S || t < 1 || t > static_cast<std::size_t>(fleet.horizon)) {
            throw std::runtime_error(inc_path.string() + ": scenario or period out of range");
        }
        set.usage_increments(i, w)[t - 1] = parse_double(f[3], inc_path);
        seen_inc[(i * S + w) * static_cast<std::size_t>(fleet.horizon) + (t - 1)] = 1;
    });
    for (char c : seen_rul) {
        if (!c) throw std::runtime_error(rul_path.string() + ": missing (asset, scenario) rows");
    }
    for (char c : seen_inc) {
        if (!c) throw std::runtime_error(inc_path.string() + ": missing (asset, scenario, period) rows");
    }
    set.validate();
    return set;
}

}  // namespace fleetmaint
