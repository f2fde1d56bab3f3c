#include "fleetmaint/study.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fleetmaint {

namespace fs = std::filesystem;
using nlohmann::json;

const PolicyOutput& StudyResult::policy(PolicyKind kind) const {
    for (const auto& p : policies) {
        if (p.name == policy_name(kind)) return p;
    }
    throw std::out_of_range("policy not in study result");
}

StudyResult run_study(const RunConfig& config, unsigned threads) {
    StudyResult r;
    r.fleet = build_fleet(config);
    r.scenarios = generate_scenarios(r.fleet, config.n_scenarios, config.seed, threads);
    r.matrix = build_matrix(r.fleet, r.scenarios, config.risk, threads);

    CvarSearchOptions options;
    options.alpha = config.policies.alpha;
    options.exhaustive_budget = config.policies.exhaustive_budget;
    options.threads = threads;
    r.cvar_search = integrated_cvar(r.matrix, options);

    for (PolicyKind kind : kAllPolicies) {
        Schedule schedule;
        switch (kind) {
            case PolicyKind::CalendarOnly: schedule = calendar_only(r.fleet); break;
            case PolicyKind::UsageOnly: schedule = usage_only(r.fleet, r.scenarios); break;
            case PolicyKind::RulThreshold:
                schedule = rul_threshold(r.fleet, r.scenarios, config.policies.trigger_prob);
                break;
            case PolicyKind::IntegratedExpected: schedule = integrated_expected(r.matrix); break;
            case PolicyKind::IntegratedCvar: schedule = r.cvar_search.schedule; break;
        }
        PolicyOutput out;
        out.name = std::string(policy_name(kind));
        out.summary = summarize_policy(out.name, schedule, r.matrix, config.policies.alpha, r.fleet, r.scenarios,
                                       config.risk);
        out.curve = ecdf(schedule_cost_distribution(r.matrix, schedule));
        out.schedule = std::move(schedule);
        r.policies.push_back(std::move(out));
    }
    return r;
}

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

json make_run_meta(const RunConfig& config, const StudyResult& result) {
    bool any_none = false;
    for (const auto& p : result.policies) any_none = any_none || p.summary.counts_none;
    return json{
        {"version", kVersion},
        {"timestamp", utc_timestamp()},
        {"seed", config.seed},
        {"fleet_seed", config.fleet_seed()},
        {"config", to_json(config)},
        {"cost_coefficients_source", "calibration"},
        {"mean_maintenance_time_none_as", "T+1"},
        {"mean_maintenance_time_includes_none", any_none},
        {"cvar_search", {{"exact", result.cvar_search.exact},
                         {"evaluations", result.cvar_search.evaluations},
                         {"sweeps", result.cvar_search.sweeps}}},
    };
}

std::vector<fs::path> write_study(const RunConfig& config, const StudyResult& result, const fs::path& out_dir) {
    return emit_outputs(result.policies, result.fleet, make_run_meta(config, result), out_dir);
}

fs::path write_fleet_csv(const FleetSpec& fleet, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const auto path = out_dir / "fleet.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "asset_id,calendar_limit,usage_limit,rul_mean,rul_std,usage_mean_per_period,usage_cv,"
           "initial_age,initial_usage,c_pm,c_fail,c_perf,c_early\n";
    for (const auto& a : fleet.assets) {
        out << a.id;
        for (double v : {a.calendar_limit, a.usage_limit, a.rul_mean, a.rul_std, a.usage_mean_per_period, a.usage_cv,
                         a.initial_age, a.initial_usage, a.costs.pm, a.costs.fail, a.costs.perf, a.costs.early}) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
    if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
    return path;
}

Schedule read_schedule_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule file " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool with_policy = false;
    if (line == "policy,asset_id,date") {
        with_policy = true;
    } else if (line != "asset_id,date") {
        throw std::runtime_error(path.string() + ": expected header 'asset_id,date'");
    }

    Schedule schedule;
    std::string policy;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        const std::string where = path.string() + ":" + std::to_string(lineno);
        if (fields.size() != (with_policy ? 3u : 2u)) throw std::runtime_error(where + ": wrong column count");
        if (with_policy) {
            if (policy.empty()) policy = fields[0];
            if (fields[0] != policy) throw std::runtime_error(where + ": schedule file mixes policies");
            fields.erase(fields.begin());
        }
        MaintenanceDate date;
        try {
            date = MaintenanceDate::parse(fields[1]);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
        if (!schedule.dates.emplace(fields[0], date).second) {
            throw std::runtime_error(where + ": more than one date for asset '" + fields[0] + "'");
        }
    }
    return schedule;
}

void write_schedule_csv(const Schedule& schedule, const FleetSpec& fleet, const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "asset_id,date\n";
    for (const auto& a : fleet.assets) out << a.id << ',' << schedule.date_for(a.id).to_string() << '\n';
    if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace fleetmaint
