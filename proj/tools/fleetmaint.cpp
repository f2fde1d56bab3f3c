// fleetmaint: scenario-based maintenance scheduling study driver.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fleetmaint/config.hpp"
#include "fleetmaint/error.hpp"
#include "fleetmaint/study.hpp"

namespace fs = std::filesystem;
using namespace fleetmaint;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out;
    unsigned threads = 0;
};

RunConfig effective_config(const GlobalOptions& g) {
    RunConfig cfg = g.config_path.empty() ? parse_config(nlohmann::json::object()) : load_config(g.config_path);
    if (g.seed) cfg.set_seed(*g.seed);
    if (!g.out.empty()) cfg.output_dir = g.out;
    return cfg;
}

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ScenarioSet load_or_generate(const RunConfig& cfg, const FleetSpec& fleet, const std::string& scenarios_dir,
                             unsigned threads) {
    if (!scenarios_dir.empty()) return import_scenarios_csv(fleet, scenarios_dir);
    return generate_scenarios(fleet, cfg.n_scenarios, cfg.seed, threads);
}

int cmd_gen_fleet(const GlobalOptions& g) {
    const auto cfg = effective_config(g);
    const auto path = write_fleet_csv(build_fleet(cfg), cfg.output_dir);
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int cmd_gen_scenarios(const GlobalOptions& g) {
    const auto cfg = effective_config(g);
    const auto fleet = build_fleet(cfg);
    const auto set = generate_scenarios(fleet, cfg.n_scenarios, cfg.seed, g.threads);
    write_fleet_csv(fleet, cfg.output_dir);
    export_scenarios_csv(set, fleet, cfg.output_dir);
    std::cout << "wrote " << set.n_assets() << " assets x " << set.n_scenarios() << " scenarios x "
              << set.horizon() << " periods to " << cfg.output_dir << "\n";
    return 0;
}

int cmd_evaluate(const GlobalOptions& g, const std::string& schedule_path, const std::string& scenarios_dir) {
    const auto cfg = effective_config(g);
    const auto fleet = build_fleet(cfg);
    const auto schedule = read_schedule_csv(schedule_path);
    const auto violations = validate_schedule(schedule, fleet);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "violation: " << v.message << "\n";
        return kExitRuntime;
    }
    const auto set = load_or_generate(cfg, fleet, scenarios_dir, g.threads);
    const auto matrix = build_matrix(fleet, set, cfg.risk, g.threads);
    const auto dist = schedule_cost_distribution(matrix, schedule);
    const double alpha = cfg.policies.alpha;
    std::cout << "expected_cost=" << full(expected_cost(dist)) << "\n"
              << "alpha=" << full(alpha) << "\n"
              << "var=" << full(var_alpha(dist, alpha)) << "\n"
              << "cvar=" << full(cvar_alpha(dist, alpha)) << "\n"
              << "failure_proxy=" << full(failure_proxy(schedule, fleet, set, cfg.risk)) << "\n";
    return 0;
}

int cmd_optimize(const GlobalOptions& g, const std::string& criterion, const std::string& scenarios_dir) {
    const auto cfg = effective_config(g);
    const auto fleet = build_fleet(cfg);
    const auto set = load_or_generate(cfg, fleet, scenarios_dir, g.threads);
    const auto matrix = build_matrix(fleet, set, cfg.risk, g.threads);

    Schedule schedule;
    double objective = 0.0;
    if (criterion == "expected") {
        schedule = integrated_expected(matrix);
        objective = expected_cost(schedule_cost_distribution(matrix, schedule));
    } else {
        CvarSearchOptions options;
        options.alpha = cfg.policies.alpha;
        options.exhaustive_budget = cfg.policies.exhaustive_budget;
        options.threads = g.threads;
        auto result = integrated_cvar(matrix, options);
        schedule = result.schedule;
        objective = result.objective;
        std::cout << "exact=" << (result.exact ? "true" : "false") << "\n";
    }
    const auto path = fs::path(cfg.output_dir) / "schedule.csv";
    write_schedule_csv(schedule, fleet, path);
    std::cout << "criterion=" << criterion << "\n"
              << "objective=" << full(objective) << "\n";
    for (const auto& a : fleet.assets) std::cout << a.id << "=" << schedule.date_for(a.id).to_string() << "\n";
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int cmd_study(const GlobalOptions& g) {
    const auto cfg = effective_config(g);
    const auto result = run_study(cfg, g.threads);
    write_study(cfg, result, cfg.output_dir);
    std::vector<PolicySummary> rows;
    for (const auto& p : result.policies) rows.push_back(p.summary);
    std::cout << format_summary_table(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scenario-based predictive maintenance scheduling for a multi-asset fleet"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--config", g.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--seed", g.seed, "Seed for fleet and scenario generation (overrides config)");
    app.add_option("--out", g.out, "Output directory (overrides config)");
    app.add_option("--threads", g.threads, "Worker threads, 0 = hardware concurrency");

    auto* gen_fleet = app.add_subcommand("gen-fleet", "Write fleet.csv");
    auto* gen_scen = app.add_subcommand("gen-scenarios", "Write scenario CSVs");

    std::string schedule_path;
    std::string scenarios_dir;
    auto* evaluate = app.add_subcommand("evaluate", "Cost distribution of a given schedule");
    evaluate->add_option("--schedule", schedule_path, "Schedule CSV (asset_id,date)")->required();
    evaluate->add_option("--scenarios", scenarios_dir, "Directory with exported scenario CSVs");

    std::string criterion = "expected";
    auto* optimize = app.add_subcommand("optimize", "Optimize one integrated schedule");
    optimize->add_option("--criterion", criterion, "expected or cvar")
        ->check(CLI::IsMember({"expected", "cvar"}));
    optimize->add_option("--scenarios", scenarios_dir, "Directory with exported scenario CSVs");

    auto* study = app.add_subcommand("study", "Run the full five-policy comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*gen_fleet) return cmd_gen_fleet(g);
        if (*gen_scen) return cmd_gen_scenarios(g);
        if (*evaluate) return cmd_evaluate(g, schedule_path, scenarios_dir);
        if (*optimize) return cmd_optimize(g, criterion, scenarios_dir);
        if (*study) return cmd_study(g);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitRuntime;
}
