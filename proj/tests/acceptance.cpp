// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fleetmaint/config.hpp"
#include "fleetmaint/criteria.hpp"
#include "fleetmaint/policies.hpp"
#include "fleetmaint/random.hpp"
#include "fleetmaint/riskcost.hpp"
#include "fleetmaint/study.hpp"

using namespace fleetmaint;
namespace fs = std::filesystem;

namespace {

constexpr int kSeeds = 10;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SeedRun {
    std::uint64_t seed;
    double seconds;
    StudyResult result;
};

std::vector<SeedRun> run_default_seeds() {
    std::vector<SeedRun> runs;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        auto config = parse_config(nlohmann::json::object());
        config.set_seed(seed);
        const auto t0 = std::chrono::steady_clock::now();
        auto result = run_study(config);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        runs.push_back({seed, secs, std::move(result)});
    }
    return runs;
}

constexpr PolicyKind kBaselines[] = {PolicyKind::CalendarOnly, PolicyKind::UsageOnly, PolicyKind::RulThreshold};
constexpr PolicyKind kIntegrated[] = {PolicyKind::IntegratedExpected, PolicyKind::IntegratedCvar};

const PolicySummary& summary(const SeedRun& r, PolicyKind k) { return r.result.policy(k).summary; }

Check table_ordering(const std::vector<SeedRun>& runs) {
    Check c;
    int strong = 0;
    double slowest = 0.0;
    std::string ratios;
    for (const auto& r : runs) {
        const double e = summary(r, PolicyKind::IntegratedExpected).expected_cost;
        double best = INFINITY;
        for (auto b : kBaselines) {
            const double eb = summary(r, b).expected_cost;
            c.require(e < eb, "seed " + std::to_string(r.seed) + ": not below " + std::string(policy_name(b)));
            best = std::min(best, eb);
        }
        if (e < 0.5 * best) ++strong;
        ratios += (ratios.empty() ? "" : ",") + fmt("%.2f", e / best);
        slowest = std::max(slowest, r.seconds);
        c.require(r.seconds < 60.0, "seed " + std::to_string(r.seed) + fmt(": %.1f s", r.seconds));
    }
    c.require(strong >= 8, std::to_string(strong) + "/10 seeds below 0.5x best baseline, need 8");
    if (c.ok) c.detail = std::to_string(strong) + "/10 below 0.5x" + fmt(", slowest %.2f s", slowest);
    c.detail += " (E/best baseline per seed " + ratios + ")";
    return c;
}

Check tail_dominance(const std::vector<SeedRun>& runs) {
    Check c;
    double margin = INFINITY;
    for (const auto& r : runs) {
        for (auto i : kIntegrated) {
            for (auto b : kBaselines) {
                const double cv = summary(r, i).cvar, eb = summary(r, b).expected_cost;
                c.require(cv < eb, "seed " + std::to_string(r.seed) + ": " + std::string(policy_name(i)) +
                                       " CVaR not below " + std::string(policy_name(b)));
                margin = std::min(margin, eb / cv);
            }
        }
    }
    if (c.ok) c.detail = fmt("smallest baseline E / integrated CVaR = %.2f", margin);
    return c;
}

Check risk_ordering(const std::vector<SeedRun>& runs) {
    Check c;
    for (const auto& r : runs) {
        const auto& ex = summary(r, PolicyKind::IntegratedExpected);
        const auto& cv = summary(r, PolicyKind::IntegratedCvar);
        const auto s = std::to_string(r.seed);
        c.require(cv.cvar <= ex.cvar + 1e-9, "seed " + s + fmt(": CVaR %.9g > %.9g", cv.cvar, ex.cvar));
        c.require(ex.expected_cost <= cv.expected_cost + 1e-9,
                  "seed " + s + fmt(": E %.9g > %.9g", ex.expected_cost, cv.expected_cost));
    }
    if (c.ok) c.detail = "10/10 seeds";
    return c;
}

Check near_coincidence(const std::vector<SeedRun>& runs) {
    Check c;
    int close = 0;
    std::string diffs;
    for (const auto& r : runs) {
        const auto& a = r.result.policy(PolicyKind::IntegratedExpected).schedule;
        const auto& b = r.result.policy(PolicyKind::IntegratedCvar).schedule;
        int differ = 0;
        for (const auto& asset : r.result.fleet.assets) differ += a.date_for(asset.id) != b.date_for(asset.id);
        if (differ <= 2) ++close;
        diffs += (diffs.empty() ? "" : ",") + std::to_string(differ);
    }
    c.require(close > kSeeds / 2, "only " + std::to_string(close) + " seeds within 2 dates");
    c.detail = std::to_string(close) + "/10 seeds within 2 dates (differences " + diffs + ")";
    return c;
}

Check proxy_ordering(const std::vector<SeedRun>& runs) {
    Check c;
    double worst = 0.0;
    int bad_seeds = 0;
    for (const auto& r : runs) {
        bool seed_ok = true;
        for (auto i : kIntegrated) {
            for (auto b : kBaselines) {
                const double pi = summary(r, i).mean_failure_proxy, pb = summary(r, b).mean_failure_proxy;
                seed_ok = seed_ok && pi < 0.05 * pb;
                c.require(pi < 0.05 * pb, "seed " + std::to_string(r.seed) + ": " + std::string(policy_name(i)) +
                                              " proxy vs " + std::string(policy_name(b)) + fmt(" %.4g / %.4g", pi, pb));
                worst = std::max(worst, pi / pb);
            }
        }
        bad_seeds += !seed_ok;
    }
    if (c.ok) {
        c.detail = fmt("largest integrated/baseline proxy ratio %.4f", worst);
    } else {
        c.detail = std::to_string(bad_seeds) + "/10 seeds fail; first: " + c.detail + fmt("; largest ratio %.3f", worst);
    }
    return c;
}

// Joint enumeration over all (T+1)^N schedules, costed scenario by scenario
// through total_cost. Earliest schedule in (asset 0 major, "none" last) order
// wins ties.
Check oracle_equivalence() {
    Check c;
    const RiskParams risk;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        FleetGenConfig gen;
        gen.n_assets = 2;
        gen.horizon = 3;
        gen.seed = seed;
        auto fleet = generate_fleet(gen);
        auto set = generate_scenarios(fleet, 50, seed);

        Schedule best_e, best_c;
        double min_e = INFINITY, min_c = INFINITY;
        for (int s0 = 0; s0 <= 3; ++s0) {
            for (int s1 = 0; s1 <= 3; ++s1) {
                Schedule s;
                s.dates["A1"] = MaintenanceDate::from_slot(s0, 3);
                s.dates["A2"] = MaintenanceDate::from_slot(s1, 3);
                CostDistribution d;
                for (std::size_t w = 0; w < 50; ++w) {
                    d.values.push_back(total_cost(s, fleet, set, w, risk).total);
                    d.weights.push_back(set.weights()[w]);
                }
                const double e = expected_cost(d), cv = cvar_alpha(d, 0.9);
                if (e < min_e) min_e = e, best_e = s;
                if (cv < min_c) min_c = cv, best_c = s;
            }
        }
        const auto matrix = build_matrix(fleet, set, risk);
        const auto exp_schedule = integrated_expected(matrix);
        const auto cvar_result = integrated_cvar(matrix, CvarSearchOptions{});
        const auto tag = "seed " + std::to_string(seed);
        c.require(exp_schedule == best_e, tag + ": integrated_expected differs from joint argmin");
        c.require(cvar_result.exact, tag + ": CVaR search not exhaustive");
        c.require(cvar_result.schedule == best_c, tag + ": integrated_cvar differs from joint argmin");
    }
    if (c.ok) c.detail = "20/20 seeds";
    return c;
}

// Brute-force tail: VaR is the smallest value whose cumulative weight reaches
// alpha, CVaR the weighted mean over values >= VaR.
double brute_cvar(const CostDistribution& d, double alpha) {
    double var = INFINITY;
    for (double z : d.values) {
        double below = 0.0;
        for (std::size_t k = 0; k < d.values.size(); ++k) below += d.values[k] <= z ? d.weights[k] : 0.0;
        if (below >= alpha - 1e-12) var = std::min(var, z);
    }
    double mass = 0.0, sum = 0.0;
    for (std::size_t k = 0; k < d.values.size(); ++k) {
        if (d.values[k] >= var) mass += d.weights[k], sum += d.weights[k] * d.values[k];
    }
    return sum / mass;
}

Check cvar_suite() {
    Check c;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double tol = 1e-9;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(u(rng) * 60);
        CostDistribution d;
        double total = 0.0;
        for (int k = 0; k < n; ++k) {
            d.values.push_back(u(rng) * 200.0 - 50.0);
            d.weights.push_back(0.05 + u(rng));
            total += d.weights.back();
        }
        for (double& w : d.weights) w /= total;
        const double alpha = 0.05 + 0.9 * u(rng);
        const double cv = cvar_alpha(d, alpha);
        const auto t = "trial " + std::to_string(trial);

        CostDistribution flat = d;
        std::fill(flat.values.begin(), flat.values.end(), d.values[0]);
        c.require(std::abs(cvar_alpha(flat, alpha) - d.values[0]) <= tol, t + ": degenerate");
        c.require(cv >= expected_cost(d) - tol, t + ": CVaR < mean");
        c.require(cv >= var_alpha(d, alpha) - tol, t + ": CVaR < VaR");

        CostDistribution shifted = d, scaled = d;
        for (double& z : shifted.values) z += 17.25;
        for (double& z : scaled.values) z *= 3.5;
        c.require(std::abs(cvar_alpha(shifted, alpha) - (cv + 17.25)) <= tol, t + ": translation");
        c.require(std::abs(cvar_alpha(scaled, alpha) - 3.5 * cv) <= tol * 3.5, t + ": homogeneity");

        const double higher = alpha + (0.99 - alpha) * u(rng);
        c.require(cvar_alpha(d, higher) >= cv - tol, t + ": not monotone in alpha");
        c.require(std::abs(cv - brute_cvar(d, alpha)) <= tol, t + ": brute-force mismatch");
    }
    auto ten = CostDistribution::uniform({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    const double c90 = cvar_alpha(ten, 0.9), c80 = cvar_alpha(ten, 0.8);
    c.require(std::abs(c90 - 9.5) <= tol && std::abs(brute_cvar(ten, 0.9) - 9.5) <= tol, fmt("{1..10} CVaR_0.9 = %.12g", c90));
    c.require(std::abs(c80 - 9.0) <= tol && std::abs(brute_cvar(ten, 0.8) - 9.0) <= tol, fmt("{1..10} CVaR_0.8 = %.12g", c80));
    if (c.ok) c.detail = fmt("100 distributions; {1..10}: CVaR_0.9 = %g, CVaR_0.8 = %g", c90, c80);
    return c;
}

Check sampler_moments() {
    Check c;
    FleetGenConfig gen;
    gen.seed = 7;
    const auto fleet = generate_fleet(gen);
    constexpr int kDraws = 10000;
    double worst_mean = 0.0, worst_cv = 0.0;
    for (std::size_t i = 0; i < fleet.size(); ++i) {
        const auto& a = fleet.assets[i];
        auto rng = make_stream(99, kScenarioDomain, i, 0);
        double sum = 0.0, sq = 0.0;
        for (int k = 0; k < kDraws; ++k) {
            const double x = sample_gamma(a.usage_mean_per_period, a.usage_cv, rng);
            sum += x;
            sq += x * x;
        }
        const double mean = sum / kDraws;
        const double cv = std::sqrt(sq / kDraws - mean * mean) / mean;
        const double em = std::abs(mean / a.usage_mean_per_period - 1.0);
        const double ec = std::abs(cv / a.usage_cv - 1.0);
        worst_mean = std::max(worst_mean, em);
        worst_cv = std::max(worst_cv, ec);
        c.require(em < 0.02, a.id + fmt(": gamma mean off by %.2f%%", 100 * em));
        c.require(ec < 0.05, a.id + fmt(": gamma cv off by %.2f%%", 100 * ec));

        for (int k = 0; k < kDraws; ++k) {
            c.require(sample_truncated_normal(a.rul_mean, a.rul_std, 0.0, rng) >= 0.0, a.id + ": negative RUL draw");
        }
    }
    // Hard truncation well above the mean still respects the bound.
    auto rng = make_stream(5, kScenarioDomain, 0, 0);
    for (int k = 0; k < kDraws; ++k) {
        c.require(sample_truncated_normal(1.0, 1.0, 3.0, rng) >= 3.0, "tail truncated-normal draw below bound");
    }

    auto a = generate_scenarios(fleet, 200, 31);
    auto b = generate_scenarios(fleet, 200, 31);
    c.require(a == b, "scenario sets differ for the same seed");
    c.require(!(a == generate_scenarios(fleet, 200, 32)), "different seeds give identical scenario sets");
    auto r1 = make_stream(11, kScenarioDomain, 3, 4), r2 = make_stream(11, kScenarioDomain, 3, 4);
    for (int k = 0; k < 1000; ++k) c.require(sample_gamma(12.0, 0.3, r1) == sample_gamma(12.0, 0.3, r2), "gamma stream not bit-exact");
    if (c.ok) c.detail = fmt("worst gamma mean error %.2f%%, worst cv error %.2f%%", 100 * worst_mean, 100 * worst_cv);
    return c;
}

Check cost_model_units() {
    Check c;
    const RiskParams p;
    const double tol = 1e-9;
    c.require(std::abs(failure_probability(0.0, p) - 0.95) <= tol, "P(0) != 0.95");
    c.require(std::abs(failure_probability(1.0, p) - 0.95 * std::exp(-0.75)) <= tol, "P(1) != 0.95 e^-0.75");
    c.require(std::abs(failure_probability(-2.0, p) - 0.95) <= tol, "P(-2) != 0.95");
    c.require(std::abs(performance_penalty(4.0, 5.0, p)) <= tol, "perf(W) != 0");
    c.require(std::abs(performance_penalty(10.0, 5.0, p)) <= tol, "perf(>W) != 0");
    c.require(std::abs(performance_penalty(2.0, 5.0, p) - 2.5) <= tol, "perf(W/2) != C/2");
    c.require(std::abs(performance_penalty(0.0, 5.0, p) - 5.0) <= tol, "perf(0) != C");
    c.require(std::abs(performance_penalty(-3.0, 5.0, p) - 5.0) <= tol, "perf(<0) != C");

    AssetSpec asset;
    asset.id = "A1";
    asset.calendar_limit = 10;
    asset.usage_limit = 200;
    asset.rul_mean = 6.0;
    asset.rul_std = 1.0;
    asset.usage_mean_per_period = 15;
    asset.usage_cv = 0.2;
    asset.costs = {20, 100, 5, 12};
    const auto one = asset_scenario_cost(asset, MaintenanceDate::at(1), 7.0, 12, p);
    c.require(one.pm == 20 && one.fail == 0 && one.perf == 0, "date=1 accrues hazard cost");
    c.require(std::abs(one.early - 12.0 * 6.0 / 6.0) <= tol, "date=1 early penalty");
    c.require(std::abs(one.total - 32.0) <= tol, "date=1 total");

    // Hand case: R = {3, 8, 5.5}, dates {2, none, 4}, T = 6.
    FleetSpec fleet;
    fleet.horizon = 6;
    for (const char* id : {"A1", "A2", "A3"}) {
        asset.id = id;
        fleet.assets.push_back(asset);
    }
    ScenarioSet set(3, 1, 6, 0);
    const double rul[] = {3.0, 8.0, 5.5};
    for (std::size_t i = 0; i < 3; ++i) {
        set.latent_rul(i, 0) = rul[i];
        for (double& d : set.usage_increments(i, 0)) d = 15.0;
    }
    Schedule s;
    s.dates["A1"] = MaintenanceDate::at(2);
    s.dates["A3"] = MaintenanceDate::at(4);
    const auto sample = total_cost(s, fleet, set, 0, p);
    double sum = 0.0;
    for (const auto& b : sample.assets) {
        sum += b.total;
        c.require(std::abs(b.pm + b.fail + b.perf + b.early - b.total) <= tol, "component sum != asset total");
    }
    c.require(std::abs(sum - sample.total) <= tol, "asset totals != fleet total");
    c.require(std::abs(sample.total - 139.37670304003234) <= tol, fmt("hand case total %.17g", sample.total));

    // Additivity on generated data.
    FleetGenConfig gen;
    gen.seed = 3;
    const auto big = generate_fleet(gen);
    const auto scen = generate_scenarios(big, 100, 3);
    const auto sched = calendar_only(big);
    for (std::size_t w = 0; w < scen.n_scenarios(); ++w) {
        const auto t = total_cost(sched, big, scen, w, p);
        double acc = 0.0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            acc += asset_scenario_cost(big.assets[i], sched.date_for(big.assets[i].id), scen.latent_rul(i, w),
                                       big.horizon, p).total;
        }
        c.require(std::abs(acc - t.total) <= tol, "fleet total not additive at scenario " + std::to_string(w));
    }
    if (c.ok) c.detail = fmt("hand case total %.12g", sample.total);
    return c;
}

Check end_to_end_determinism() {
    Check c;
    const auto root = fs::temp_directory_path() / "fleetmaint_acceptance";
    fs::remove_all(root);
    auto config = parse_config(nlohmann::json::object());
    config.set_seed(17);
    const std::vector<std::pair<std::string, unsigned>> runs = {{"a1", 1}, {"b1", 1}, {"a4", 4}, {"b4", 4}};
    for (const auto& [name, threads] : runs) write_study(config, run_study(config, threads), root / name);

    std::vector<std::string> csvs;
    for (const auto& entry : fs::directory_iterator(root / "a1")) {
        if (entry.path().extension() == ".csv") csvs.push_back(entry.path().filename().string());
    }
    std::sort(csvs.begin(), csvs.end());
    c.require(csvs.size() == 7, std::to_string(csvs.size()) + " CSV files written");
    for (const auto& f : csvs) {
        const auto ref = slurp(root / "a1" / f);
        for (const char* other : {"b1", "a4", "b4"}) {
            c.require(slurp(root / other / f) == ref, f + " differs in run " + other);
        }
    }
    fs::remove_all(root);
    if (c.ok) c.detail = std::to_string(csvs.size()) + " CSVs identical over 2 runs x threads {1, 4}";
    return c;
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const char* title, const std::function<Check()>& body) {
        Check c;
        try {
            c = body();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  [%2d] %s: %s\n", c.ok ? "PASS" : "FAIL", id, title, c.detail.c_str());
        std::fflush(stdout);
        failed += !c.ok;
    };

    std::vector<SeedRun> runs;
    try {
        runs = run_default_seeds();
    } catch (const std::exception& e) {
        std::printf("study runs failed: %s\n", e.what());
        return 1;
    }
    report(1, "expected-cost ordering vs baselines", [&] { return table_ordering(runs); });
    report(2, "integrated CVaR below baseline expected cost", [&] { return tail_dominance(runs); });
    report(3, "risk-ordering identities", [&] { return risk_ordering(runs); });
    report(4, "integrated schedules nearly coincide", [&] { return near_coincidence(runs); });
    report(5, "failure-proxy ordering", [&] { return proxy_ordering(runs); });
    report(6, "joint-enumeration oracle equivalence", oracle_equivalence);
    report(7, "CVaR functional suite", cvar_suite);
    report(8, "sampler moments and determinism", sampler_moments);
    report(9, "cost-model unit suite", cost_model_units);
    report(10, "end-to-end determinism", end_to_end_determinism);

    std::printf("%d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
