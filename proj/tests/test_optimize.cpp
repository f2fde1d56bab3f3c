#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fleetmaint/error.hpp"
#include "fleetmaint/optimize.hpp"

using namespace fleetmaint;

namespace {

FleetSpec fleet_of(int n, int horizon, std::uint64_t seed = 1) {
    FleetGenConfig c;
    c.n_assets = n;
    c.horizon = horizon;
    c.seed = seed;
    return generate_fleet(c);
}

}  // namespace

TEST(BuildMatrix, TinyCaseMatchesDirectCalls) {
    auto fleet = fleet_of(1, 2);
    auto set = generate_scenarios(fleet, 1, 3);
    RiskParams p;
    auto m = build_matrix(fleet, set, p);
    EXPECT_EQ(m.n_slots(), 3u);
    EXPECT_EQ(m.n_scenarios(), 1u);
    for (auto date : {MaintenanceDate::at(1), MaintenanceDate::at(2), MaintenanceDate::none()}) {
        EXPECT_EQ(m.at(0, date, 0), asset_scenario_cost(fleet.assets[0], date, set.latent_rul(0, 0), 2, p).total);
    }
}

TEST(BuildMatrix, SpotChecksAgainstFreshEvaluation) {
    auto fleet = fleet_of(5, 12, 8);
    auto set = generate_scenarios(fleet, 200, 8);
    RiskParams p;
    auto m = build_matrix(fleet, set, p);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> asset(0, 4), slot(0, 12), scen(0, 199);
    for (int k = 0; k < 100; ++k) {
        const auto i = asset(rng);
        const auto s = slot(rng);
        const auto w = scen(rng);
        const auto date = MaintenanceDate::from_slot(static_cast<int>(s), 12);
        EXPECT_NEAR(m.row(i, s)[w], asset_scenario_cost(fleet.assets[i], date, set.latent_rul(i, w), 12, p).total,
                    1e-12);
    }
}

TEST(BuildMatrix, PrefixStableWhenScenarioCountGrows) {
    auto fleet = fleet_of(3, 6);
    RiskParams p;
    auto small = build_matrix(fleet, generate_scenarios(fleet, 40, 5), p);
    auto large = build_matrix(fleet, generate_scenarios(fleet, 80, 5), p);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t s = 0; s < small.n_slots(); ++s) {
            for (std::size_t w = 0; w < 40; ++w) EXPECT_EQ(small.row(i, s)[w], large.row(i, s)[w]);
        }
    }
}

TEST(BuildMatrix, ThreadCountInvariant) {
    auto fleet = fleet_of(4, 8);
    auto set = generate_scenarios(fleet, 100, 2);
    auto a = build_matrix(fleet, set, RiskParams{}, 1);
    auto b = build_matrix(fleet, set, RiskParams{}, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t s = 0; s < a.n_slots(); ++s) {
            auto x = a.row(i, s);
            auto y = b.row(i, s);
            EXPECT_TRUE(std::equal(x.begin(), x.end(), y.begin()));
        }
    }
}

TEST(ScheduleCostDistribution, SelectsAndSumsRows) {
    auto fleet = fleet_of(2, 5);
    auto set = generate_scenarios(fleet, 30, 4);
    RiskParams p;
    auto m = build_matrix(fleet, set, p);

    auto none = schedule_cost_distribution(m, Schedule{});
    for (std::size_t w = 0; w < 30; ++w) {
        EXPECT_EQ(none.values[w], m.row(0, 5)[w] + m.row(1, 5)[w]);
    }

    Schedule s;
    s.dates["A1"] = MaintenanceDate::at(2);
    s.dates["A2"] = MaintenanceDate::at(4);
    auto d = schedule_cost_distribution(m, s);
    ASSERT_EQ(d.values.size(), 30u);
    for (std::size_t w = 0; w < 30; ++w) EXPECT_EQ(d.values[w], m.row(0, 1)[w] + m.row(1, 3)[w]);

    // independent route: weighted sum of per-scenario total_cost
    double mean = 0.0;
    for (std::size_t w = 0; w < 30; ++w) mean += set.weights()[w] * total_cost(s, fleet, set, w, p).total;
    EXPECT_NEAR(expected_cost(d), mean, 1e-9);
}

TEST(ScheduleCostDistribution, InvalidScheduleRejected) {
    auto fleet = fleet_of(2, 5);
    auto m = build_matrix(fleet, generate_scenarios(fleet, 3, 4), RiskParams{});
    Schedule s;
    s.dates["A1"] = MaintenanceDate::at(6);
    EXPECT_THROW(schedule_cost_distribution(m, s), std::invalid_argument);
    s.dates.clear();
    s.dates["nope"] = MaintenanceDate::at(1);
    EXPECT_THROW(schedule_cost_distribution(m, s), std::invalid_argument);
}

TEST(EnumerateSchedules, SingleAssetOrder) {
    auto e = enumerate_schedules(fleet_of(1, 2), 100);
    ASSERT_EQ(e.size(), 3u);
    std::vector<std::size_t> slots(1, 0);
    std::vector<MaintenanceDate> seen;
    do {
        seen.push_back(MaintenanceDate::from_slot(static_cast<int>(slots[0]), 2));
    } while (e.next(slots));
    ASSERT_EQ(seen.size(), 3u);
    EXPECT_EQ(seen[0], MaintenanceDate::at(1));
    EXPECT_EQ(seen[1], MaintenanceDate::at(2));
    EXPECT_EQ(seen[2], MaintenanceDate::none());
}

TEST(EnumerateSchedules, TwoAssetsNoDuplicatesAndDecodeAgrees) {
    auto e = enumerate_schedules(fleet_of(2, 2), 100);
    EXPECT_EQ(e.size(), 9u);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> slots(2, 0);
    std::vector<std::size_t> decoded(2);
    std::uint64_t k = 0;
    do {
        e.decode(k++, decoded);
        EXPECT_EQ(decoded, slots);
        seen.insert(slots);
    } while (e.next(slots));
    EXPECT_EQ(k, 9u);
    EXPECT_EQ(seen.size(), 9u);
}

TEST(EnumerateSchedules, BudgetChecks) {
    auto fleet = fleet_of(5, 12);
    auto e = enumerate_schedules(fleet, 1'000'000);
    EXPECT_EQ(e.size(), 371293u);
    EXPECT_THROW(enumerate_schedules(fleet, 371292), BudgetExceeded);
    EXPECT_EQ(schedule_space_size(200, 12), std::numeric_limits<std::uint64_t>::max());
}
