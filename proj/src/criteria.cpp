#include "fleetmaint/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace fleetmaint {

CostDistribution CostDistribution::uniform(std::vector<double> values) {
    CostDistribution d;
    const double w = values.empty() ? 0.0 : 1.0 / static_cast<double>(values.size());
    d.weights.assign(values.size(), w);
    d.values = std::move(values);
    return d;
}

void CostDistribution::validate() const {
    if (values.empty()) throw std::invalid_argument("cost distribution is empty");
    if (values.size() != weights.size()) throw std::invalid_argument("values and weights differ in length");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("weights must be >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kCumulativeWeightTolerance) {
        throw std::invalid_argument("weights must sum to 1");
    }
}

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
}

// CDF walk over (value, weight) pairs sorted by value; ties are merged by only
// testing at the end of each run of equal values.
double var_sorted(std::span<const std::pair<double, double>> sorted, double alpha) {
    const double target = alpha - kCumulativeWeightTolerance;
    double cum = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        cum += sorted[k].second;
        const bool run_end = k + 1 == sorted.size() || sorted[k + 1].first != sorted[k].first;
        if (run_end && cum >= target) return sorted[k].first;
    }
    return sorted.back().first;
}

std::vector<std::pair<double, double>> sorted_pairs(std::span<const double> values, std::span<const double> weights) {
    std::vector<std::pair<double, double>> pairs(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) pairs[k] = {values[k], weights[k]};
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return pairs;
}

bool uniform_weights(std::span<const double> weights) {
    return std::all_of(weights.begin(), weights.end(), [&](double w) { return w == weights.front(); });
}

double var_impl(std::span<const double> values, std::span<const double> weights, double alpha,
                std::vector<double>& scratch) {
    if (uniform_weights(weights)) {
        // Same cumulative sums as the sorted walk: the position where the
        // running sum of equal weights first reaches alpha fixes the quantile.
        const double w = weights.front();
        const double target = alpha - kCumulativeWeightTolerance;
        std::size_t k = 0;
        double cum = 0.0;
        for (; k < values.size(); ++k) {
            cum += w;
            if (cum >= target) break;
        }
        if (k == values.size()) k = values.size() - 1;
        scratch.assign(values.begin(), values.end());
        std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k), scratch.end());
        return scratch[k];
    }
    auto pairs = sorted_pairs(values, weights);
    return var_sorted(pairs, alpha);
}

}  // namespace

double expected_cost(const CostDistribution& dist) {
    dist.validate();
    double sum = 0.0;
    for (std::size_t k = 0; k < dist.values.size(); ++k) sum += dist.weights[k] * dist.values[k];
    return sum;
}

double var_alpha(const CostDistribution& dist, double alpha) {
    dist.validate();
    check_alpha(alpha);
    auto pairs = sorted_pairs(dist.values, dist.weights);
    return var_sorted(pairs, alpha);
}

double cvar_alpha(std::span<const double> values, std::span<const double> weights, double alpha,
                  std::vector<double>& scratch) {
    if (values.empty()) throw std::invalid_argument("cost distribution is empty");
    if (values.size() != weights.size()) throw std::invalid_argument("values and weights differ in length");
    check_alpha(alpha);
    const double var = var_impl(values, weights, alpha, scratch);
    // tail sums in scenario order so both VaR paths give identical results
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] >= var) {
            num += weights[k] * values[k];
            den += weights[k];
        }
    }
    return den > 0.0 ? num / den : var;
}

double cvar_alpha(const CostDistribution& dist, double alpha) {
    dist.validate();
    std::vector<double> scratch;
    return cvar_alpha(dist.values, dist.weights, alpha, scratch);
}

}  // namespace fleetmaint
