#pragma once

#include <span>
#include <vector>

namespace fleetmaint {

/// Weighted discrete cost distribution over scenarios.
struct CostDistribution {
    std::vector<double> values;
    std::vector<double> weights;

    static CostDistribution uniform(std::vector<double> values);
    void validate() const;
};

// Tolerance applied when comparing accumulated weights against alpha, so that
// e.g. ten weights of 0.1 reach 0.9 after nine steps.
inline constexpr double kCumulativeWeightTolerance = 1e-12;

double expected_cost(const CostDistribution& dist);

/// Lower alpha-quantile: smallest support value whose cumulative weight
/// reaches alpha.
double var_alpha(const CostDistribution& dist, double alpha);

/// E[Z | Z >= VaR_alpha(Z)], computed literally on the discrete distribution.
double cvar_alpha(const CostDistribution& dist, double alpha);

/// Span-based form of cvar_alpha for hot loops. `scratch` is reused between
/// calls. Uniform weights take an O(S) selection path; the result is
/// bit-identical to the general path.
double cvar_alpha(std::span<const double> values, std::span<const double> weights, double alpha,
                  std::vector<double>& scratch);

}  // namespace fleetmaint
