#pragma once

#include <cstdint>
#include <random>

namespace fleetmaint {

using RngStream = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Substream derivation rule (fixed for reproducibility):
//   key = mix64(mix64(mix64(seed) ^ domain) + a) + b
//   stream = mt19937_64(mix64(key))
// with domain tags below. Scenario cells use (a, b) = (asset index, scenario
// index); fleet generation uses (0, 0).
inline constexpr std::uint64_t kScenarioDomain = 0x5343454e4152494fULL;  // "SCENARIO"
inline constexpr std::uint64_t kFleetDomain = 0x464c454554474e00ULL;     // "FLEETGN"

constexpr std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t domain,
                                           std::uint64_t a, std::uint64_t b) {
    std::uint64_t key = mix64(mix64(mix64(seed) ^ domain) + a) + b;
    return mix64(key);
}

inline RngStream make_stream(std::uint64_t seed, std::uint64_t domain, std::uint64_t a,
                             std::uint64_t b) {
    return RngStream{derive_stream_seed(seed, domain, a, b)};
}

/// Gamma draw with the given mean and coefficient of variation
/// (shape 1/cv^2, scale mean*cv^2). cv == 0 returns `mean` exactly.
double sample_gamma(double mean, double cv, RngStream& rng);

/// Normal(mu, sigma^2) conditioned on value >= lower. sigma == 0 returns mu.
double sample_truncated_normal(double mu, double sigma, double lower, RngStream& rng);

}  // namespace fleetmaint
