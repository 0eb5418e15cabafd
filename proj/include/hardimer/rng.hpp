#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "hardimer/numeric.hpp"

namespace hardimer {

/// Engine used for all sampling. mt19937_64's output sequence is fixed by the
/// C++ standard, so seeded runs reproduce across toolchains.
using Rng = std::mt19937_64;

/// Recorded in batch metadata and run manifests.
inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; chunk seed = splitmix64(seed + chunk * golden); bounded draw = rejection";

/// One step of SplitMix64.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for an independent stream identified by `chunk`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t chunk) noexcept;

/// Uniform integer in [0, bound), bound >= 1, by rejection (no modulo bias).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform big integer in [0, bound), bound >= 1, by limb-wise rejection.
BigInt uniform_below(Rng& rng, const BigInt& bound);

}  // namespace hardimer
