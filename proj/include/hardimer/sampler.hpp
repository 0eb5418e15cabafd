#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardimer/core.hpp"
#include "hardimer/numeric.hpp"
#include "hardimer/rng.hpp"

namespace hardimer {

/// Scan state before a site: no dimer open, or a dimer of the given colour
/// open and waiting for its closing site.
enum class SiteState : std::uint8_t { Free = 0, OpenBlue = 1, OpenRed = 2 };

/// What the scan does at one site.
enum class SiteMove : std::uint8_t {
  SingleBlue,
  SingleRed,
  OpenBlue,
  OpenRed,
  Interior,  // opposite colour inside the open dimer
  Close,     // same colour, closes the open dimer
};

/// Exact number of completions of a partial (colouring, configuration) pair,
/// for every position 0..N and scan state. counts(0, Free) = |Omega_N|.
///
/// Transitions per site: Free -> Free (blue or red single point),
/// Free -> Open_c, Open_c -> Open_c (interior), Open_c -> Free (close).
class SuffixCounts {
 public:
  explicit SuffixCounts(int n);

  int n() const noexcept { return n_; }
  const BigInt& at(int position, SiteState state) const;
  const BigInt& total() const { return at(0, SiteState::Free); }

  /// Moves available at (position, state) with their completion counts
  /// divided by the common gcd. Free: 4 moves; Open: Interior, Close.
  struct Branches {
    std::vector<std::pair<SiteMove, BigInt>> moves;
    BigInt total;
    /// Set when every reduced weight fits in 64 bits.
    std::optional<std::vector<std::uint64_t>> small_weights;
    std::uint64_t small_total = 0;
  };
  const Branches& branches(int position, SiteState state) const;

 private:
  int n_;
  std::vector<std::array<BigInt, 3>> counts_;
  std::vector<std::array<Branches, 3>> branches_;
};

SuffixCounts build_suffix_counts(int n);

/// One draw from Omega_N, uniformly.
struct SampledPair {
  ColourSequence sequence;
  DimerConfig config;
};

/// Sequential exact sampler over Omega_N; shares immutable suffix counts.
class UniformSampler {
 public:
  explicit UniformSampler(int n);
  explicit UniformSampler(std::shared_ptr<const SuffixCounts> counts);

  int n() const noexcept { return counts_->n(); }
  const SuffixCounts& counts() const noexcept { return *counts_; }

  SampledPair sample(Rng& rng) const;
  /// Statistics of one draw, without building a DimerConfig.
  ConfigStats sample_stats(Rng& rng) const;

 private:
  template <class OnMove>
  void walk(Rng& rng, OnMove&& on_move) const;

  std::shared_ptr<const SuffixCounts> counts_;
};

SampledPair sample_configuration(int n, Rng& rng);

/// Draws are grouped in fixed-size chunks; chunk c uses derive_seed(seed, c),
/// so results do not depend on the thread count.
inline constexpr std::uint64_t kSampleChunk = 4096;

struct SampleBatch {
  int n = 0;
  std::uint64_t seed = 0;
  std::string rng_algorithm;
  std::uint64_t draws = 0;
  std::vector<ConfigStats> stats;
  /// Present when requested; same order as `stats`.
  std::vector<SampledPair> configs;
};

SampleBatch sample_batch(int n, std::uint64_t m, std::uint64_t seed, bool keep_configs = false,
                         unsigned threads = 0);

/// Relative frequencies of (s, k) over m draws.
struct EmpiricalHistogram {
  int n = 0;
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  std::map<std::pair<int, int>, std::uint64_t> counts;

  double frequency(int s, int k) const;
};

EmpiricalHistogram empirical_joint(int n, std::uint64_t m, std::uint64_t seed, unsigned threads = 0);

/// Pearson correlation of (s, k) from a histogram.
double sample_correlation(const EmpiricalHistogram& hist);

}  // namespace hardimer
