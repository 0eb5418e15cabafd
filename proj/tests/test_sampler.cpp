#include "doctest.h"

#include <cmath>
#include <map>
#include <string>

#include "hardimer/closedform.hpp"
#include "hardimer/gof.hpp"
#include "hardimer/rng.hpp"
#include "hardimer/sampler.hpp"

using namespace hardimer;

namespace {

std::string key(const SampledPair& p) {
  std::string out = p.sequence.to_string();
  for (const Dimer& d : p.config.dimers()) {
    out += ' ' + std::to_string(d.start) + '-' + std::to_string(d.end);
  }
  return out;
}

}  // namespace

TEST_CASE("suffix count boundary values") {
  for (int n : {1, 2, 3, 14, 100}) {
    const SuffixCounts counts(n);
    CHECK(counts.at(n, SiteState::Free) == 1);
    CHECK(counts.at(n, SiteState::OpenBlue) == 0);
    CHECK(counts.at(n, SiteState::OpenRed) == 0);
    CHECK(counts.total() == 2 * big_pow(3, static_cast<unsigned long>(n - 1)));
  }
  CHECK(build_suffix_counts(1).total() == 2);
  CHECK(build_suffix_counts(2).total() == 6);
  CHECK(build_suffix_counts(14).total() == 3188646);
  CHECK_THROWS_AS(SuffixCounts(0), Error);
}

TEST_CASE("suffix totals match the pair count up to N = 2000") {
  for (int n = 1; n <= 2000; n += (n < 50 ? 1 : 97)) {
    REQUIRE(SuffixCounts(n).total() == 2 * big_pow(3, static_cast<unsigned long>(n - 1)));
  }
  REQUIRE(SuffixCounts(2000).total() == 2 * big_pow(3, 1999));
}

TEST_CASE("branch weights are proportional to completion counts") {
  const SuffixCounts counts(9);
  for (int pos = 0; pos < 9; ++pos) {
    for (SiteState st : {SiteState::Free, SiteState::OpenBlue, SiteState::OpenRed}) {
      const auto& b = counts.branches(pos, st);
      BigInt sum = 0;
      for (const auto& [move, w] : b.moves) sum += w;
      REQUIRE(sum == b.total);
      if (b.small_weights) REQUIRE(b.small_total == b.total.get_ui());
    }
  }
}

TEST_CASE("bounded uniform draws") {
  Rng rng(42);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) ++hits[uniform_below(rng, std::uint64_t{7})];
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);

  const BigInt bound = big_pow(3, 80) + 17;
  for (int i = 0; i < 2000; ++i) {
    const BigInt x = uniform_below(rng, bound);
    REQUIRE(x >= 0);
    REQUIRE(x < bound);
  }
  CHECK(uniform_below(rng, BigInt(1)) == 0);
  CHECK(derive_seed(5, 0) != derive_seed(5, 1));
}

TEST_CASE("single site draws") {
  Rng rng(7);
  int blue = 0;
  const int m = 100000;
  for (int i = 0; i < m; ++i) {
    const SampledPair p = sample_configuration(1, rng);
    REQUIRE(p.config.dimers().empty());
    if (p.sequence[0] == Colour::Blue) ++blue;
  }
  CHECK(std::abs(blue / double(m) - 0.5) < 5 * std::sqrt(0.25 / m));
}

TEST_CASE("two-site dimer frequency") {
  const auto hist = empirical_joint(2, 100000, 11);
  CHECK(std::abs(hist.frequency(1, 1) - 1.0 / 3.0) < 0.01);
  CHECK(hist.frequency(0, 2) + hist.frequency(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("four-site uniformity over all 54 pairs") {
  const std::uint64_t m = 1000000;
  const auto batch = sample_batch(4, m, 2024, true);
  std::map<std::string, std::uint64_t> counts;
  for (const SampledPair& p : batch.configs) ++counts[key(p)];
  REQUIRE(counts.size() == 54);
  const double p = 1.0 / 54.0;
  const double se = std::sqrt(p * (1 - p) / m);
  for (const auto& [k, c] : counts) {
    INFO(k);
    CHECK(std::abs(c / double(m) - p) < 5 * se);
  }
}

TEST_CASE("every sampled configuration validates") {
  for (auto [n, m] : {std::pair{5, 40000}, std::pair{50, 40000}, std::pair{500, 20000}}) {
    const auto batch = sample_batch(n, static_cast<std::uint64_t>(m), 99 + n, true);
    REQUIRE(batch.configs.size() == static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < batch.configs.size(); ++i) {
      const SampledPair& p = batch.configs[i];
      REQUIRE(static_cast<bool>(validate_config(p.sequence, p.config.dimers())));
      REQUIRE(stats(p.config) == batch.stats[i]);
    }
  }
}

TEST_CASE("batches are reproducible and thread independent") {
  const auto a = sample_batch(37, 20000, 5, false, 1);
  const auto b = sample_batch(37, 20000, 5, false, 4);
  const auto c = sample_batch(37, 20000, 6, false, 1);
  CHECK(a.stats == b.stats);
  CHECK(a.stats != c.stats);
  CHECK(a.rng_algorithm == std::string(kRngAlgorithm));
  CHECK(empirical_joint(37, 20000, 5, 1).counts == empirical_joint(37, 20000, 5, 3).counts);

  Rng r1(3), r2(3);
  const UniformSampler sampler(25);
  for (int i = 0; i < 200; ++i) REQUIRE(stats(sampler.sample(r1).config) == sampler.sample_stats(r2));
}

TEST_CASE("histogram basics") {
  const auto one = empirical_joint(12, 1, 8);
  CHECK(one.counts.size() == 1);
  CHECK(one.counts.begin()->second == 1);
  const auto hist = empirical_joint(12, 5000, 8);
  double total = 0;
  for (const auto& [cell, c] : hist.counts) total += hist.frequency(cell.first, cell.second);
  CHECK(total == doctest::Approx(1.0));
  CHECK_THROWS_AS(empirical_joint(12, 0, 8), Error);
}

TEST_CASE("chi-square agreement at N = 10") {
  const JointPmfTable table = joint_pmf_sk(10);
  for (std::uint64_t seed : {1, 2, 3}) {
    const GofResult r = chi_square_gof(empirical_joint(10, 100000, seed), table);
    INFO("seed " << seed << " statistic " << r.statistic << " dof " << r.degrees_of_freedom);
    CHECK(r.degrees_of_freedom > 5);
    CHECK(r.p_value > 1e-3);
  }
  const GofResult via_st = chi_square_gof(empirical_joint(10, 100000, 1), joint_pmf_st(10));
  CHECK(via_st.p_value == doctest::Approx(chi_square_gof(empirical_joint(10, 100000, 1), table).p_value));
}
