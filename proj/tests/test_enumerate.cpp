#include "doctest.h"

#include <array>
#include <set>

#include "hardimer/closedform.hpp"
#include "hardimer/enumerate.hpp"

using namespace hardimer;

namespace {

// Independent oracle: every subset of same-colour nearest-neighbour edges,
// kept when no two closed intervals share a site.
std::size_t subset_oracle_count(const ColourSequence& seq) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < seq.size(); ++i) {
    for (int j = i + 1; j < seq.size(); ++j) {
      if (seq[j] == seq[i]) {
        edges.emplace_back(i, j);
        break;
      }
    }
  }
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<int> cover(static_cast<std::size_t>(seq.size()), 0);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!((mask >> e) & 1U)) continue;
      for (int x = edges[e].first; x <= edges[e].second; ++x) {
        if (++cover[static_cast<std::size_t>(x)] > 1) ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("hand-enumerated short sequences") {
  const auto bb = ColourSequence::from_string("BB");
  const auto configs = enumerate_hard_dimers(bb);
  REQUIRE(configs.size() == 2);
  CHECK(configs[0].dimers().empty());
  REQUIRE(configs[1].dimers().size() == 1);
  CHECK(configs[1].dimers()[0] == Dimer{0, 1, Colour::Blue});

  const auto br = ColourSequence::from_string("BR");
  CHECK(enumerate_hard_dimers(br).size() == 1);
  CHECK(enumerate_hard_dimers(ColourSequence::from_string("R")).size() == 1);

  CHECK(count_hard_dimers(bb) == 2);
  CHECK(count_hard_dimers(br) == 1);
  CHECK(count_hard_dimers(ColourSequence::from_string("BBBB")) == 5);
  CHECK(count_hard_dimers(ColourSequence::from_string("B")) == 1);
}

TEST_CASE("generating function on small sequences") {
  const Rational u = make_rational(2, 7), v = make_rational(3, 5), w = make_rational(5, 11);
  CHECK(gf_on_sequence(ColourSequence::from_string("BB"), u, v, w) == 1 + u);
  CHECK(gf_on_sequence(ColourSequence::from_string("BRB"), u, v, w) == 1 + u * w);
  const Rational one = 1;
  for (const char* text : {"B", "BR", "BBBB", "RBBRBRRBRBBBR", "BRBRRBBR"}) {
    const auto seq = ColourSequence::from_string(text);
    CHECK(gf_on_sequence(seq, one, one, one) == Rational(count_hard_dimers(seq)));
  }
}

TEST_CASE("enumerator, counter and subset oracle agree") {
  for (int n = 1; n <= 11; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const auto seq = ColourSequence::from_bits(bits, n);
      std::size_t streamed = 0;
      std::set<std::vector<Dimer>> distinct;
      for_each_hard_dimer(seq, [&](std::span<const Dimer> d) {
        ++streamed;
        distinct.emplace(d.begin(), d.end());
        REQUIRE(static_cast<bool>(validate_config(seq, d)));
      });
      REQUIRE(streamed == distinct.size());
      REQUIRE(streamed == subset_oracle_count(seq));
      REQUIRE(count_hard_dimers(seq) == static_cast<unsigned long>(streamed));
    }
  }
}

TEST_CASE("brute-force totals") {
  const auto two = exact_joint_bruteforce(2);
  CHECK(two.total_pairs == 6);
  CHECK(two.by_st.size() == 2);
  CHECK(two.by_st.at({0, 0}) == 4);
  CHECK(two.by_st.at({1, 2}) == 2);
  CHECK(two.by_sk.at({0, 2}) == 4);
  CHECK(two.by_sk.at({1, 1}) == 2);
  CHECK(exact_joint_bruteforce(4).total_pairs == 54);

  for (int n = 1; n <= 14; ++n) {
    const auto summary = exact_joint_bruteforce(n);
    BigInt sum = 0;
    for (const auto& [cell, c] : summary.by_st) sum += c;
    CHECK(summary.total_pairs == sum);
    CHECK(summary.total_pairs == 2 * big_pow(3, static_cast<unsigned long>(n - 1)));
  }
}

TEST_CASE("brute force is independent of the thread count") {
  const auto one = exact_joint_bruteforce(11, {14, 1});
  const auto many = exact_joint_bruteforce(11, {14, 5});
  CHECK(one.by_st == many.by_st);
  CHECK(one.by_sk == many.by_sk);
}

TEST_CASE("cap and range guards") {
  CHECK_THROWS_AS(exact_joint_bruteforce(15), CapExceeded);
  CHECK_THROWS_AS(exact_joint_bruteforce(9, {8, 1}), CapExceeded);
  CHECK_THROWS_AS(exact_joint_bruteforce(0), Error);
}

TEST_CASE("mean generating function over colourings matches the closed form") {
  const std::vector<std::array<Rational, 3>> triples{
      {Rational(1), Rational(1), Rational(1)},
      {make_rational(1, 2), make_rational(3, 4), make_rational(5, 3)},
      {Rational(2), make_rational(1, 3), make_rational(7, 2)},
      {make_rational(9, 5), make_rational(9, 5), make_rational(1, 7)},
  };
  for (int n = 1; n <= 12; ++n) {
    for (const auto& [u, v, w] : triples) {
      Rational sum = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        sum += gf_on_sequence(ColourSequence::from_bits(bits, n), u, v, w);
      }
      sum /= Rational(big_pow(2, static_cast<unsigned long>(n)));
      REQUIRE(sum == averaged_gf(n, u, v, w));
    }
  }
}

TEST_CASE("histogram equals the closed-form joint table") {
  for (int n = 1; n <= 12; ++n) {
    const auto summary = exact_joint_bruteforce(n);
    const JointPmfTable table = joint_pmf_st(n);
    REQUIRE(summary.by_st.size() == table.entries().size());
    for (const auto& [cell, c] : summary.by_st) {
      Rational freq(c, summary.total_pairs);
      freq.canonicalize();
      REQUIRE(freq == table.at(cell.first, cell.second));
    }
  }
}
