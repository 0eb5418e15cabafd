#include "doctest.h"

#include <algorithm>
#include <set>

#include "hardimer/core.hpp"
#include "hardimer/enumerate.hpp"

using namespace hardimer;

namespace {

const char* const kFigureSequence = "RBBRBRRBRBBBR";

std::vector<Dimer> figure_dimers() {
  return {{0, 3, Colour::Red}, {5, 6, Colour::Red}, {7, 9, Colour::Blue}};
}

}  // namespace

TEST_CASE("colour opposite") {
  CHECK(opposite(Colour::Blue) == Colour::Red);
  CHECK(opposite(Colour::Red) == Colour::Blue);
  CHECK(opposite(opposite(Colour::Blue)) == Colour::Blue);
}

TEST_CASE("sequence parsing and rendering") {
  const auto seq = ColourSequence::from_string("bRrB");
  CHECK(seq.size() == 4);
  CHECK(seq[0] == Colour::Blue);
  CHECK(seq[1] == Colour::Red);
  CHECK(seq.to_string() == "BRRB");
  CHECK(seq.recoloured().to_string() == "RBBR");
  CHECK(ColourSequence::from_bits(0b0110, 4) == seq);
  CHECK_THROWS_AS(ColourSequence::from_string(""), Error);
  CHECK_THROWS_AS(ColourSequence::from_string("BXR"), Error);
}

TEST_CASE("thirteen-site example configuration") {
  const auto seq = ColourSequence::from_string(kFigureSequence);
  const auto dimers = figure_dimers();
  CHECK(static_cast<bool>(validate_config(seq, dimers)));

  const DimerConfig config(seq, dimers);
  const ConfigStats st = stats(config);
  CHECK(st == ConfigStats{1, 2, 3, 3, 1});
  CHECK(st.n() == 13);

  const Rational u = make_rational(2, 3), v = make_rational(5, 7), w = make_rational(11, 13);
  CHECK(monomial(config, u, v, w) == u * v * v * w * w * w);
  CHECK(monomial(config, 1.0, 1.0, 1.0) == 1.0);
}

TEST_CASE("empty configurations") {
  const auto blue = ColourSequence::from_string("BBBBB");
  CHECK(static_cast<bool>(validate_config(blue, {})));
  const DimerConfig empty(blue, {});
  CHECK(stats(empty) == ConfigStats{0, 0, 0, 5, 0});
  CHECK(monomial(empty, 3.0, 5.0, 7.0) == 1.0);
  CHECK(static_cast<bool>(validate_config(ColourSequence::from_string(kFigureSequence), {})));
}

TEST_CASE("two blue sites with one dimer") {
  const DimerConfig config(ColourSequence::from_string("BB"), {{0, 1, Colour::Blue}});
  const ConfigStats st = stats(config);
  CHECK(st == ConfigStats{1, 0, 0, 0, 0});
  CHECK(st.s() == 1);
  CHECK(st.t() == 2);
  CHECK(st.k() == 1);
  CHECK(st.h() == 1);
}

TEST_CASE("validation rejects each broken invariant") {
  const auto brb = ColourSequence::from_string("BRB");
  const std::vector<Dimer> degenerate{{0, 2, Colour::Blue}, {1, 1, Colour::Red}};
  const Validation v1 = validate_config(brb, degenerate);
  CHECK(v1.error == ConfigError::StartNotBeforeEnd);
  CHECK(v1.dimer == 1);

  const auto bbb = ColourSequence::from_string("BBB");
  const std::vector<Dimer> far{{0, 2, Colour::Blue}};
  CHECK(validate_config(bbb, far).error == ConfigError::NotNearestSameColour);

  const std::vector<Dimer> wrong_colour{{0, 2, Colour::Red}};
  CHECK(validate_config(brb, wrong_colour).error == ConfigError::EndpointColourMismatch);

  const std::vector<Dimer> outside{{1, 3, Colour::Blue}};
  CHECK(validate_config(bbb, outside).error == ConfigError::IndexOutOfRange);

  const std::vector<Dimer> sharing{{0, 1, Colour::Blue}, {1, 2, Colour::Blue}};
  CHECK(validate_config(bbb, sharing).error == ConfigError::Overlap);

  CHECK_THROWS_AS(DimerConfig(bbb, far), InvalidConfiguration);
  CHECK(!validate_config(bbb, far).message().empty());
}

TEST_CASE("validation sorts before checking overlap") {
  const auto seq = ColourSequence::from_string(kFigureSequence);
  auto dimers = figure_dimers();
  std::reverse(dimers.begin(), dimers.end());
  CHECK(static_cast<bool>(validate_config(seq, dimers)));
  const DimerConfig config(seq, dimers);
  CHECK(config.dimers()[0].start == 0);
}

TEST_CASE("site identity holds on every enumerated configuration") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const auto seq = ColourSequence::from_bits(bits, n);
      for_each_hard_dimer(seq, [&](std::span<const Dimer> dimers) {
        const ConfigStats st = stats(seq, dimers);
        REQUIRE(st.n() == n);
        REQUIRE(st.n_b >= 0);
        REQUIRE(st.gamma_b + st.gamma_r >= 0);
        REQUIRE((st.s() == 0) == (st.t() == 0));
        REQUIRE((st.s() == 0) == (st.h() == 0));
        if (st.s() == 0) REQUIRE(st.k() == n);
      });
    }
  }
}

TEST_CASE("validator accepts exactly the enumerated configurations") {
  // Every dimer list drawn from the candidate edges of a sequence is checked
  // against membership in the enumerator's output.
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const auto seq = ColourSequence::from_bits(bits, n);
      std::set<std::vector<Dimer>> enumerated;
      for_each_hard_dimer(seq, [&](std::span<const Dimer> d) {
        enumerated.emplace(d.begin(), d.end());
      });

      std::vector<Dimer> candidates;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (seq[i] == seq[j]) candidates.push_back({i, j, seq[i]});
        }
      }
      const std::size_t limit = std::min<std::size_t>(candidates.size(), 12);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << limit); ++mask) {
        std::vector<Dimer> chosen;
        for (std::size_t c = 0; c < limit; ++c) {
          if ((mask >> c) & 1U) chosen.push_back(candidates[c]);
        }
        const bool valid = static_cast<bool>(validate_config(seq, chosen));
        REQUIRE(valid == (enumerated.count(chosen) == 1));
      }
    }
  }
}

TEST_CASE("recolouring swaps blue and red statistics") {
  for (int n = 1; n <= 9; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const auto seq = ColourSequence::from_bits(bits, n);
      for (const DimerConfig& config : enumerate_hard_dimers(seq)) {
        const DimerConfig swapped = config.recoloured();
        REQUIRE(static_cast<bool>(validate_config(swapped.sequence(), swapped.dimers())));
        const ConfigStats a = stats(config), b = stats(swapped);
        REQUIRE(a.n_b == b.n_r);
        REQUIRE(a.n_r == b.n_b);
        REQUIRE(a.gamma_b == b.gamma_r);
        REQUIRE(a.gamma_r == b.gamma_b);
        REQUIRE(a.n_br == b.n_br);
      }
    }
  }
}
