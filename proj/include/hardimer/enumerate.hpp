#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hardimer/core.hpp"
#include "hardimer/numeric.hpp"

namespace hardimer {

/// For each site, the index of the next site of the same colour, or -1.
std::vector<int> next_same_colour(const ColourSequence& seq);

namespace detail {

template <class Visitor>
void walk_hard_dimers(const ColourSequence& seq, const std::vector<int>& next, int pos,
                      std::vector<Dimer>& placed, Visitor& visit) {
  if (pos >= seq.size()) {
    visit(std::span<const Dimer>(placed));
    return;
  }
  walk_hard_dimers(seq, next, pos + 1, placed, visit);
  // Every site before `pos` is settled, so a dimer opened here cannot hit an
  // earlier one; continuing from end+1 keeps later ones disjoint.
  if (const int end = next[static_cast<std::size_t>(pos)]; end >= 0) {
    placed.push_back(Dimer{pos, end, seq[pos]});
    walk_hard_dimers(seq, next, end + 1, placed, visit);
    placed.pop_back();
  }
}

}  // namespace detail

/// Calls `visit(std::span<const Dimer>)` once per hard-dimer configuration on
/// `seq`, including the empty one. Nothing is materialized.
template <class Visitor>
void for_each_hard_dimer(const ColourSequence& seq, Visitor&& visit) {
  const std::vector<int> next = next_same_colour(seq);
  std::vector<Dimer> placed;
  placed.reserve(static_cast<std::size_t>(seq.size() / 2 + 1));
  detail::walk_hard_dimers(seq, next, 0, placed, visit);
}

std::vector<DimerConfig> enumerate_hard_dimers(const ColourSequence& seq);

/// Number of hard-dimer configurations, by a right-to-left DP over positions.
BigInt count_hard_dimers(const ColourSequence& seq);

/// Z_xi(u, v, w): sum over configurations of u^{n_b} v^{n_r} w^{n_br}.
template <class Scalar>
Scalar gf_on_sequence(const ColourSequence& seq, const Scalar& u, const Scalar& v,
                      const Scalar& w) {
  const std::vector<int> next = next_same_colour(seq);
  const int n = seq.size();
  // suffix[i]: generating function of the suffix starting at site i.
  std::vector<Scalar> suffix(static_cast<std::size_t>(n) + 1, Scalar(0));
  suffix[static_cast<std::size_t>(n)] = 1;
  for (int i = n - 1; i >= 0; --i) {
    Scalar acc = suffix[static_cast<std::size_t>(i) + 1];
    if (const int j = next[static_cast<std::size_t>(i)]; j >= 0) {
      const Scalar& weight = seq[i] == Colour::Blue ? u : v;
      Scalar term = weight * pow_ui(w, static_cast<unsigned long>(j - i - 1));
      term *= suffix[static_cast<std::size_t>(j) + 1];
      acc += term;
    }
    suffix[static_cast<std::size_t>(i)] = acc;
  }
  return suffix[0];
}

/// Exact histograms over all (colouring, configuration) pairs of length N.
struct EnumerationSummary {
  int n = 0;
  BigInt total_pairs;
  std::map<std::pair<int, int>, BigInt> by_st;
  std::map<std::pair<int, int>, BigInt> by_sk;
};

struct BruteforceOptions {
  int cap = 14;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Throws CapExceeded when n > options.cap, Error when n < 1.
EnumerationSummary exact_joint_bruteforce(int n, BruteforceOptions options = {});

}  // namespace hardimer
