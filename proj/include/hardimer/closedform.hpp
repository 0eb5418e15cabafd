#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "hardimer/binomial.hpp"
#include "hardimer/error.hpp"
#include "hardimer/numeric.hpp"

namespace hardimer {

/// Index systems for the joint law of the dimer count s:
///   ST: (s, t), t = sites covered by dimers;
///   SK: (s, k), k = N - t + s = dimers plus single points.
enum class Coords { ST, SK };

std::string_view to_string(Coords c) noexcept;

/// Exact joint pmf over a coordinate system. All probabilities share the
/// denominator 3^{N-1}, so entries are stored as integer numerators; sums
/// are exact integer sums.
class JointPmfTable {
 public:
  struct Entry {
    int first = 0;   // s
    int second = 0;  // t or k
    BigInt numerator;
  };

  JointPmfTable(int n, Coords coords, BigInt denominator, std::vector<Entry> entries);

  int n() const noexcept { return n_; }
  Coords coords() const noexcept { return coords_; }
  const BigInt& denominator() const noexcept { return denominator_; }
  std::span<const Entry> entries() const noexcept { return entries_; }

  /// Zero off the support.
  Rational at(int first, int second) const;
  Rational probability(const Entry& e) const;
  Rational total() const;

  /// Law of s.
  std::map<int, Rational> marginal_first() const;
  /// Law of t (ST) or k (SK).
  std::map<int, Rational> marginal_second() const;

  /// Same law in the other coordinate system.
  JointPmfTable reindexed() const;

 private:
  int n_;
  Coords coords_;
  BigInt denominator_;
  std::vector<Entry> entries_;
};

/// 1 + sum_{t=1}^{N} sum_{s=1}^{t/2} C(N-t+s, s) C(t-s-1, s-1) ((u+v)/4)^s (w/2)^{t-2s}.
Rational averaged_gf(int n, const Rational& u, const Rational& v, const Rational& w);
Rational averaged_gf(int n, const Rational& u, const Rational& v, const Rational& w,
                     const BinomialTable& binomials);

/// C_N = (3/2)^{N-1}.
Rational normalizing_constant(int n);

/// C_N evaluated termwise from the double sum with weights 2^{-(t-s)},
/// independent of the closed form.
Rational normalizing_constant_by_double_sum(int n, const BinomialTable& binomials);

JointPmfTable joint_pmf_st(int n);
JointPmfTable joint_pmf_st(int n, const BinomialTable& binomials);
JointPmfTable joint_pmf_sk(int n);
JointPmfTable joint_pmf_sk(int n, const BinomialTable& binomials);

/// P(k) = C(N-1, k-1) (2/3)^{k-1} (1/3)^{N-k}, 1 <= k <= N.
Rational marginal_k_pmf(int n, int k);
/// P(h) = C(N-1, h) (1/3)^h (2/3)^{N-1-h}, 0 <= h <= N-1.
Rational marginal_h_pmf(int n, int h);
/// P(s) = sum_k P_N(s, k), 0 <= s <= N/2.
Rational marginal_s_pmf(int n, int s);
Rational marginal_s_pmf(int n, int s, const BinomialTable& binomials);

/// Hypergeometric law of s given k: C(k,s) C(N-k-1,s-1) / C(N-1,k-1).
/// k = N is the degenerate law at s = 0; k outside [1, N] throws OutOfSupport.
Rational conditional_s_given_k(int n, int k, int s);
Rational conditional_s_given_k(int n, int k, int s, const BinomialTable& binomials);

}  // namespace hardimer
