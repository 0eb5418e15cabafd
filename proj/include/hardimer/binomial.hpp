#pragma once

#include <vector>

#include "hardimer/numeric.hpp"

namespace hardimer {

/// C(n, r); zero when r < 0, r > n or n < 0.
BigInt binom(long n, long r);

/// Pascal triangle of exact binomials, built once and read-only afterwards.
///
/// Rows up to `kCachedRows` are stored; larger n fall back to direct
/// evaluation per call, which keeps memory at O(min(N, kCachedRows)^2).
class BinomialTable {
 public:
  static constexpr int kCachedRows = 2000;

  explicit BinomialTable(int max_n);

  int max_n() const noexcept { return max_n_; }

  /// Same conventions as binom(). Returns by value for uncached rows.
  BigInt operator()(long n, long r) const;

  /// Reference into the cache; n must be <= cached rows and 0 <= r <= n.
  const BigInt& cached(int n, int r) const {
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
  }
  int cached_rows() const noexcept { return static_cast<int>(rows_.size()) - 1; }

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> rows_;
};

/// One full row C(n, 0..n), computed multiplicatively without a cache.
std::vector<BigInt> binomial_row(int n);

/// log C(n, r) from a log-factorial table; -inf outside the support.
class LogBinomial {
 public:
  explicit LogBinomial(int max_n);
  double operator()(long n, long r) const;

 private:
  std::vector<double> log_factorial_;
};

}  // namespace hardimer
