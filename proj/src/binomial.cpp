#include "hardimer/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardimer/error.hpp"

namespace hardimer {

BigInt binom(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

BinomialTable::BinomialTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw Error("binomial table size must be non-negative");
  const int rows = std::min(max_n, kCachedRows);
  rows_.reserve(static_cast<std::size_t>(rows) + 1);
  rows_.push_back({BigInt(1)});
  for (int n = 1; n <= rows; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row.front() = 1;
    row.back() = 1;
    for (int r = 1; r < n; ++r) {
      row[static_cast<std::size_t>(r)] =
          prev[static_cast<std::size_t>(r) - 1] + prev[static_cast<std::size_t>(r)];
    }
    rows_.push_back(std::move(row));
  }
}

BigInt BinomialTable::operator()(long n, long r) const {
  if (n < 0 || r < 0 || r > n) return 0;
  if (n <= cached_rows()) return cached(static_cast<int>(n), static_cast<int>(r));
  return binom(n, r);
}

std::vector<BigInt> binomial_row(int n) {
  if (n < 0) return {};
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int r = 0; r < n; ++r) {
    row[static_cast<std::size_t>(r) + 1] = row[static_cast<std::size_t>(r)] * (n - r) / (r + 1);
  }
  return row;
}

LogBinomial::LogBinomial(int max_n) {
  log_factorial_.resize(static_cast<std::size_t>(std::max(max_n, 0)) + 1);
  for (std::size_t i = 0; i < log_factorial_.size(); ++i) {
    log_factorial_[i] = std::lgamma(static_cast<double>(i) + 1.0);
  }
}

double LogBinomial::operator()(long n, long r) const {
  if (n < 0 || r < 0 || r > n) return -std::numeric_limits<double>::infinity();
  const auto at = [this](long i) { return log_factorial_.at(static_cast<std::size_t>(i)); };
  return at(n) - at(r) - at(n - r);
}

}  // namespace hardimer
