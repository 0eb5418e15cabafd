#include "hardimer/closedform.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace hardimer {

namespace {

void require_n(int n) {
  if (n < 1) throw Error("N must be at least 1, got " + std::to_string(n));
}

bool entry_less(const JointPmfTable::Entry& a, const JointPmfTable::Entry& b) {
  return std::pair(a.first, a.second) < std::pair(b.first, b.second);
}

// Numerator of P~_N(s,t) over 3^{N-1}: C(N-t+s,s) C(t-s-1,s-1) 2^{N-1-(t-s)}.
BigInt st_numerator(int n, int s, int t, const BinomialTable& c) {
  if (s == 0) return t == 0 ? big_pow(2, static_cast<unsigned long>(n - 1)) : BigInt(0);
  BigInt out = c(n - t + s, s) * c(t - s - 1, s - 1);
  if (out == 0) return out;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1 - (t - s)));
  return out;
}

// Numerator of P_N(s,k) over 3^{N-1}: C(k,s) C(N-k-1,s-1) 2^{k-1}.
BigInt sk_numerator(int n, int s, int k, const BinomialTable& c) {
  if (s == 0) return k == n ? big_pow(2, static_cast<unsigned long>(n - 1)) : BigInt(0);
  BigInt out = c(k, s) * c(n - k - 1, s - 1);
  if (out == 0) return out;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1));
  return out;
}

Rational over_denominator(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string_view to_string(Coords c) noexcept { return c == Coords::ST ? "st" : "sk"; }

JointPmfTable::JointPmfTable(int n, Coords coords, BigInt denominator, std::vector<Entry> entries)
    : n_(n), coords_(coords), denominator_(std::move(denominator)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), entry_less);
}

Rational JointPmfTable::at(int first, int second) const {
  const Entry key{first, second, BigInt(0)};
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), key, entry_less);
  if (it == entries_.end() || it->first != first || it->second != second) return 0;
  return probability(*it);
}

Rational JointPmfTable::probability(const Entry& e) const {
  return over_denominator(e.numerator, denominator_);
}

Rational JointPmfTable::total() const {
  BigInt sum = 0;
  for (const Entry& e : entries_) sum += e.numerator;
  return over_denominator(sum, denominator_);
}

std::map<int, Rational> JointPmfTable::marginal_first() const {
  std::map<int, BigInt> sums;
  for (const Entry& e : entries_) sums[e.first] += e.numerator;
  std::map<int, Rational> out;
  for (const auto& [key, num] : sums) out.emplace(key, over_denominator(num, denominator_));
  return out;
}

std::map<int, Rational> JointPmfTable::marginal_second() const {
  std::map<int, BigInt> sums;
  for (const Entry& e : entries_) sums[e.second] += e.numerator;
  std::map<int, Rational> out;
  for (const auto& [key, num] : sums) out.emplace(key, over_denominator(num, denominator_));
  return out;
}

JointPmfTable JointPmfTable::reindexed() const {
  // k = N - t + s and t = N - k + s: the map is an involution on the second index.
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back({e.first, n_ - e.second + e.first, e.numerator});
  return JointPmfTable(n_, coords_ == Coords::ST ? Coords::SK : Coords::ST, denominator_,
                       std::move(out));
}

Rational averaged_gf(int n, const Rational& u, const Rational& v, const Rational& w) {
  return averaged_gf(n, u, v, w, BinomialTable(n));
}

Rational averaged_gf(int n, const Rational& u, const Rational& v, const Rational& w,
                     const BinomialTable& c) {
  require_n(n);
  const Rational a = (u + v) / 4;
  const Rational b = w / 2;
  std::vector<Rational> a_pow(static_cast<std::size_t>(n / 2) + 1);
  std::vector<Rational> b_pow(static_cast<std::size_t>(n) + 1);
  a_pow[0] = 1;
  b_pow[0] = 1;
  for (std::size_t i = 1; i < a_pow.size(); ++i) a_pow[i] = a_pow[i - 1] * a;
  for (std::size_t i = 1; i < b_pow.size(); ++i) b_pow[i] = b_pow[i - 1] * b;

  Rational sum = 1;
  for (int t = 1; t <= n; ++t) {
    for (int s = 1; s <= t / 2; ++s) {
      const BigInt coeff = c(n - t + s, s) * c(t - s - 1, s - 1);
      sum += Rational(coeff) * a_pow[static_cast<std::size_t>(s)] *
             b_pow[static_cast<std::size_t>(t - 2 * s)];
    }
  }
  sum.canonicalize();
  return sum;
}

Rational normalizing_constant(int n) {
  require_n(n);
  return over_denominator(big_pow(3, static_cast<unsigned long>(n - 1)),
                          big_pow(2, static_cast<unsigned long>(n - 1)));
}

Rational normalizing_constant_by_double_sum(int n, const BinomialTable& c) {
  require_n(n);
  // Every weight 2^{-(t-s)} has t - s <= N - 1, so 2^{N-1} clears them all.
  BigInt numerator = big_pow(2, static_cast<unsigned long>(n - 1));
  for (int t = 1; t <= n; ++t) {
    for (int s = 1; s <= t / 2; ++s) {
      BigInt term = c(n - t + s, s) * c(t - s - 1, s - 1);
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1 - (t - s)));
      numerator += term;
    }
  }
  return over_denominator(numerator, big_pow(2, static_cast<unsigned long>(n - 1)));
}

JointPmfTable joint_pmf_st(int n) { return joint_pmf_st(n, BinomialTable(n)); }

JointPmfTable joint_pmf_st(int n, const BinomialTable& c) {
  require_n(n);
  std::vector<JointPmfTable::Entry> entries;
  entries.push_back({0, 0, st_numerator(n, 0, 0, c)});
  for (int t = 2; t <= n; ++t) {
    for (int s = 1; s <= t / 2; ++s) entries.push_back({s, t, st_numerator(n, s, t, c)});
  }
  return JointPmfTable(n, Coords::ST, big_pow(3, static_cast<unsigned long>(n - 1)),
                       std::move(entries));
}

JointPmfTable joint_pmf_sk(int n) { return joint_pmf_sk(n, BinomialTable(n)); }

JointPmfTable joint_pmf_sk(int n, const BinomialTable& c) {
  require_n(n);
  std::vector<JointPmfTable::Entry> entries;
  entries.push_back({0, n, sk_numerator(n, 0, n, c)});
  for (int s = 1; s <= n / 2; ++s) {
    for (int k = s; k <= n - s; ++k) entries.push_back({s, k, sk_numerator(n, s, k, c)});
  }
  return JointPmfTable(n, Coords::SK, big_pow(3, static_cast<unsigned long>(n - 1)),
                       std::move(entries));
}

Rational marginal_k_pmf(int n, int k) {
  require_n(n);
  if (k < 1 || k > n) {
    throw OutOfSupport("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  BigInt num = binom(n - 1, k - 1);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1));
  return over_denominator(num, big_pow(3, static_cast<unsigned long>(n - 1)));
}

Rational marginal_h_pmf(int n, int h) {
  require_n(n);
  if (h < 0 || h > n - 1) {
    throw OutOfSupport("h = " + std::to_string(h) + " outside [0, " + std::to_string(n - 1) + "]");
  }
  BigInt num = binom(n - 1, h);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1 - h));
  return over_denominator(num, big_pow(3, static_cast<unsigned long>(n - 1)));
}

Rational marginal_s_pmf(int n, int s) { return marginal_s_pmf(n, s, BinomialTable(n)); }

Rational marginal_s_pmf(int n, int s, const BinomialTable& c) {
  require_n(n);
  if (s < 0 || s > n / 2) {
    throw OutOfSupport("s = " + std::to_string(s) + " outside [0, " + std::to_string(n / 2) + "]");
  }
  BigInt num = 0;
  if (s == 0) {
    num = sk_numerator(n, 0, n, c);
  } else {
    for (int k = s; k <= n - s; ++k) num += sk_numerator(n, s, k, c);
  }
  return over_denominator(num, big_pow(3, static_cast<unsigned long>(n - 1)));
}

Rational conditional_s_given_k(int n, int k, int s) {
  return conditional_s_given_k(n, k, s, BinomialTable(n));
}

Rational conditional_s_given_k(int n, int k, int s, const BinomialTable& c) {
  require_n(n);
  if (k < 1 || k > n) {
    throw OutOfSupport("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  if (k == n) return s == 0 ? Rational(1) : Rational(0);
  if (s < 1) return 0;
  return over_denominator(c(k, s) * c(n - k - 1, s - 1), c(n - 1, k - 1));
}

}  // namespace hardimer
