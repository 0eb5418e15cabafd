#include "hardimer/moments.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hardimer {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double correlation(double cov, double var_a, double var_b) {
  if (var_a <= 0.0 || var_b <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return cov / std::sqrt(var_a * var_b);
}

void require_at_least(int n, int lo) {
  if (n < lo) throw Error("N must be at least " + std::to_string(lo) + ", got " + std::to_string(n));
}

}  // namespace

MomentReport<Rational> exact_moments(int n) { return exact_moments(joint_pmf_st(n)); }

MomentReport<Rational> exact_moments(const JointPmfTable& table) {
  const int n = table.n();
  const bool st = table.coords() == Coords::ST;
  BigInt sum_s = 0, sum_ss = 0, sum_h = 0, sum_hh = 0, sum_k = 0, sum_kk = 0, sum_sk = 0;
  for (const auto& e : table.entries()) {
    const long s = e.first;
    const long t = st ? e.second : n - e.second + e.first;
    const long k = n - t + s;
    const long h = t - s;
    sum_s += e.numerator * s;
    sum_ss += e.numerator * (s * (s - 1));
    sum_h += e.numerator * h;
    sum_hh += e.numerator * (h * (h - 1));
    sum_k += e.numerator * k;
    sum_kk += e.numerator * (k * k);
    sum_sk += e.numerator * (s * k);
  }
  const BigInt& den = table.denominator();

  MomentReport<Rational> r;
  r.n = n;
  r.exact = true;
  r.mean_s = ratio(sum_s, den);
  r.second_factorial_s = ratio(sum_ss, den);
  r.var_s = r.second_factorial_s + r.mean_s - r.mean_s * r.mean_s;
  r.mean_h = ratio(sum_h, den);
  r.second_factorial_h = ratio(sum_hh, den);
  r.var_h = r.second_factorial_h + r.mean_h - r.mean_h * r.mean_h;
  r.mean_k = ratio(sum_k, den);
  r.var_k = ratio(sum_kk, den) - r.mean_k * r.mean_k;
  r.mean_gamma = Rational(n) - r.mean_s - r.mean_h;
  r.cov_sk = ratio(sum_sk, den) - r.mean_s * r.mean_k;
  r.corr_sk = correlation(r.cov_sk.get_d(), r.var_s.get_d(), r.var_k.get_d());
  return r;
}

MomentReport<double> grid_moments(const JointPmfGrid& grid) {
  const int n = grid.n();
  CompensatedSum sum_s, sum_ss, sum_h, sum_hh, sum_k, sum_kk, sum_sk;
  for (int s = 0; s <= grid.s_max(); ++s) {
    for (int k = grid.k_min(s); k <= grid.k_max(s); ++k) {
      const double p = grid(s, k);
      const double h = static_cast<double>(n - k);
      sum_s += s * p;
      sum_ss += static_cast<double>(s) * (s - 1) * p;
      sum_h += h * p;
      sum_hh += h * (h - 1) * p;
      sum_k += k * p;
      sum_kk += static_cast<double>(k) * k * p;
      sum_sk += static_cast<double>(s) * k * p;
    }
  }
  MomentReport<double> r;
  r.n = n;
  r.exact = false;
  r.mean_s = sum_s.value();
  r.second_factorial_s = sum_ss.value();
  r.var_s = r.second_factorial_s + r.mean_s - r.mean_s * r.mean_s;
  r.mean_h = sum_h.value();
  r.second_factorial_h = sum_hh.value();
  r.var_h = r.second_factorial_h + r.mean_h - r.mean_h * r.mean_h;
  r.mean_k = sum_k.value();
  r.var_k = sum_kk.value() - r.mean_k * r.mean_k;
  r.mean_gamma = n - r.mean_s - r.mean_h;
  r.cov_sk = sum_sk.value() - r.mean_s * r.mean_k;
  r.corr_sk = correlation(r.cov_sk, r.var_s, r.var_k);
  return r;
}

Rational asymptotic_mean_s(int n) {
  require_at_least(n, 1);
  return make_rational(2 * n - 1, 9);
}

Rational asymptotic_var_s(int n) {
  require_at_least(n, 1);
  return make_rational(2 * (3 * n + 1), 81);
}

Rational asymptotic_second_factorial_s(int n) {
  require_at_least(n, 1);
  return make_rational(4L * (n - 1) * (n - 3), 81);
}

Rational asymptotic_mean_gamma(int n) {
  require_at_least(n, 1);
  return make_rational(4 * (n + 1), 9);
}

Rational binomial_mean_h(int n) {
  require_at_least(n, 1);
  return make_rational(n - 1, 3);
}

Rational binomial_second_factorial_h(int n) {
  require_at_least(n, 1);
  return make_rational(static_cast<long>(n - 1) * (n - 2), 9);
}

Rational recursion_residual_mean(int n) {
  require_at_least(n, 2);
  return recursion_residual_mean(n, exact_moments(n));
}

Rational recursion_residual_mean(int n, const MomentReport<Rational>& at_n) {
  require_at_least(n, 2);
  const Rational rhs = make_rational(n, 3) - binomial_mean_h(n) + make_rational(2, 3) * binomial_mean_h(n - 1);
  return at_n.mean_s - rhs;
}

Rational recursion_residual_second(int n) {
  require_at_least(n, 3);
  return recursion_residual_second(n, exact_moments(n));
}

Rational recursion_residual_second(int n, const MomentReport<Rational>& at_n) {
  require_at_least(n, 3);
  const Rational four_thirds = make_rational(4, 3);
  const Rational four_ninths = make_rational(4, 9);
  const Rational means = binomial_mean_h(n) - four_thirds * binomial_mean_h(n - 1) +
                         four_ninths * binomial_mean_h(n - 2);
  const Rational factorials = binomial_second_factorial_h(n) -
                              four_thirds * binomial_second_factorial_h(n - 1) +
                              four_ninths * binomial_second_factorial_h(n - 2);
  const Rational rhs =
      make_rational(static_cast<long>(n) * (n - 1), 9) - 2 * (n - 1) * means + factorials;
  return at_n.second_factorial_s - rhs;
}

}  // namespace hardimer
