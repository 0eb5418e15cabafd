#pragma once

#include "hardimer/closedform.hpp"
#include "hardimer/numeric.hpp"
#include "hardimer/pmf_grid.hpp"

namespace hardimer {

/// First two moments of the dimer count s, the total dimer length h and the
/// single-point count gamma, plus the (s, k) covariance.
///
/// Scalar is Rational on the exact path and double on the log-space path.
/// The identities var_s = second_factorial_s + mean_s - mean_s^2 and
/// mean_gamma = N - mean_s - mean_h hold exactly when Scalar is Rational.
template <class Scalar>
struct MomentReport {
  int n = 0;
  bool exact = false;
  Scalar mean_s{};
  Scalar second_factorial_s{};
  Scalar var_s{};
  Scalar mean_h{};
  Scalar second_factorial_h{};
  Scalar var_h{};
  Scalar mean_k{};
  Scalar var_k{};
  Scalar mean_gamma{};
  Scalar cov_sk{};
  double corr_sk = 0.0;
};

/// Moments summed over the exact (s, t) table.
MomentReport<Rational> exact_moments(int n);
MomentReport<Rational> exact_moments(const JointPmfTable& table);

/// Moments summed over a floating grid with compensated sums.
MomentReport<double> grid_moments(const JointPmfGrid& grid);

Rational asymptotic_mean_s(int n);
Rational asymptotic_var_s(int n);
Rational asymptotic_second_factorial_s(int n);
Rational asymptotic_mean_gamma(int n);

/// Binomial(N-1, 1/3) closed forms for the total dimer length h.
Rational binomial_mean_h(int n);
Rational binomial_second_factorial_h(int n);

/// E_N(s) - [N/3 - E_N(h) + (2/3) E_{N-1}(h)] with E_M(h) = (M-1)/3. N >= 2.
Rational recursion_residual_mean(int n);
Rational recursion_residual_mean(int n, const MomentReport<Rational>& at_n);

/// Residual of the second-factorial-moment recursion for s, with the h moments
/// of sizes N, N-1, N-2 taken from their binomial closed forms. N >= 3.
Rational recursion_residual_second(int n);
Rational recursion_residual_second(int n, const MomentReport<Rational>& at_n);

}  // namespace hardimer
