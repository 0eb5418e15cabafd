#pragma once

#include <cmath>
#include <vector>

#include "hardimer/closedform.hpp"

namespace hardimer {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

enum class PmfPath { Exact, LogSpace, Auto };

/// Largest N for which PmfPath::Auto selects the exact-rational path.
inline constexpr int kExactPathLimit = 500;

/// Floating-point view of P_N(s, k). Row s covers k in [s, N - s]; row 0 is
/// the single atom at k = N.
class JointPmfGrid {
 public:
  JointPmfGrid(int n, bool exact_source, std::vector<std::vector<double>> rows);

  int n() const noexcept { return n_; }
  bool exact_source() const noexcept { return exact_source_; }
  int s_max() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  int k_min(int s) const noexcept { return s == 0 ? n_ : s; }
  int k_max(int s) const noexcept { return s == 0 ? n_ : n_ - s; }

  /// Zero off the support.
  double operator()(int s, int k) const noexcept;

  std::vector<double> marginal_s() const;
  /// Indexed by k in [0, N]; entry 0 is always zero.
  std::vector<double> marginal_k() const;
  double total() const;

 private:
  int n_;
  bool exact_source_;
  std::vector<std::vector<double>> rows_;
};

/// log P_N(s, k) with log-gamma binomials; -inf off the support.
double log_joint_pmf_sk(int n, int s, int k, const LogBinomial& log_binom);

JointPmfGrid pmf_grid_log_space(int n);
JointPmfGrid pmf_grid_exact(int n);
JointPmfGrid to_grid(const JointPmfTable& table);
JointPmfGrid pmf_grid(int n, PmfPath path = PmfPath::Auto);

}  // namespace hardimer
