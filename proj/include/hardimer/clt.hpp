#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "hardimer/pmf_grid.hpp"

namespace hardimer {

/// Open box (-x_bound, x_bound) x (-y_bound, y_bound) in normalized units.
struct Window {
  double x_bound = 2.0;
  double y_bound = 2.0;

  /// Throws Error unless both bounds are finite and positive.
  void validate() const;
  bool contains(double x, double y) const noexcept;
};

struct NormalizedPoint {
  double x = 0.0;
  double y = 0.0;
};

/// x = (s - 2N/9) / (sqrt(6N)/9), y = (k - 2N/3) / (sqrt(2N)/3).
NormalizedPoint normalize(int n, double s, double k);

/// Inverse of normalize(): s = 2N/9 + sqrt(6N)/9 x, k = 2N/3 + sqrt(2N)/3 y.
std::pair<double, double> denormalize(int n, double x, double y);

/// Limiting correlation of (s, k): -1/sqrt(3).
double limit_correlation() noexcept;

/// Q with x^T Q x = (3/4)(x^2 + (2 sqrt(3)/3) x y + y^2).
Eigen::Matrix2d limit_precision_matrix();

/// Covariance of (s, k) in lattice units under the Gaussian limit:
/// diag(2N/27, 2N/9) with correlation -1/sqrt(3).
Eigen::Matrix2d limit_covariance(int n);

double clt_quadratic_form(double x, double y) noexcept;

/// Gaussian mass the joint local limit assigns to one lattice point.
double gaussian_joint_mass(int n, double x, double y);

struct CltPoint {
  int s = 0;
  int k = 0;
  double x = 0.0;
  double y = 0.0;
  double exact = 0.0;
  double gauss = 0.0;
  /// exact / gauss - 1
  double rel_err = 0.0;
};

struct CltReport {
  int n = 0;
  Window window;
  bool exact_source = false;
  std::vector<CltPoint> grid;
  double sup_error = 0.0;
  double correlation = 0.0;
};

/// Relative error of P_N(s, k) against the Gaussian mass at every lattice
/// point whose image lies strictly inside the window. Throws EmptyWindow.
CltReport joint_error_field(const JointPmfGrid& pmf, Window window = {});
CltReport joint_error_field(int n, Window window = {}, PmfPath path = PmfPath::Auto);

struct MarginalPoint {
  int index = 0;
  double z = 0.0;
  double exact = 0.0;
  double gauss = 0.0;
  double rel_err = 0.0;
};

struct MarginalCltReport {
  int n = 0;
  double bound = 0.0;
  std::vector<MarginalPoint> points;
  double sup_error = 0.0;
};

/// Dimer-count marginal against (2 pi (2/27) N)^{-1/2} exp(-(s - 2N/9)^2 / ((4/27) N)).
MarginalCltReport marginal_s_clt_error(const JointPmfGrid& pmf, double x_bound = 2.0);
MarginalCltReport marginal_s_clt_error(int n, double x_bound = 2.0, PmfPath path = PmfPath::Auto);

enum class BinomialMarginal { K, H };

/// De Moivre-Laplace check of a binomial marginal (variance (2/9)(N-1)):
///   K: k - 1 ~ Binomial(N-1, 2/3), centred at 2(N-1)/3;
///   H: h ~ Binomial(N-1, 1/3), centred at (N-1)/3.
/// Points are indexed by k or h respectively. N >= 2.
MarginalCltReport binomial_clt_error(int n, BinomialMarginal which, double bound = 2.0);

struct CorrelationPoint {
  int n = 0;
  double rho = 0.0;
  /// |rho + 1/sqrt(3)|
  double gap = 0.0;
  bool exact = false;
};

/// Exact correlation of (s, k) from the joint table (exact path up to
/// kExactPathLimit, log-space beyond).
std::vector<CorrelationPoint> correlation_trace(std::span<const int> ns);

}  // namespace hardimer
