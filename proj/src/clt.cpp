#include "hardimer/clt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hardimer/binomial.hpp"
#include "hardimer/closedform.hpp"
#include "hardimer/moments.hpp"

namespace hardimer {

namespace {

double s_scale(int n) { return std::sqrt(6.0 * n) / 9.0; }
double k_scale(int n) { return std::sqrt(2.0 * n) / 3.0; }

double relative_error(double exact, double gauss) { return exact / gauss - 1.0; }

// P(j) for j ~ Binomial(trials, p) with p = 1/3 or 2/3: exact up to the exact
// path limit, log-gamma beyond.
double binomial_third_pmf(int trials, int j, bool two_thirds, const LogBinomial& log_binom) {
  const int successes_weighted = two_thirds ? j : trials - j;  // exponent of 2
  if (trials + 1 <= kExactPathLimit) {
    BigInt num = binom(trials, j);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(successes_weighted));
    Rational q(num, big_pow(3, static_cast<unsigned long>(trials)));
    q.canonicalize();
    return q.get_d();
  }
  return std::exp(log_binom(trials, j) + successes_weighted * std::log(2.0) -
                  trials * std::log(3.0));
}

}  // namespace

void Window::validate() const {
  if (!(std::isfinite(x_bound) && x_bound > 0.0 && std::isfinite(y_bound) && y_bound > 0.0)) {
    throw Error("window bounds must be finite and positive");
  }
}

bool Window::contains(double x, double y) const noexcept {
  return std::abs(x) < x_bound && std::abs(y) < y_bound;
}

NormalizedPoint normalize(int n, double s, double k) {
  if (n < 1) throw Error("N must be at least 1");
  return {(s - 2.0 * n / 9.0) / s_scale(n), (k - 2.0 * n / 3.0) / k_scale(n)};
}

std::pair<double, double> denormalize(int n, double x, double y) {
  if (n < 1) throw Error("N must be at least 1");
  return {2.0 * n / 9.0 + s_scale(n) * x, 2.0 * n / 3.0 + k_scale(n) * y};
}

double limit_correlation() noexcept { return -1.0 / std::numbers::sqrt3; }

Eigen::Matrix2d limit_precision_matrix() {
  const double off = std::numbers::sqrt3 / 3.0;
  Eigen::Matrix2d q;
  q << 1.0, off, off, 1.0;
  return 0.75 * q;
}

Eigen::Matrix2d limit_covariance(int n) {
  const double sd_s = std::sqrt(2.0 * n / 27.0);
  const double sd_k = std::sqrt(2.0 * n / 9.0);
  const double rho = limit_correlation();
  Eigen::Matrix2d c;
  c << sd_s * sd_s, rho * sd_s * sd_k, rho * sd_s * sd_k, sd_k * sd_k;
  return c;
}

double clt_quadratic_form(double x, double y) noexcept {
  return 0.75 * (x * x + (2.0 * std::numbers::sqrt3 / 3.0) * x * y + y * y);
}

double gaussian_joint_mass(int n, double x, double y) {
  if (n < 1) throw Error("N must be at least 1");
  const double two_pi = 2.0 * std::numbers::pi;
  const double det = two_pi * two_pi * (2.0 * n / 27.0) * (2.0 * n / 9.0) * (2.0 / 3.0);
  return std::exp(-clt_quadratic_form(x, y)) / std::sqrt(det);
}

CltReport joint_error_field(const JointPmfGrid& pmf, Window window) {
  window.validate();
  const int n = pmf.n();
  CltReport report;
  report.n = n;
  report.window = window;
  report.exact_source = pmf.exact_source();
  for (int s = 0; s <= pmf.s_max(); ++s) {
    const double x = normalize(n, s, 0).x;
    if (!(std::abs(x) < window.x_bound)) continue;
    for (int k = pmf.k_min(s); k <= pmf.k_max(s); ++k) {
      const NormalizedPoint p = normalize(n, s, k);
      if (!window.contains(p.x, p.y)) continue;
      CltPoint pt{s, k, p.x, p.y, pmf(s, k), gaussian_joint_mass(n, p.x, p.y), 0.0};
      pt.rel_err = relative_error(pt.exact, pt.gauss);
      report.sup_error = std::max(report.sup_error, std::abs(pt.rel_err));
      report.grid.push_back(pt);
    }
  }
  if (report.grid.empty()) {
    throw EmptyWindow("no lattice point of N = " + std::to_string(n) + " lies inside the window");
  }
  report.correlation = grid_moments(pmf).corr_sk;
  return report;
}

CltReport joint_error_field(int n, Window window, PmfPath path) {
  window.validate();
  CltReport report = joint_error_field(pmf_grid(n, path), window);
  if (report.exact_source) report.correlation = exact_moments(n).corr_sk;
  return report;
}

MarginalCltReport marginal_s_clt_error(const JointPmfGrid& pmf, double x_bound) {
  Window{x_bound, 1.0}.validate();
  const int n = pmf.n();
  const std::vector<double> marginal = pmf.marginal_s();
  const double var = 2.0 * n / 27.0;
  MarginalCltReport report;
  report.n = n;
  report.bound = x_bound;
  for (int s = 0; s <= pmf.s_max(); ++s) {
    const double x = normalize(n, s, 0).x;
    if (!(std::abs(x) < x_bound)) continue;
    const double d = s - 2.0 * n / 9.0;
    const double gauss = std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
    MarginalPoint pt{s, x, marginal[static_cast<std::size_t>(s)], gauss, 0.0};
    pt.rel_err = relative_error(pt.exact, pt.gauss);
    report.sup_error = std::max(report.sup_error, std::abs(pt.rel_err));
    report.points.push_back(pt);
  }
  if (report.points.empty()) throw EmptyWindow("no dimer count lies inside |x| < bound");
  return report;
}

MarginalCltReport marginal_s_clt_error(int n, double x_bound, PmfPath path) {
  return marginal_s_clt_error(pmf_grid(n, path), x_bound);
}

MarginalCltReport binomial_clt_error(int n, BinomialMarginal which, double bound) {
  if (n < 2) throw Error("binomial CLT needs N >= 2");
  Window{bound, 1.0}.validate();
  const int trials = n - 1;
  const bool k_marginal = which == BinomialMarginal::K;
  const double p = k_marginal ? 2.0 / 3.0 : 1.0 / 3.0;
  const double mean = p * trials;
  const double var = 2.0 * trials / 9.0;
  const LogBinomial log_binom(trials);

  MarginalCltReport report;
  report.n = n;
  report.bound = bound;
  for (int j = 0; j <= trials; ++j) {
    const double d = j - mean;
    const double z = d / std::sqrt(var);
    if (!(std::abs(z) < bound)) continue;
    const double gauss = std::exp(-d * d / ((4.0 / 9.0) * trials)) /
                         std::sqrt((4.0 / 9.0) * std::numbers::pi * trials);
    const double exact = binomial_third_pmf(trials, j, k_marginal, log_binom);
    MarginalPoint pt{k_marginal ? j + 1 : j, z, exact, gauss, 0.0};
    pt.rel_err = relative_error(exact, gauss);
    report.sup_error = std::max(report.sup_error, std::abs(pt.rel_err));
    report.points.push_back(pt);
  }
  if (report.points.empty()) throw EmptyWindow("no binomial index lies inside the window");
  return report;
}

std::vector<CorrelationPoint> correlation_trace(std::span<const int> ns) {
  std::vector<CorrelationPoint> out;
  out.reserve(ns.size());
  for (int n : ns) {
    CorrelationPoint pt;
    pt.n = n;
    if (n <= kExactPathLimit) {
      pt.rho = exact_moments(n).corr_sk;
      pt.exact = true;
    } else {
      pt.rho = grid_moments(pmf_grid_log_space(n)).corr_sk;
    }
    pt.gap = std::abs(pt.rho - limit_correlation());
    out.push_back(pt);
  }
  return out;
}

}  // namespace hardimer
