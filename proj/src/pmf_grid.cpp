#include "hardimer/pmf_grid.hpp"

#include <limits>
#include <string>
#include <utility>

namespace hardimer {

JointPmfGrid::JointPmfGrid(int n, bool exact_source, std::vector<std::vector<double>> rows)
    : n_(n), exact_source_(exact_source), rows_(std::move(rows)) {
  if (n_ < 1) throw Error("N must be at least 1");
  if (rows_.size() != static_cast<std::size_t>(n_ / 2) + 1) throw Error("grid has wrong row count");
  for (int s = 0; s <= s_max(); ++s) {
    if (rows_[static_cast<std::size_t>(s)].size() != static_cast<std::size_t>(k_max(s) - k_min(s) + 1)) {
      throw Error("grid row " + std::to_string(s) + " has wrong width");
    }
  }
}

double JointPmfGrid::operator()(int s, int k) const noexcept {
  if (s < 0 || s > s_max() || k < k_min(s) || k > k_max(s)) return 0.0;
  return rows_[static_cast<std::size_t>(s)][static_cast<std::size_t>(k - k_min(s))];
}

std::vector<double> JointPmfGrid::marginal_s() const {
  std::vector<double> out(rows_.size());
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    CompensatedSum acc;
    for (double p : rows_[s]) acc += p;
    out[s] = acc.value();
  }
  return out;
}

std::vector<double> JointPmfGrid::marginal_k() const {
  std::vector<CompensatedSum> acc(static_cast<std::size_t>(n_) + 1);
  for (int s = 0; s <= s_max(); ++s) {
    for (int k = k_min(s); k <= k_max(s); ++k) acc[static_cast<std::size_t>(k)] += (*this)(s, k);
  }
  std::vector<double> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = acc[k].value();
  return out;
}

double JointPmfGrid::total() const {
  CompensatedSum acc;
  for (const auto& row : rows_) {
    for (double p : row) acc += p;
  }
  return acc.value();
}

double log_joint_pmf_sk(int n, int s, int k, const LogBinomial& log_binom) {
  static const double log_two_thirds = std::log(2.0 / 3.0);
  static const double log_third = std::log(1.0 / 3.0);
  if (s == 0) {
    return k == n ? (n - 1) * log_two_thirds : -std::numeric_limits<double>::infinity();
  }
  return log_binom(k, s) + log_binom(n - k - 1, s - 1) + (k - 1) * log_two_thirds +
         (n - k) * log_third;
}

JointPmfGrid pmf_grid_log_space(int n) {
  if (n < 1) throw Error("N must be at least 1");
  const LogBinomial log_binom(n);
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n / 2) + 1);
  rows[0] = {std::exp(log_joint_pmf_sk(n, 0, n, log_binom))};
  for (int s = 1; s <= n / 2; ++s) {
    auto& row = rows[static_cast<std::size_t>(s)];
    row.reserve(static_cast<std::size_t>(n - 2 * s + 1));
    for (int k = s; k <= n - s; ++k) row.push_back(std::exp(log_joint_pmf_sk(n, s, k, log_binom)));
  }
  return JointPmfGrid(n, false, std::move(rows));
}

JointPmfGrid to_grid(const JointPmfTable& table) {
  const JointPmfTable sk = table.coords() == Coords::SK ? table : table.reindexed();
  const int n = sk.n();
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n / 2) + 1);
  rows[0].assign(1, 0.0);
  for (int s = 1; s <= n / 2; ++s) rows[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(n - 2 * s + 1), 0.0);
  for (const auto& e : sk.entries()) {
    const int k_lo = e.first == 0 ? n : e.first;
    rows[static_cast<std::size_t>(e.first)][static_cast<std::size_t>(e.second - k_lo)] =
        to_double(sk.probability(e));
  }
  return JointPmfGrid(n, true, std::move(rows));
}

JointPmfGrid pmf_grid_exact(int n) { return to_grid(joint_pmf_sk(n)); }

JointPmfGrid pmf_grid(int n, PmfPath path) {
  if (path == PmfPath::Auto) path = n <= kExactPathLimit ? PmfPath::Exact : PmfPath::LogSpace;
  return path == PmfPath::Exact ? pmf_grid_exact(n) : pmf_grid_log_space(n);
}

}  // namespace hardimer
