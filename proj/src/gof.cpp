#include "hardimer/gof.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "hardimer/error.hpp"

namespace hardimer {

double chi_square_upper_tail(double x, int dof) {
  if (dof < 1) throw Error("chi-square needs at least one degree of freedom");
  if (x <= 0.0) return 1.0;
  if (!std::isfinite(x)) return 0.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * x);
}

GofResult chi_square_gof(std::span<const GofCell> cells, double min_expected) {
  double total = 0.0;
  for (const GofCell& c : cells) total += c.observed;

  struct Group {
    double observed = 0.0;
    double expected = 0.0;
  };
  std::vector<Group> raw;
  raw.reserve(cells.size());
  for (const GofCell& c : cells) raw.push_back({c.observed, c.probability * total});
  std::sort(raw.begin(), raw.end(),
            [](const Group& a, const Group& b) { return a.expected < b.expected; });

  std::vector<Group> groups;
  Group pending;
  bool has_pending = false;
  for (const Group& g : raw) {
    if (g.expected >= min_expected && !has_pending) {
      groups.push_back(g);
      continue;
    }
    pending.observed += g.observed;
    pending.expected += g.expected;
    has_pending = true;
    if (pending.expected >= min_expected) {
      groups.push_back(pending);
      pending = {};
      has_pending = false;
    }
  }
  if (has_pending) {
    if (groups.empty()) {
      groups.push_back(pending);
    } else {
      groups.back().observed += pending.observed;
      groups.back().expected += pending.expected;
    }
  }
  if (groups.size() < 2) {
    throw InsufficientSupport("pooling left " + std::to_string(groups.size()) +
                              " cell(s); need at least 2");
  }

  GofResult result;
  for (const Group& g : groups) {
    const double diff = g.observed - g.expected;
    result.statistic += g.expected > 0.0 ? diff * diff / g.expected
                                         : (g.observed > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  }
  result.cells = static_cast<int>(groups.size());
  result.degrees_of_freedom = result.cells - 1;
  result.p_value = chi_square_upper_tail(result.statistic, result.degrees_of_freedom);
  return result;
}

std::vector<GofCell> gof_cells(const EmpiricalHistogram& hist, const JointPmfTable& table) {
  const JointPmfTable sk = table.coords() == Coords::SK ? table : table.reindexed();
  if (sk.n() != hist.n) throw Error("histogram and table have different N");
  std::map<std::pair<int, int>, GofCell> merged;
  for (const auto& e : sk.entries()) merged[{e.first, e.second}].probability = to_double(sk.probability(e));
  for (const auto& [cell, count] : hist.counts) merged[cell].observed = static_cast<double>(count);
  std::vector<GofCell> out;
  out.reserve(merged.size());
  for (const auto& [cell, c] : merged) out.push_back(c);
  return out;
}

GofResult chi_square_gof(const EmpiricalHistogram& hist, const JointPmfTable& table,
                         double min_expected) {
  const std::vector<GofCell> cells = gof_cells(hist, table);
  return chi_square_gof(cells, min_expected);
}

}  // namespace hardimer
