#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardimer/closedform.hpp"
#include "hardimer/sampler.hpp"

namespace hardimer {

/// One histogram cell: observed count against its exact probability.
struct GofCell {
  double observed = 0.0;
  double probability = 0.0;
};

struct GofResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
  /// Cells left after pooling.
  int cells = 0;
};

/// Pearson chi-square test of observed counts against exact probabilities.
///
/// Cells whose expected count (total * probability) falls below
/// `min_expected` are pooled, smallest first, until every group reaches it.
/// Throws InsufficientSupport when fewer than two groups remain.
GofResult chi_square_gof(std::span<const GofCell> cells, double min_expected = 5.0);

/// Pairs an (s, k) histogram with an exact (s, k) or (s, t) table. Observed
/// cells outside the support are kept with probability zero.
std::vector<GofCell> gof_cells(const EmpiricalHistogram& hist, const JointPmfTable& table);

GofResult chi_square_gof(const EmpiricalHistogram& hist, const JointPmfTable& table,
                         double min_expected = 5.0);

/// Upper tail P(X >= x) of a chi-square law with `dof` degrees of freedom.
double chi_square_upper_tail(double x, int dof);

}  // namespace hardimer
