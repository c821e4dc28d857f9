#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace curvecount {

/// Standard normal CDF, computed as erfc(-x/sqrt 2)/2 (libm erfc, accurate
/// to a few ulp, well inside 1e-7).
double normal_cdf(double x);

/// Kolmogorov-Smirnov distance sup |F_emp - Phi| of a sample against the
/// standard normal. Throws std::invalid_argument on an empty sample.
double ks_statistic(std::span<const double> values);

struct SampleMoments {
  double mean = 0;
  double variance = 0;  // unbiased; 0 for a single value
};
SampleMoments sample_moments(std::span<const double> values);

struct ChiSquareResult {
  double statistic = 0;
  int dof = 0;
  double p_value = 1;
  bool passes(double significance) const { return p_value >= significance; }
};

/// Goodness of fit of observed counts against cell probabilities. Cells
/// with expected count below `min_expected` are pooled into one cell.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed,
                                std::span<const double> probabilities, double min_expected = 5.0);

/// Goodness of fit against the uniform law on all cells.
ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> observed);

}  // namespace curvecount
