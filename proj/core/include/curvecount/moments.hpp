#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "curvecount/rational.hpp"
#include "curvecount/surface.hpp"

namespace curvecount {

/// t(a, b) = a(g-2-b) + b(g-2-a) for gaps a, b in [0, g-2].
long long gap_product(int a, int b, int g);

/// Gaps j_i between consecutive letters of a reduced word (length - 1
/// entries) or of a cyclic word (length entries, wrapping around).
std::vector<int> gap_vector(const Surface& surface, std::span<const Letter> word, bool cyclic = false);

/// Conditional expectation of u_k(x, X') over an independent stationary
/// chain X': t(j_1, j_{k-1}) / (g (g-1)^(k-1)). Needs k >= 2 and a reduced
/// prefix of length >= k.
Rational hoeffding_U(const Surface& surface, std::span<const Letter> prefix, std::size_t k);
/// Conditional expectation of v_k: zero for k = 2, equal to U_k otherwise.
Rational hoeffding_V(const Surface& surface, std::span<const Letter> prefix, std::size_t k);

/// S_K = U_2 + sum_{k=3..K} 2 U_k.
Rational partial_kernel_mean(const Surface& surface, std::span<const Letter> prefix, std::size_t K);

/// Moments of a gap, uniform on {0, ..., g-2}, in closed form.
struct GapMoments {
  Rational mean;    // (g-2)/2
  Rational second;  // (g-2)(2g-3)/6
  Rational third;   // (g-2)^2 (g-1)/4
  Rational fourth;  // (g-2)(2g-3)(3g^2-9g+5)/30
  Rational cross;   // E J J' for distinct gaps, (g-2)^2/4
};
GapMoments gap_moments(int g);

struct MomentReport {
  int g = 0;
  int chi = 0;
  Rational kappa;             // chi / (3(2chi - 1))
  Rational kappa_g_form;      // (g-2) / (6(g-1))
  Rational mean_s_infinity;   // (g-2) / (3(g-1)); kappa is half of it
  Rational mean_u2;           // (g-2)(g-3) / (3g(g-1))
  Rational sigma2;            // chi-form: 2chi(2chi^2-2chi+1) / (45(2chi-1)^2 (chi-1))
  Rational sigma2_g_form;     // (g-2)(g^2-2g+2) / (45 g (g-1)^2)
  Rational sigma2_series;     // Var U_2 + closed-form geometric tail of Var(2U_k)
  Rational var_u2;
  Rational var_tail;          // sum_{k>=3} Var(2 U_k)
  std::map<std::size_t, Rational> mean_s_k;       // K -> E S_K
  std::map<std::size_t, Rational> variance_terms; // k -> Var U_k
  std::map<std::size_t, Rational> tail_partial;   // K -> sum_{k=3..K} Var(2U_k)
};

/// Limit constants for the surface; every pair of independent routes is
/// compared exactly and a mismatch throws std::logic_error.
MomentReport limit_constants(int g, std::size_t k_table = 50);
MomentReport limit_constants(const Surface& surface, std::size_t k_table = 50);

/// Exact covariance structure of U_k(shift^i X) computed by averaging over
/// every reduced string long enough to determine them, then compared with
/// the closed forms.
struct CovarianceCheck {
  std::string label;
  Rational expected;
  Rational observed;
  bool ok() const { return expected == observed; }
};

struct UncorrelatedReport {
  int g = 0;
  std::size_t max_shift = 0;
  std::size_t max_k = 0;
  std::size_t strings = 0;
  std::size_t off_diagonal_pairs = 0;
  std::size_t nonzero_off_diagonal = 0;
  std::vector<CovarianceCheck> checks;  // variances and Cases 0-4
  bool ok() const;
};

/// Shifts i range over 0..max_shift, k over 2..max_k.
UncorrelatedReport verify_uncorrelated(const Surface& surface, std::size_t max_shift,
                                       std::size_t max_k);

}  // namespace curvecount
