#include "curvecount/moments.hpp"

#include <stdexcept>

#include "curvecount/errors.hpp"
#include "curvecount/word.hpp"

namespace curvecount {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("moment identity failed: ") + what);
}

Rational kernel_scale(int g, std::size_t k) {
  // g (g-1)^(k-1)
  return Rational(BigInt(g) * big_pow(BigInt(g - 1), static_cast<unsigned>(k - 1)));
}

}  // namespace

long long gap_product(int a, int b, int g) {
  if (a < 0 || b < 0 || a > g - 2 || b > g - 2) {
    throw InputError("gap out of range [0, g-2]");
  }
  return static_cast<long long>(a) * (g - 2 - b) + static_cast<long long>(b) * (g - 2 - a);
}

std::vector<int> gap_vector(const Surface& surface, std::span<const Letter> word, bool cyclic) {
  std::vector<int> j;
  const std::size_t n = word.size();
  if (n == 0) return j;
  const std::size_t count = cyclic ? n : n - 1;
  j.reserve(count);
  for (std::size_t i = 0; i < count; ++i) j.push_back(gap(surface, word[i], word[(i + 1) % n]));
  return j;
}

Rational hoeffding_U(const Surface& surface, std::span<const Letter> prefix, std::size_t k) {
  if (k < 2) throw InputError("hoeffding_U needs k >= 2");
  if (prefix.size() < k) throw InputError("prefix shorter than k");
  if (!is_reduced(surface, prefix.first(k))) throw InputError("prefix is not reduced");
  const int g = surface.size();
  const int j1 = gap(surface, prefix[0], prefix[1]);
  const int jk = gap(surface, prefix[k - 2], prefix[k - 1]);
  return Rational(gap_product(j1, jk, g)) / kernel_scale(g, k);
}

Rational hoeffding_V(const Surface& surface, std::span<const Letter> prefix, std::size_t k) {
  if (k == 2) {
    if (prefix.size() < 2) throw InputError("prefix shorter than k");
    return 0;
  }
  return hoeffding_U(surface, prefix, k);
}

Rational partial_kernel_mean(const Surface& surface, std::span<const Letter> prefix, std::size_t K) {
  Rational s = hoeffding_U(surface, prefix, 2);
  for (std::size_t k = 3; k <= K; ++k) s += 2 * hoeffding_U(surface, prefix, k);
  return s;
}

GapMoments gap_moments(int g) {
  if (g < 4 || g % 2 != 0) throw InputError("gap_moments needs even g >= 4");
  const Rational G(g);
  GapMoments m;
  m.mean = (G - 2) / 2;
  m.second = (G - 2) * (2 * G - 3) / 6;
  m.third = (G - 2) * (G - 2) * (G - 1) / 4;
  m.fourth = (G - 2) * (2 * G - 3) * (3 * G * G - 9 * G + 5) / 30;
  m.cross = m.mean * m.mean;
  return m;
}

MomentReport limit_constants(int g, std::size_t k_table) {
  if (g < 4 || g % 2 != 0) throw InputError("limit_constants needs even g >= 4");
  if (k_table < 3) k_table = 3;
  const Rational G(g);
  const int chi = 1 - g / 2;
  const Rational X(chi);
  const GapMoments mom = gap_moments(g);

  MomentReport r;
  r.g = g;
  r.chi = chi;
  r.kappa = X / (3 * (2 * X - 1));
  r.kappa_g_form = (G - 2) / (6 * (G - 1));
  require(r.kappa == r.kappa_g_form, "kappa chi-form vs g-form");

  // E U_2 through the gap moments, against its closed form.
  const Rational et11 = 2 * (G - 2) * mom.mean - 2 * mom.second;  // E t(J, J)
  r.mean_u2 = et11 / (G * (G - 1));
  require(r.mean_u2 == (G - 2) * (G - 3) / (3 * G * (G - 1)), "E U_2");
  const Rational et12 = 2 * ((G - 2) * mom.mean - mom.cross);  // E t(J, J')
  require(et12 == (G - 2) * (G - 2) / 2, "E t(J1, Jk)");

  // E S_K tables and the closed-form infinite sum.
  Rational s = r.mean_u2;
  r.mean_s_k[2] = s;
  for (std::size_t k = 3; k <= k_table; ++k) {
    s += 2 * et12 / kernel_scale(g, k);
    r.mean_s_k[k] = s;
  }
  // sum_{k>=3} 2 E t / (g (g-1)^(k-1)) = (g-2)/(g(g-1)).
  r.mean_s_infinity = r.mean_u2 + (G - 2) / (G * (G - 1));
  require(r.mean_s_infinity == (G - 2) / (3 * (G - 1)), "E S_infinity");
  require(r.kappa * 2 == r.mean_s_infinity, "kappa = E S_infinity / 2");
  require(s < r.mean_s_infinity, "partial means below the limit");

  // Variances. Var t(J, J) from moments vs the closed form.
  const Rational et11_sq =
      4 * ((G - 2) * (G - 2) * mom.second - 2 * (G - 2) * mom.third + mom.fourth);
  const Rational var_t11 = et11_sq - et11 * et11;
  require(var_t11 == G * (G - 2) * (G - 3) * (G + 1) / 45, "Var t(J1, J1)");
  r.var_u2 = var_t11 / ((G * (G - 1)) * (G * (G - 1)));
  require(r.var_u2 == (G - 2) * (G - 3) * (G + 1) / (45 * G * (G - 1) * (G - 1)), "Var U_2");

  const Rational et12_sq = 2 * mom.second * mom.second +
                           2 * ((G - 2) * mom.mean - mom.second) * ((G - 2) * mom.mean - mom.second);
  const Rational var_t12 = et12_sq - et12 * et12;
  require(var_t12 == G * G * (G - 2) * (G - 2) / 36, "Var t(J1, Jk)");

  r.variance_terms[2] = r.var_u2;
  Rational partial = 0;
  for (std::size_t k = 3; k <= k_table; ++k) {
    const Rational scale = kernel_scale(g, k);
    const Rational var_uk = var_t12 / (scale * scale);
    require(var_uk == (G - 2) * (G - 2) /
                          (36 * Rational(big_pow(BigInt(g - 1), static_cast<unsigned>(2 * k - 2)))),
            "Var U_k");
    r.variance_terms[k] = var_uk;
    partial += 4 * var_uk;
    r.tail_partial[k] = partial;
  }
  // Geometric series: first term Var(2U_3), ratio (g-1)^-2.
  const Rational first = 4 * r.variance_terms[3];
  const Rational ratio = 1 / ((G - 1) * (G - 1));
  r.var_tail = first / (1 - ratio);
  require(r.var_tail == (G - 2) / (9 * G * (G - 1) * (G - 1)), "variance tail");
  require(r.var_tail - partial ==
              first * rational_pow(ratio, static_cast<unsigned>(k_table - 2)) / (1 - ratio),
          "tail remainder after partial sum");

  r.sigma2_series = r.var_u2 + r.var_tail;
  r.sigma2_g_form = (G - 2) * (G * G - 2 * G + 2) / (45 * G * (G - 1) * (G - 1));
  r.sigma2 = 2 * X * (2 * X * X - 2 * X + 1) / (45 * (2 * X - 1) * (2 * X - 1) * (X - 1));
  require(r.sigma2_series == r.sigma2_g_form, "sigma^2 series vs g-form");
  require(r.sigma2 == r.sigma2_g_form, "sigma^2 chi-form vs g-form");
  require(r.sigma2 > 0, "sigma^2 positive");
  return r;
}

MomentReport limit_constants(const Surface& surface, std::size_t k_table) {
  return limit_constants(surface.size(), k_table);
}

bool UncorrelatedReport::ok() const {
  if (nonzero_off_diagonal != 0) return false;
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

UncorrelatedReport verify_uncorrelated(const Surface& surface, std::size_t max_shift,
                                       std::size_t max_k) {
  if (max_k < 2) throw InputError("verify_uncorrelated needs max_k >= 2");
  const int g = surface.size();
  const std::size_t length = std::max<std::size_t>(max_shift + max_k, 5);
  require_feasible(surface, length, false);

  struct Term {
    std::size_t shift, k;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i <= max_shift; ++i)
    for (std::size_t k = 2; k <= max_k; ++k) terms.push_back({i, k});
  const std::size_t nt = terms.size();
  const std::size_t ngaps = length - 1;

  std::vector<long long> sum(nt, 0);
  std::vector<long long> cross(nt * nt, 0);
  // Raw sums for the gap-level identities.
  long long t11 = 0, t11_sq = 0, t12 = 0;
  long long case0 = 0, case0b = 0, case1 = 0, case2 = 0;
  std::vector<long long> t1k(ngaps, 0), t1k_sq(ngaps, 0);
  std::vector<long long> vals(nt);
  std::vector<int> j(ngaps);
  std::size_t count = 0;

  for_each_string(surface, length, [&](std::span<const Letter> w) {
    for (std::size_t q = 0; q < ngaps; ++q) j[q] = gap(surface, w[q], w[q + 1]);
    for (std::size_t a = 0; a < nt; ++a) {
      vals[a] = gap_product(j[terms[a].shift], j[terms[a].shift + terms[a].k - 2], g);
      sum[a] += vals[a];
    }
    for (std::size_t a = 0; a < nt; ++a)
      for (std::size_t b = a; b < nt; ++b) cross[a * nt + b] += vals[a] * vals[b];

    const long long a11 = gap_product(j[0], j[0], g);
    const long long a12 = gap_product(j[0], j[1], g);
    const long long a13 = gap_product(j[0], j[2], g);
    const long long a23 = gap_product(j[1], j[2], g);
    const long long a34 = gap_product(j[2], j[3], g);
    t11 += a11;
    t11_sq += a11 * a11;
    t12 += a12;
    case0 += a12 * a34;
    case0b += a11 * a23;
    case1 += a12 * a13;
    case2 += a11 * a12;
    for (std::size_t q = 1; q < ngaps; ++q) {
      const long long v = gap_product(j[0], j[q], g);
      t1k[q] += v;
      t1k_sq[q] += v * v;
    }
    ++count;
    return true;
  });

  UncorrelatedReport r;
  r.g = g;
  r.max_shift = max_shift;
  r.max_k = max_k;
  r.strings = count;
  const Rational N(static_cast<long long>(count));
  auto mean = [&](long long s) { return Rational(s) / N; };
  const Rational G(g);

  for (std::size_t a = 0; a < nt; ++a) {
    for (std::size_t b = a; b < nt; ++b) {
      const Rational cov_t = mean(cross[a * nt + b]) - mean(sum[a]) * mean(sum[b]);
      const Rational cov_u = cov_t / (kernel_scale(g, terms[a].k) * kernel_scale(g, terms[b].k));
      if (a == b) {
        const std::size_t k = terms[a].k;
        const Rational expected =
            k == 2 ? (G - 2) * (G - 3) * (G + 1) / (45 * G * (G - 1) * (G - 1))
                   : (G - 2) * (G - 2) /
                         (36 * Rational(big_pow(BigInt(g - 1), static_cast<unsigned>(2 * k - 2))));
        r.checks.push_back({"Var U_" + std::to_string(k) + "(shift " + std::to_string(terms[a].shift) + ")",
                            expected, cov_u});
      } else {
        ++r.off_diagonal_pairs;
        if (cov_u != 0) ++r.nonzero_off_diagonal;
      }
    }
  }

  const Rational mt11 = mean(t11), mt12 = mean(t12);
  r.checks.push_back({"Case 0: E t(J1,J2) t(J3,J4) = E t(J1,J2) E t(J3,J4)", mt12 * mt12, mean(case0)});
  r.checks.push_back({"Case 0: E t(J1,J1) t(J2,J3) = E t(J1,J1) E t(J2,J3)", mt11 * mt12, mean(case0b)});
  r.checks.push_back({"Case 1: E t(J1,J2) t(J1,J3) = (g-2)^4/4", (G - 2) * (G - 2) * (G - 2) * (G - 2) / 4,
                      mean(case1)});
  r.checks.push_back({"Case 1: uncorrelated", mt12 * mt12, mean(case1)});
  r.checks.push_back({"Case 2: E t(J1,J1) t(J1,J2) = (g-2)^3 (g-3)/6", (G - 2) * (G - 2) * (G - 2) * (G - 3) / 6,
                      mean(case2)});
  r.checks.push_back({"Case 2: uncorrelated", mt11 * mt12, mean(case2)});
  for (std::size_t q = 1; q < ngaps; ++q) {
    const Rational m1 = mean(t1k[q]);
    r.checks.push_back({"Case 3: Var t(J1,J" + std::to_string(q + 1) + ") = g^2 (g-2)^2/36",
                        G * G * (G - 2) * (G - 2) / 36, mean(t1k_sq[q]) - m1 * m1});
  }
  r.checks.push_back({"Case 4: Var t(J1,J1) = g(g-2)(g-3)(g+1)/45", G * (G - 2) * (G - 3) * (G + 1) / 45,
                      mean(t11_sq) - mt11 * mt11});
  r.checks.push_back({"E t(J1,J1) = (g-2)(g-3)/3", (G - 2) * (G - 3) / 3, mt11});
  r.checks.push_back({"E t(J1,J2) = (g-2)^2/2", (G - 2) * (G - 2) / 2, mt12});
  return r;
}

}  // namespace curvecount
