// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Run a subset with `curvecount_acceptance 1 5 10`.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "curvecount/clt.hpp"
#include "curvecount/intersection.hpp"
#include "curvecount/markov.hpp"
#include "curvecount/moments.hpp"
#include "curvecount/stats.hpp"
#include "curvecount/surface.hpp"
#include "curvecount/word.hpp"

namespace cc = curvecount;
using cc::Letter;
using cc::Rational;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string q(const Rational& r) { return cc::fraction_string(r); }

Outcome worked_example() {
  const auto s = cc::preset_surface("genus2_one_boundary");
  const cc::JoinableWord alpha(s, s.parse_letters("a b C a a c B a"));
  cc::IntersectionOptions opt;
  opt.record_witnesses = true;
  const auto r = cc::self_intersection(s, alpha, opt);

  using W = cc::Witness;
  const std::set<W> expected{
      {0, 4, 4, cc::KernelKind::kV}, {1, 2, 2, cc::KernelKind::kU}, {1, 4, 2, cc::KernelKind::kU},
      {2, 3, 3, cc::KernelKind::kU}, {2, 5, 2, cc::KernelKind::kU}, {4, 5, 2, cc::KernelKind::kU},
      {6, 7, 3, cc::KernelKind::kU}};
  const std::set<W> got(r.witnesses.begin(), r.witnesses.end());
  const bool decomposition = r.count(cc::KernelKind::kU, 2) == 4 && r.count(cc::KernelKind::kU, 3) == 2 &&
                             r.count(cc::KernelKind::kV, 4) == 1 && r.witnesses.size() == 7;
  std::ostringstream d;
  d << "N=" << r.total << " u2=" << r.count(cc::KernelKind::kU, 2) << " u3=" << r.count(cc::KernelKind::kU, 3)
    << " v4=" << r.count(cc::KernelKind::kV, 4);
  return {r.total == 7 && decomposition && got == expected, d.str()};
}

Outcome constants() {
  const auto m = cc::limit_constants(4, 50);
  bool ok = m.kappa == Rational(1, 9) && m.sigma2 == Rational(1, 81);
  for (int g : {4, 6, 8, 10}) {
    const auto r = cc::limit_constants(g, 20);
    const Rational G(g), X(1 - g / 2);
    // Both routes written out here as well, independently of the library.
    const Rational kappa_chi = X / (3 * (2 * X - 1));
    const Rational kappa_g = (G - 2) / (6 * (G - 1));
    const Rational s2_chi = 2 * X * (2 * X * X - 2 * X + 1) / (45 * (2 * X - 1) * (2 * X - 1) * (X - 1));
    const Rational s2_g = (G - 2) * (G * G - 2 * G + 2) / (45 * G * (G - 1) * (G - 1));
    ok = ok && kappa_chi == kappa_g && s2_chi == s2_g;
    ok = ok && r.kappa == kappa_chi && r.kappa_g_form == kappa_g && r.sigma2 == s2_chi && r.sigma2_g_form == s2_g;
    ok = ok && r.sigma2_series == r.sigma2 && 2 * r.kappa == r.mean_s_infinity;
  }
  return {ok, "kappa=" + q(m.kappa) + " sigma2=" + q(m.sigma2)};
}

Outcome hoeffding_oracle() {
  const auto s = cc::preset_surface("punctured_torus");
  const int g = s.size();
  std::size_t prefixes = 0, mismatches = 0;
  for (std::size_t k = 2; k <= 5; ++k) {
    // Each reduced y of length k has stationary-chain probability 1/(g (g-1)^(k-1)).
    const Rational weight = Rational(1) / Rational(g * cc::big_pow(cc::BigInt(g - 1), static_cast<unsigned>(k - 1)));
    const auto ys = cc::enumerate_strings(s, k);
    for (const auto& x : cc::enumerate_strings(s, k)) {
      long long hits = 0;
      for (const auto& y : ys) hits += cc::u_k(s, x.letters(), y.letters(), k);
      const Rational oracle = weight * Rational(hits);
      ++prefixes;
      if (oracle != cc::hoeffding_U(s, x.letters(), k)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(prefixes) + " prefixes, " + std::to_string(mismatches) + " mismatches"};
}

Outcome covariance_ledger() {
  const auto s = cc::preset_surface("punctured_torus");
  const auto r = cc::verify_uncorrelated(s, 6, 5);
  std::size_t failed = 0;
  std::string first_failure;
  for (const auto& c : r.checks) {
    if (!c.ok()) {
      if (failed++ == 0) first_failure = c.label + ": expected " + q(c.expected) + " got " + q(c.observed);
    }
  }
  std::ostringstream d;
  d << r.checks.size() << " identities, " << r.off_diagonal_pairs << " cross pairs, " << r.nonzero_off_diagonal
    << " nonzero";
  if (failed) d << "; " << first_failure;
  return {r.ok() && r.nonzero_off_diagonal == 0, d.str()};
}

Outcome mixing() {
  const auto s = cc::preset_surface("punctured_torus");
  const cc::MarkovModel model(s);
  const int g = s.size();
  bool ok = model.m_step(Letter(0), Letter(0), 2) == Rational(1, 3);
  Rational theta_m = 1;
  for (unsigned m = 0; m <= 20; ++m) {
    const auto p = model.matrix_power(m);
    for (int a = 0; a < g; ++a) {
      for (int b = 0; b < g; ++b) {
        const Rational pm = model.m_step(Letter(a), Letter(b), m);
        const Rational dev = pm - Rational(1, g);
        ok = ok && pm == p[a][b] && (dev < 0 ? -dev : dev) <= theta_m;
      }
    }
    theta_m *= model.theta();
  }
  return {ok, "p2(a,a)=" + q(model.m_step(Letter(0), Letter(0), 2))};
}

Outcome counting() {
  bool ok = true;
  std::ostringstream d;
  for (auto [name, n_max] : {std::pair<const char*, std::size_t>{"punctured_torus", 8}, {"genus2_one_boundary", 5}}) {
    const auto s = cc::preset_surface(name);
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::size_t strings = 0, joinable = 0;
      cc::for_each_string(s, n, [&](std::span<const Letter>) { return ++strings, true; });
      cc::for_each_joinable(s, n, [&](std::span<const Letter>) { return ++joinable, true; });
      ok = ok && cc::BigInt(strings) == cc::count_strings_closed_form(s.size(), n) &&
           cc::BigInt(strings) == cc::count_strings(s, n) && cc::BigInt(joinable) == cc::count_joinable(s, n);
    }
    // trace((B-A)^(n-1)) is not |J_n|.
    const auto n = n_max;
    d << "g=" << s.size() << ": |J_" << n << "|=" << cc::count_joinable(s, n) << " vs trace^(n-1)="
      << cc::count_joinable(s, n - 1) << "; ";
  }
  return {ok, d.str()};
}

Outcome tv_bound() {
  const auto s = cc::preset_surface("punctured_torus");
  bool ok = true;
  std::ostringstream d;
  for (auto [n, m_lo, m_hi] : {std::tuple<std::size_t, std::size_t, std::size_t>{8, 2, 5}, {10, 3, 6}}) {
    for (std::size_t m = m_lo; m <= m_hi; ++m) {
      const auto r = cc::tv_prefix_bound(s, n, m);
      ok = ok && r.bound.has_value() && r.holds();
      if (m == m_lo) d << "(n=" << n << ",m=" << m << ") tv=" << q(r.exact_tv) << " bound=" << q(*r.bound) << " ";
    }
  }
  return {ok, d.str()};
}

Outcome unhook_and_oracle() {
  std::size_t necklaces = 0, failures = 0;
  for (auto [name, n_max] : {std::pair<const char*, std::size_t>{"punctured_torus", 8}, {"genus2_one_boundary", 6}}) {
    const auto s = cc::preset_surface(name);
    for (std::size_t n = 2; n <= n_max; ++n) {
      for (const auto& nk : cc::enumerate_necklaces(s, n)) {
        if (!nk.primitive()) continue;
        ++necklaces;
        const std::int64_t base = cc::self_intersection(s, nk).total;
        for (std::size_t at = 0; at < n; ++at) {
          const auto w = cc::unhook(nk, static_cast<std::ptrdiff_t>(at));
          if (cc::self_intersection_count(s, w.letters()) != base ||
              cc::self_intersection_definitional(s, w).total != base) {
            ++failures;
          }
        }
      }
    }
  }
  return {failures == 0, std::to_string(necklaces) + " primitive necklaces, " + std::to_string(failures) + " failures"};
}

Outcome gaussian_limit() {
  const auto s = cc::preset_surface("punctured_torus");
  cc::CltConfig cfg;
  cfg.seed = 20101;
  cfg.samples = 50000;
  cfg.threads = std::max(1U, std::thread::hardware_concurrency());
  const auto [h, r] = cc::montecarlo_distribution(s, 200, cfg);
  char buf[256];
  std::snprintf(buf, sizeof buf, "seed=%llu mean_z=%.4f (bound %.4f) var_z=%.4f ks=%.4f",
                static_cast<unsigned long long>(r.seed), r.mean_z, r.mean_bound(), r.var_z, r.ks_distance);
  return {r.mean_ok() && r.variance_ok() && r.ks_ok(), buf};
}

Outcome sampler_uniformity() {
  const auto s = cc::preset_surface("punctured_torus");
  std::map<std::vector<Letter>, std::size_t> index;
  for (const auto& nk : cc::enumerate_necklaces(s, 6)) {
    if (!nk.primitive()) continue;
    const auto l = nk.canonical().letters();
    index.emplace(std::vector<Letter>(l.begin(), l.end()), index.size());
  }
  std::vector<std::uint64_t> counts(index.size(), 0);
  std::uint64_t excluded = 0;
  const std::uint64_t M = 1000000;
  for (std::uint64_t i = 0; i < M; ++i) {
    cc::StreamRng rng(424242, i);
    const auto nk = cc::sample_necklace(s, 6, rng, cc::SampleMode::kNecklaceExact);
    if (!nk.primitive()) {
      ++excluded;
      continue;
    }
    const auto l = nk.canonical().letters();
    ++counts[index.at(std::vector<Letter>(l.begin(), l.end()))];
  }
  const auto chi = cc::chi_square_uniform(counts);
  char buf[200];
  std::snprintf(buf, sizeof buf, "cells=%zu chi2=%.2f dof=%d p=%.4f excluded=%llu", counts.size(), chi.statistic,
                chi.dof, chi.p_value, static_cast<unsigned long long>(excluded));
  return {chi.passes(0.001), buf};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "worked example N = 7 with witness decomposition", 1, worked_example},
      {2, "limit constants kappa = 1/9, sigma^2 = 1/81, g-form = chi-form", 1, constants},
      {3, "Hoeffding projection equals exhaustive Markov expectation (g=4, k<=5)", 60, hoeffding_oracle},
      {4, "covariance ledger Cases 0-4 and zero cross-covariances (g=4)", 300, covariance_ledger},
      {5, "m-step closed form equals matrix powers, |p_m - 1/g| <= theta^m", 1, mixing},
      {6, "enumerated counts match matrix formulas", 60, counting},
      {7, "prefix total variation within its bound", 300, tv_bound},
      {8, "unhook invariance and definitional oracle agreement", 600, unhook_and_oracle},
      {9, "Gaussian limit at n=200, M=50000", 900, gaussian_limit},
      {10, "exact necklace sampler is uniform on primitive F_6", 300, sampler_uniformity},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s | %s | %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, c.time_limit_s, in_time ? "" : " TIME EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
