#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <vector>

#include "curvecount/clt.hpp"
#include "curvecount/errors.hpp"
#include "curvecount/intersection.hpp"
#include "curvecount/moments.hpp"
#include "curvecount/surface.hpp"
#include "curvecount/word.hpp"

namespace cc = curvecount;

namespace {

TEST(Exhaustive, MatchesDirectEnumeration) {
  const auto s = cc::preset_surface("punctured_torus");
  for (std::size_t n = 2; n <= 9; ++n) {
    std::map<std::int64_t, std::uint64_t> bins;
    std::uint64_t skipped = 0;
    for (const auto& nk : cc::enumerate_necklaces(s, n)) {
      if (!nk.primitive()) {
        ++skipped;
        continue;
      }
      ++bins[cc::self_intersection_definitional(s, nk.canonical()).total];
    }
    const auto h = cc::exhaustive_distribution(s, n);
    EXPECT_EQ(h.bins, bins) << "n=" << n;
    EXPECT_EQ(h.excluded_nonprimitive, skipped);
    EXPECT_EQ(h.total, cc::count_necklaces(s, n).primitive);
  }
}

TEST(Exhaustive, IndependentOfThreadCount) {
  const auto s = cc::preset_surface("genus2_one_boundary");
  const auto a = cc::exhaustive_distribution(s, 6, false, 1);
  const auto b = cc::exhaustive_distribution(s, 6, false, 4);
  EXPECT_EQ(a.bins, b.bins);
  EXPECT_EQ(a.total, b.total);
}

TEST(Exhaustive, RefusesBeyondDeskLimit) {
  const auto s = cc::preset_surface("punctured_torus");
  EXPECT_THROW(cc::exhaustive_distribution(s, 25), cc::InfeasibleError);
  EXPECT_THROW(cc::exhaustive_distribution(s, 1), cc::InputError);
}

TEST(Exhaustive, MeanGrowsLikeKappaNSquared) {
  // Exact means at n = 11, 12, 13 approach kappa once the linear term is removed.
  const auto s = cc::preset_surface("punctured_torus");
  const double kappa = 1.0 / 9.0;
  double previous = 0;
  for (std::size_t n : {11u, 12u, 13u}) {
    const auto h = cc::exhaustive_distribution(s, n);
    const double ratio = h.mean() / (static_cast<double>(n) * n);
    EXPECT_LT(ratio, kappa);
    EXPECT_GT(ratio, previous);
    previous = ratio;
  }
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  const auto s = cc::preset_surface("punctured_torus");
  cc::CltConfig cfg;
  cfg.seed = 17;
  cfg.samples = 700;
  cfg.threads = 1;
  const auto a = cc::montecarlo_values(s, 30, cfg);
  cfg.threads = 3;
  const auto b = cc::montecarlo_values(s, 30, cfg);
  EXPECT_EQ(a, b);
  cfg.seed = 18;
  EXPECT_NE(a, cc::montecarlo_values(s, 30, cfg));
}

TEST(MonteCarlo, ExhaustiveMeanInsideConfidenceInterval) {
  const auto s = cc::preset_surface("punctured_torus");
  const std::size_t n = 10;
  const auto exact = cc::exhaustive_distribution(s, n);
  cc::CltConfig cfg;
  cfg.seed = 2024;
  cfg.samples = 20000;
  const auto [h, r] = cc::montecarlo_distribution(s, n, cfg);
  const double se = std::sqrt(r.sample_variance / static_cast<double>(cfg.samples));
  EXPECT_NEAR(r.sample_mean, exact.mean(), 4 * se);
  EXPECT_EQ(h.total, cfg.samples);
  // Every sampled value is attainable.
  for (auto [v, c] : h.bins) EXPECT_TRUE(exact.bins.count(v)) << v;
}

TEST(MonteCarlo, ReportFieldsAreConsistent) {
  const auto s = cc::preset_surface("punctured_torus");
  cc::CltConfig cfg;
  cfg.seed = 5;
  cfg.samples = 500;
  const auto [h, r] = cc::montecarlo_distribution(s, 40, cfg);
  EXPECT_EQ(r.rng, "splitmix64-stream-v1");
  EXPECT_EQ(r.kappa, cc::Rational(1, 9));
  std::uint64_t zsum = 0;
  for (auto [b, c] : r.z_bins) zsum += c;
  EXPECT_EQ(zsum, cfg.samples);
  EXPECT_NEAR(r.sample_mean, h.mean(), 1e-9);
  // Standardization is affine in N.
  const double sigma = std::sqrt(cc::to_double(r.sigma2));
  EXPECT_NEAR(r.mean_z, cc::standardize(0, 40, 1.0 / 9.0, sigma) + r.sample_mean / (sigma * 40 * std::sqrt(40.0)),
              1e-9);
  EXPECT_GE(r.ks_distance, 0);
  EXPECT_LE(r.ks_distance, 1);
}

TEST(Trend, SeedsFollowLengthAndOrderIsChecked) {
  const auto s = cc::preset_surface("punctured_torus");
  cc::CltConfig cfg;
  cfg.seed = 100;
  cfg.samples = 200;
  const std::vector<std::size_t> ns{10, 20};
  const auto rows = cc::trend_report(s, ns, cfg);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].seed, 110u);
  EXPECT_EQ(rows[1].seed, 120u);
  const std::vector<std::size_t> bad{20, 10};
  EXPECT_THROW(cc::trend_report(s, bad, cfg), cc::InputError);
}

}  // namespace
