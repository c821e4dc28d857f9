#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvecount/rational.hpp"
#include "curvecount/surface.hpp"

namespace curvecount {

enum class HistogramMode { kExhaustive, kMonteCarlo };

/// Distribution of N over a population of necklaces, one bin per value.
struct Histogram {
  std::size_t n = 0;
  std::string surface_id;
  HistogramMode mode = HistogramMode::kExhaustive;
  std::map<std::int64_t, std::uint64_t> bins;
  std::uint64_t total = 0;
  std::optional<std::uint64_t> seed;
  /// Exhaustive mode: proper powers skipped. Monte Carlo: redraws caused by them.
  std::uint64_t excluded_nonprimitive = 0;

  double mean() const;
  double variance() const;  // population variance of the binned values
  /// Exact mean as a rational.
  Rational exact_mean() const;
};

/// Every primitive necklace of length n, exhaustively. Throws
/// InfeasibleError beyond the desk limit unless forced.
Histogram exhaustive_distribution(const Surface& surface, std::size_t n, bool force = false,
                                  unsigned threads = 1);

/// Acceptance thresholds for the standardized sample.
struct CltThresholds {
  double mean_standard_errors = 3.0;  // |mean_z| <= this * std_z / sqrt(M)
  double variance_tolerance = 0.10;   // |var_z - 1| <= this
  double ks_max = 0.05;
};

struct CltConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  unsigned threads = 1;
  std::size_t max_k = 0;  // 0: no truncation
  double z_bin_width = 0.25;
  CltThresholds thresholds;
};

struct CltReport {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string rng;
  std::string surface_id;
  Rational kappa;
  Rational sigma2;
  double sample_mean = 0;      // of N
  double sample_variance = 0;  // of N
  double mean_z = 0;
  double var_z = 0;
  double std_z = 0;
  double ks_distance = 0;
  std::map<std::int64_t, std::uint64_t> z_bins;  // bin index floor(z / width)
  double z_bin_width = 0.25;
  CltThresholds thresholds;
  std::uint64_t nonprimitive_redraws = 0;

  double mean_bound() const;
  bool mean_ok() const;
  bool variance_ok() const;
  bool ks_ok() const;
};

/// Standardizes with kappa and sigma^2 from the moment engine:
/// z = (N - kappa n^2) / (sigma n^{3/2}).
double standardize(std::int64_t value, std::size_t n, double kappa, double sigma);

/// Samples cfg.samples necklaces uniformly from the primitive necklaces of
/// length n (exact necklace sampling, proper powers redrawn) and computes N
/// for each. Sample s uses stream s of cfg.seed, so the output does not
/// depend on cfg.threads.
std::pair<Histogram, CltReport> montecarlo_distribution(const Surface& surface, std::size_t n,
                                                        const CltConfig& cfg);

/// The raw sample of N values in index order (what montecarlo_distribution
/// summarizes).
std::vector<std::int64_t> montecarlo_values(const Surface& surface, std::size_t n,
                                            const CltConfig& cfg,
                                            std::uint64_t* nonprimitive_redraws = nullptr);

struct TrendRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double mean_over_n2 = 0;
  double mean_deviation = 0;  // |mean/n^2 - kappa|
  double var_over_n3 = 0;
  double var_deviation = 0;   // |var/n^3 - sigma^2|
  double ks_distance = 0;
};

/// One Monte Carlo run per n; the run for n uses seed cfg.seed + n.
std::vector<TrendRow> trend_report(const Surface& surface, std::span<const std::size_t> n_list,
                                   const CltConfig& cfg);

}  // namespace curvecount
