#include "curvecount/clt.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "curvecount/errors.hpp"
#include "curvecount/intersection.hpp"
#include "curvecount/markov.hpp"
#include "curvecount/moments.hpp"
#include "curvecount/stats.hpp"
#include "curvecount/word.hpp"

namespace curvecount {

double Histogram::mean() const {
  if (total == 0) return 0;
  long double s = 0;
  for (auto [v, c] : bins) s += static_cast<long double>(v) * c;
  return static_cast<double>(s / total);
}

double Histogram::variance() const {
  if (total == 0) return 0;
  const long double m = mean();
  long double s = 0;
  for (auto [v, c] : bins) s += (v - m) * (v - m) * c;
  return static_cast<double>(s / total);
}

Rational Histogram::exact_mean() const {
  if (total == 0) return 0;
  BigInt s = 0;
  for (auto [v, c] : bins) s += BigInt(v) * BigInt(c);
  return Rational(s) / Rational(BigInt(total));
}

namespace {

unsigned effective_threads(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
  if (work < t) t = static_cast<unsigned>(std::max<std::size_t>(work, 1));
  return t;
}

// Runs body(shard) for shard in [0, shards) on up to `threads` workers.
template <typename Body>
void run_sharded(std::size_t shards, unsigned threads, Body&& body) {
  threads = effective_threads(threads, shards);
  if (threads <= 1) {
    for (std::size_t s = 0; s < shards; ++s) body(s);
    return;
  }
  std::vector<std::jthread> pool;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t s; (s = next.fetch_add(1)) < shards;) {
        try {
          body(s);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace

Histogram exhaustive_distribution(const Surface& surface, std::size_t n, bool force, unsigned threads) {
  if (n < 2) throw InputError("exhaustive distribution needs n >= 2");
  require_feasible(surface, n, force);
  const auto g = static_cast<std::size_t>(surface.size());

  // Shard by first letter of the canonical representative; merge in letter
  // order so the result does not depend on the thread count.
  std::vector<Histogram> parts(g);
  run_sharded(g, threads, [&](std::size_t first) {
    Histogram& h = parts[first];
    for_each_string_starting(surface, n, Letter(static_cast<int>(first)), [&](std::span<const Letter> w) {
      if (w.back() == surface.inverse(w.front())) return true;
      if (least_rotation(w) != 0) return true;
      if (rotation_period(w) != n) {
        ++h.excluded_nonprimitive;
        return true;
      }
      ++h.bins[self_intersection_count(surface, w)];
      ++h.total;
      return true;
    });
  });

  Histogram out;
  out.n = n;
  out.surface_id = surface.id();
  out.mode = HistogramMode::kExhaustive;
  for (const auto& h : parts) {
    for (auto [v, c] : h.bins) out.bins[v] += c;
    out.total += h.total;
    out.excluded_nonprimitive += h.excluded_nonprimitive;
  }
  return out;
}

double CltReport::mean_bound() const {
  return thresholds.mean_standard_errors * std_z / std::sqrt(static_cast<double>(samples));
}
bool CltReport::mean_ok() const { return std::abs(mean_z) <= mean_bound(); }
bool CltReport::variance_ok() const { return std::abs(var_z - 1.0) <= thresholds.variance_tolerance; }
bool CltReport::ks_ok() const { return ks_distance <= thresholds.ks_max; }

double standardize(std::int64_t value, std::size_t n, double kappa, double sigma) {
  const double nn = static_cast<double>(n);
  return (static_cast<double>(value) - kappa * nn * nn) / (sigma * nn * std::sqrt(nn));
}

std::vector<std::int64_t> montecarlo_values(const Surface& surface, std::size_t n, const CltConfig& cfg,
                                            std::uint64_t* nonprimitive_redraws) {
  if (n < 2) throw InputError("Monte Carlo needs n >= 2");
  if (cfg.samples < 1) throw InputError("Monte Carlo needs at least one sample");
  std::vector<std::int64_t> values(cfg.samples);
  std::vector<std::uint64_t> redraws(cfg.samples, 0);
  constexpr std::size_t kBlock = 256;
  const std::size_t blocks = (cfg.samples + kBlock - 1) / kBlock;
  run_sharded(blocks, cfg.threads, [&](std::size_t block) {
    const std::size_t end = std::min(cfg.samples, (block + 1) * kBlock);
    for (std::size_t s = block * kBlock; s < end; ++s) {
      StreamRng rng(cfg.seed, s);
      while (true) {
        Necklace nk = sample_necklace(surface, n, rng, SampleMode::kNecklaceExact);
        if (!nk.primitive()) {
          ++redraws[s];
          continue;
        }
        values[s] = self_intersection_count(surface, nk.canonical().letters(), cfg.max_k);
        break;
      }
    }
  });
  if (nonprimitive_redraws) {
    *nonprimitive_redraws = 0;
    for (auto r : redraws) *nonprimitive_redraws += r;
  }
  return values;
}

std::pair<Histogram, CltReport> montecarlo_distribution(const Surface& surface, std::size_t n,
                                                        const CltConfig& cfg) {
  std::uint64_t redraws = 0;
  const auto values = montecarlo_values(surface, n, cfg, &redraws);
  const MomentReport moments = limit_constants(surface, 3);
  const double kappa = to_double(moments.kappa);
  const double sigma = std::sqrt(to_double(moments.sigma2));

  Histogram h;
  h.n = n;
  h.surface_id = surface.id();
  h.mode = HistogramMode::kMonteCarlo;
  h.seed = cfg.seed;
  h.excluded_nonprimitive = redraws;
  std::vector<double> raw, z;
  raw.reserve(values.size());
  z.reserve(values.size());
  for (auto v : values) {
    ++h.bins[v];
    raw.push_back(static_cast<double>(v));
    z.push_back(standardize(v, n, kappa, sigma));
  }
  h.total = values.size();

  CltReport r;
  r.n = n;
  r.samples = cfg.samples;
  r.seed = cfg.seed;
  r.rng = std::string(StreamRng::kAlgorithm);
  r.surface_id = surface.id();
  r.kappa = moments.kappa;
  r.sigma2 = moments.sigma2;
  const auto m_raw = sample_moments(raw);
  r.sample_mean = m_raw.mean;
  r.sample_variance = m_raw.variance;
  const auto m_z = sample_moments(z);
  r.mean_z = m_z.mean;
  r.var_z = m_z.variance;
  r.std_z = std::sqrt(m_z.variance);
  r.ks_distance = ks_statistic(z);
  r.z_bin_width = cfg.z_bin_width;
  for (double x : z) ++r.z_bins[static_cast<std::int64_t>(std::floor(x / cfg.z_bin_width))];
  r.thresholds = cfg.thresholds;
  r.nonprimitive_redraws = redraws;
  return {std::move(h), std::move(r)};
}

std::vector<TrendRow> trend_report(const Surface& surface, std::span<const std::size_t> n_list,
                                   const CltConfig& cfg) {
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw InputError("trend n-list must be strictly ascending");
  }
  const MomentReport moments = limit_constants(surface, 3);
  const double kappa = to_double(moments.kappa);
  const double sigma2 = to_double(moments.sigma2);
  std::vector<TrendRow> rows;
  for (std::size_t n : n_list) {
    CltConfig c = cfg;
    c.seed = cfg.seed + n;
    const auto [hist, report] = montecarlo_distribution(surface, n, c);
    const double nn = static_cast<double>(n);
    TrendRow row;
    row.n = n;
    row.seed = c.seed;
    row.mean_over_n2 = report.sample_mean / (nn * nn);
    row.mean_deviation = std::abs(row.mean_over_n2 - kappa);
    row.var_over_n3 = report.sample_variance / (nn * nn * nn);
    row.var_deviation = std::abs(row.var_over_n3 - sigma2);
    row.ks_distance = report.ks_distance;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace curvecount
