#include "curvecount/markov.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "curvecount/errors.hpp"

namespace curvecount {

MarkovModel::MarkovModel(const Surface& surface)
    : g_(surface.size()), theta_(Rational(1, surface.size() - 1)) {
  inverse_.resize(static_cast<std::size_t>(g_));
  for (int x = 0; x < g_; ++x) inverse_[x] = surface.inverse(Letter(x)).id;
}

Rational MarkovModel::transition(Letter a, Letter b) const {
  return inverse_[a.id] == b.id ? Rational(0) : theta_;
}

std::vector<std::vector<Rational>> MarkovModel::transition_matrix() const {
  std::vector<std::vector<Rational>> p(static_cast<std::size_t>(g_), std::vector<Rational>(g_));
  for (int a = 0; a < g_; ++a)
    for (int b = 0; b < g_; ++b) p[a][b] = transition(Letter(a), Letter(b));
  return p;
}

Rational MarkovModel::m_step(Letter a, Letter b, unsigned m) const {
  if (m == 0) return a == b ? Rational(1) : Rational(0);
  const BigInt ratio_pow = big_pow(BigInt(g_ - 1), m);  // theta^-m
  const Rational theta_m = Rational(1) / Rational(ratio_pow);
  if (m % 2 == 1) {
    Rational entry = Rational(ratio_pow + 1, g_);
    if (inverse_[a.id] == b.id) entry -= 1;
    return theta_m * entry;
  }
  Rational entry = Rational(ratio_pow - 1, g_);
  if (a == b) entry += 1;
  return theta_m * entry;
}

std::vector<std::vector<Rational>> MarkovModel::matrix_power(unsigned m) const {
  const auto g = static_cast<std::size_t>(g_);
  std::vector<std::vector<Rational>> result(g, std::vector<Rational>(g, 0));
  for (std::size_t i = 0; i < g; ++i) result[i][i] = 1;
  const auto p = transition_matrix();
  for (unsigned step = 0; step < m; ++step) {
    std::vector<std::vector<Rational>> next(g, std::vector<Rational>(g, 0));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t k = 0; k < g; ++k) {
        if (result[i][k] == 0) continue;
        for (std::size_t j = 0; j < g; ++j) next[i][j] += result[i][k] * p[k][j];
      }
    result = std::move(next);
  }
  return result;
}

Rational MarkovModel::max_deviation(unsigned m) const {
  Rational best = 0;
  const Rational pi(1, g_);
  for (int a = 0; a < g_; ++a)
    for (int b = 0; b < g_; ++b) {
      Rational d = m_step(Letter(a), Letter(b), m) - pi;
      if (d < 0) d = -d;
      best = std::max(best, d);
    }
  return best;
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream) {
  // Decorrelate (seed, stream) pairs by mixing both through one SplitMix step.
  state_ = seed;
  const std::uint64_t a = next();
  state_ = a ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
  next();
}

std::uint64_t StreamRng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t StreamRng::below(std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t r = next();
    if (r >= limit) return r % bound;
  }
}

double StreamRng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string_view to_string(SampleMode mode) {
  switch (mode) {
    case SampleMode::kString: return "string";
    case SampleMode::kJoinable: return "joinable";
    case SampleMode::kNecklaceApprox: return "necklace-approx";
    case SampleMode::kNecklaceExact: return "necklace-exact";
  }
  return "?";
}

SampleMode parse_sample_mode(std::string_view text) {
  for (auto m : {SampleMode::kString, SampleMode::kJoinable, SampleMode::kNecklaceApprox,
                 SampleMode::kNecklaceExact}) {
    if (to_string(m) == text) return m;
  }
  throw InputError("unknown sample mode '" + std::string(text) +
                   "' (expected string, joinable, necklace-approx or necklace-exact)");
}

std::vector<Letter> sample_string(const Surface& surface, std::size_t n, StreamRng& rng) {
  if (n == 0) throw InputError("sample length must be at least 1");
  const auto g = static_cast<std::uint64_t>(surface.size());
  std::vector<Letter> w;
  w.reserve(n);
  w.emplace_back(static_cast<int>(rng.below(g)));
  for (std::size_t i = 1; i < n; ++i) {
    // Uniform over the g - 1 letters other than inverse(previous).
    const int banned = surface.inverse(w.back()).id;
    int x = static_cast<int>(rng.below(g - 1));
    if (x >= banned) ++x;
    w.emplace_back(x);
  }
  return w;
}

std::vector<Letter> sample_joinable(const Surface& surface, std::size_t n, StreamRng& rng,
                                    std::uint64_t* rejections) {
  if (n < 2) throw InputError("joinable samples need length at least 2");
  while (true) {
    auto w = sample_string(surface, n, rng);
    if (w.back() != surface.inverse(w.front())) return w;
    if (rejections) ++*rejections;
  }
}

namespace {

// Uniform on [0, bound) by drawing msb(bound)+1 bits and rejecting.
BigInt random_below(StreamRng& rng, const BigInt& bound) {
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
  while (true) {
    BigInt r = 0;
    for (unsigned have = 0; have < bits; have += 64) r = (r << 64) | BigInt(rng.next());
    r >>= (bits + 63) / 64 * 64 - bits;
    if (r < bound) return r;
  }
}

Necklace uniform_primitive(const Surface& surface, std::size_t d, StreamRng& rng) {
  if (d == 1) {
    return necklace_of(JoinableWord(surface, {Letter(static_cast<int>(rng.below(surface.size())))}));
  }
  // Every primitive necklace of length d has exactly d preimages in J_d.
  while (true) {
    Necklace nk = necklace_of(JoinableWord(surface, sample_joinable(surface, d, rng)));
    if (nk.primitive()) return nk;
  }
}

}  // namespace

Necklace sample_necklace(const Surface& surface, std::size_t n, StreamRng& rng, SampleMode mode) {
  if (mode != SampleMode::kNecklaceApprox && mode != SampleMode::kNecklaceExact) {
    throw InputError("sample_necklace needs a necklace mode");
  }
  if (mode == SampleMode::kNecklaceApprox) {
    return necklace_of(JoinableWord(surface, sample_joinable(surface, n, rng)));
  }
  // F_n splits by period d | n into (n/d)-th powers of primitive necklaces of
  // length d. Pick d with probability P_d / |F_n|, then a uniform primitive
  // necklace of length d.
  const int g = surface.size();
  std::vector<std::pair<std::size_t, BigInt>> classes;
  BigInt total = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    classes.emplace_back(d, count_primitive_necklaces(g, d));
    total += classes.back().second;
  }
  BigInt u = random_below(rng, total);
  std::size_t d = n;
  for (const auto& [period, count] : classes) {
    if (u < count) {
      d = period;
      break;
    }
    u -= count;
  }
  const Necklace root = uniform_primitive(surface, d, rng);
  if (d == n) return root;
  const auto base = root.canonical().letters();
  std::vector<Letter> w;
  w.reserve(n);
  for (std::size_t r = 0; r < n / d; ++r) w.insert(w.end(), base.begin(), base.end());
  return necklace_of(JoinableWord(surface, std::move(w)));
}

Word sample_string(const Surface& surface, std::size_t n, const SamplerConfig& cfg) {
  StreamRng rng(cfg.seed, 0);
  return Word(surface, sample_string(surface, n, rng));
}

JoinableWord sample_joinable(const Surface& surface, std::size_t n, const SamplerConfig& cfg) {
  StreamRng rng(cfg.seed, 0);
  return JoinableWord(surface, sample_joinable(surface, n, rng));
}

Necklace sample_necklace(const Surface& surface, std::size_t n, const SamplerConfig& cfg) {
  StreamRng rng(cfg.seed, 0);
  return sample_necklace(surface, n, rng, cfg.mode);
}

TvReport tv_prefix_bound(const Surface& surface, std::size_t n, std::size_t m, bool force) {
  if (m < 1 || m >= n) throw InputError("tv_prefix_bound needs 1 <= m < n");
  require_feasible(surface, n, force);
  const int g = surface.size();
  TvReport r;
  r.g = g;
  r.n = n;
  r.m = m;

  // Strings arrive in lexicographic order, so equal prefixes are contiguous.
  const std::size_t len = n - m;
  std::vector<std::uint64_t> joinable_per_prefix;
  std::vector<Letter> current;
  std::uint64_t joinable_total = 0;
  for_each_string(surface, n, [&](std::span<const Letter> w) {
    if (current.empty() || !std::equal(current.begin(), current.end(), w.begin())) {
      current.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
      joinable_per_prefix.push_back(0);
    }
    if (w.back() != surface.inverse(w.front())) {
      ++joinable_per_prefix.back();
      ++joinable_total;
    }
    return true;
  });

  const Rational nu(1, static_cast<long long>(joinable_per_prefix.size()));
  Rational l1 = 0;
  for (std::uint64_t c : joinable_per_prefix) {
    Rational d = Rational(static_cast<long long>(c), static_cast<long long>(joinable_total)) - nu;
    l1 += d < 0 ? -d : d;
  }
  r.exact_tv = l1 / 2;

  const Rational gtheta = Rational(g) / Rational(big_pow(BigInt(g - 1), static_cast<unsigned>(m)));
  if (gtheta < 1) r.bound = 2 * ((1 + gtheta) / (1 - gtheta) - 1);
  return r;
}

}  // namespace curvecount
