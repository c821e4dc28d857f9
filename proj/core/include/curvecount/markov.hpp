#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "curvecount/rational.hpp"
#include "curvecount/surface.hpp"
#include "curvecount/word.hpp"

namespace curvecount {

/// Non-backtracking walk on the alphabet: from a, every letter other than
/// inverse(a) with probability theta = 1/(g-1). Doubly stochastic with the
/// uniform stationary law; its stationary paths of length n are uniform on
/// reduced words.
class MarkovModel {
 public:
  explicit MarkovModel(const Surface& surface);

  int size() const { return g_; }
  const Rational& theta() const { return theta_; }
  Rational stationary(Letter) const { return Rational(1, g_); }

  Rational transition(Letter a, Letter b) const;
  std::vector<std::vector<Rational>> transition_matrix() const;

  /// m-step probability from the closed form of (B - A)^m:
  /// odd m:  theta^m ((theta^-m + 1)/g - [b = inverse(a)]),
  /// even m: theta^m ((theta^-m - 1)/g + [b = a]).
  Rational m_step(Letter a, Letter b, unsigned m) const;

  /// The same by repeated exact multiplication of the transition matrix.
  std::vector<std::vector<Rational>> matrix_power(unsigned m) const;

  /// max over a, b of |p_m(a, b) - 1/g|.
  Rational max_deviation(unsigned m) const;

 private:
  std::vector<int> inverse_;
  int g_;
  Rational theta_;
};

/// SplitMix64 stream. Every sample index gets its own stream derived from
/// (seed, index), so results do not depend on how work is sharded.
class StreamRng {
 public:
  static constexpr std::string_view kAlgorithm = "splitmix64-stream-v1";

  StreamRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform on [0, bound), bound > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::uint64_t state_;
};

enum class SampleMode { kString, kJoinable, kNecklaceApprox, kNecklaceExact };

std::string_view to_string(SampleMode mode);
SampleMode parse_sample_mode(std::string_view text);

struct SamplerConfig {
  std::uint64_t seed = 0;
  SampleMode mode = SampleMode::kJoinable;
};

/// Runs the chain from a uniform first letter: exactly uniform on S_n.
std::vector<Letter> sample_string(const Surface& surface, std::size_t n, StreamRng& rng);
/// Rejection from sample_string until joinable: exactly uniform on J_n.
/// `rejections`, when given, is incremented once per rejected draw.
std::vector<Letter> sample_joinable(const Surface& surface, std::size_t n, StreamRng& rng,
                                    std::uint64_t* rejections = nullptr);
/// kNecklaceApprox: necklace of a uniform joinable string, so a necklace of
/// period d has probability d/|J_n|. kNecklaceExact: exactly uniform on F_n;
/// the period d | n is drawn with probability P_d/|F_n| (P_d primitive
/// necklaces of length d), then a uniform primitive root of length d by
/// rejection, raised to the power n/d. Conditioned on primitivity both
/// modes are uniform on the primitive necklaces.
Necklace sample_necklace(const Surface& surface, std::size_t n, StreamRng& rng,
                         SampleMode mode = SampleMode::kNecklaceExact);

/// Convenience wrappers drawing from stream 0 of cfg.seed.
Word sample_string(const Surface& surface, std::size_t n, const SamplerConfig& cfg);
JoinableWord sample_joinable(const Surface& surface, std::size_t n, const SamplerConfig& cfg);
Necklace sample_necklace(const Surface& surface, std::size_t n, const SamplerConfig& cfg);

/// Exact total variation max_F |nu(F) - lambda(F)| between the laws of the
/// length-(n-m) prefix of a uniform string and of a uniform joinable string,
/// by enumeration, and the bound 2((1 + g theta^m)/(1 - g theta^m) - 1).
/// `bound` is empty when g theta^m >= 1 and the bound is vacuous.
struct TvReport {
  int g = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  Rational exact_tv;
  std::optional<Rational> bound;
  bool holds() const { return !bound || exact_tv <= *bound; }
};
TvReport tv_prefix_bound(const Surface& surface, std::size_t n, std::size_t m, bool force = false);

}  // namespace curvecount
