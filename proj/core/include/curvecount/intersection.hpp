#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "curvecount/surface.hpp"
#include "curvecount/word.hpp"

namespace curvecount {

/// Linking kernel u_k of two strings: 1 when they differ at positions 1 and
/// k, agree strictly in between, and the two ends cross. Reads only the
/// first k letters. Throws InputError if k < 2 or either prefix is shorter
/// than k.
int u_k(const Surface& surface, std::span<const Letter> w, std::span<const Letter> w2,
        std::size_t k);

/// v_k(w, w2) = u_k(w, inverse-reversal of the first k letters of w2);
/// identically 0 for k = 2.
int v_k(const Surface& surface, std::span<const Letter> w, std::span<const Letter> w2,
        std::size_t k);

/// Sum over k = 2..n of u_k + v_k for two words of length n.
int pair_kernel(const Surface& surface, std::span<const Letter> w, std::span<const Letter> w2);

enum class KernelKind : std::uint8_t { kU, kV };

/// One contributing term (i, j, k, kind): rotations i < j of the unhooked
/// word, counted from 0, with u_k or v_k equal to 1.
struct Witness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  KernelKind kind = KernelKind::kU;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct IntersectionResult {
  std::int64_t total = 0;
  std::vector<Witness> witnesses;  // sorted; empty unless requested

  std::size_t count(KernelKind kind, std::size_t k) const;
};

struct IntersectionOptions {
  bool record_witnesses = false;
  /// Evaluate the formula on a proper power anyway.
  bool allow_nonprimitive = false;
  /// Largest k summed; 0 means the word length (no truncation).
  std::size_t max_k = 0;
};

/// Self-intersection number of a primitive necklace, computed from its
/// canonical representative. Throws NonPrimitiveError for proper powers
/// unless allowed, and InputError for length < 2.
IntersectionResult self_intersection(const Surface& surface, const Necklace& nk,
                                     const IntersectionOptions& options = {});

/// Same, for the necklace unhooked at the given joinable string.
IntersectionResult self_intersection(const Surface& surface, const JoinableWord& unhooked,
                                     const IntersectionOptions& options = {});

/// Hot path: no validation, no witnesses. `alpha` must be joinable.
/// For each pair of rotations the u-term has at most one contributing k (the
/// first disagreement after position 1); the v-terms are found the same way
/// by aligning rotations of alpha against rotations of its inverse reversal.
std::int64_t self_intersection_count(const Surface& surface, std::span<const Letter> alpha,
                                     std::size_t max_k = 0);

/// Definitional evaluator: materialises every rotation and sums u_k + v_k over
/// all i < j and k = 2..n with no shortcuts. Used as an oracle.
IntersectionResult self_intersection_definitional(const Surface& surface,
                                                  const JoinableWord& unhooked,
                                                  const IntersectionOptions& options = {});

/// Rotation pairs i < j whose kernel sum over k exceeds 1.
struct PairSumViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  int sum = 0;
};
std::vector<PairSumViolation> pair_sum_violations(const Surface& surface,
                                                  const JoinableWord& unhooked);

}  // namespace curvecount
