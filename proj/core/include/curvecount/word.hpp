#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "curvecount/errors.hpp"
#include "curvecount/rational.hpp"
#include "curvecount/surface.hpp"

namespace curvecount {

bool is_reduced(const Surface& surface, std::span<const Letter> letters);
bool is_joinable(const Surface& surface, std::span<const Letter> letters);

/// A reduced word (string): no two adjacent letters are inverses.
class Word {
 public:
  Word() = default;
  /// Throws InputError if empty, if a letter is unknown, or if not reduced.
  Word(const Surface& surface, std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 protected:
  struct Trusted {};
  Word(Trusted, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

/// A reduced word whose last letter is not the inverse of its first, so
/// every rotation is again reduced.
class JoinableWord : public Word {
 public:
  JoinableWord() = default;
  /// Throws InputError unless the letters form a joinable string of length >= 1.
  JoinableWord(const Surface& surface, std::vector<Letter> letters);

  /// Rotation starting at index i (mod length). Negative i rotates right.
  JoinableWord rotated(std::ptrdiff_t i) const;

 private:
  friend class Necklace;
  JoinableWord(Trusted t, std::vector<Letter> letters) : Word(t, std::move(letters)) {}
};

JoinableWord cyclic_shift(const JoinableWord& w, std::ptrdiff_t i);

/// Index of the lexicographically least rotation (first one on ties).
std::size_t least_rotation(std::span<const Letter> w);

/// Smallest d dividing n with the word invariant under rotation by d.
std::size_t rotation_period(std::span<const Letter> w);

/// A reduced cyclic word, stored as its lexicographically least rotation.
class Necklace {
 public:
  Necklace() = default;

  const JoinableWord& canonical() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }
  std::size_t period() const { return period_; }
  bool primitive() const { return period_ == canonical_.size(); }

  friend bool operator==(const Necklace& a, const Necklace& b) {
    return a.canonical_ == b.canonical_;
  }
  friend auto operator<=>(const Necklace& a, const Necklace& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  friend Necklace necklace_of(const JoinableWord& w);
  JoinableWord canonical_;
  std::size_t period_ = 0;
};

/// Projection from joinable strings to necklaces.
Necklace necklace_of(const JoinableWord& w);

/// The joinable string obtained by cutting the necklace before index `at`
/// of its canonical representative.
JoinableWord unhook(const Necklace& nk, std::ptrdiff_t at);

// Counting ----------------------------------------------------------------

using BigMatrix = std::vector<std::vector<BigInt>>;

/// (B - A)^m where B is all ones and A the inverse permutation matrix.
BigMatrix nonbacktracking_power(const Surface& surface, unsigned m);

/// |S_n| as 1^T (B - A)^(n-1) 1.
BigInt count_strings(const Surface& surface, std::size_t n);
/// |J_n| as trace((B - A)^n).
BigInt count_joinable(const Surface& surface, std::size_t n);
/// g (g-1)^(n-1).
BigInt count_strings_closed_form(int g, std::size_t n);
/// (g-1)^n + g/2 + (g/2 - 1)(-1)^n, from the spectrum of B - A.
BigInt count_joinable_closed_form(int g, std::size_t n);
/// Primitive necklaces of length d: (1/d) sum_{e | d} mu(d/e) |J_e|.
BigInt count_primitive_necklaces(int g, std::size_t d);

/// Default bound on exhaustive work: (g-1)^n <= 1e9.
inline constexpr double kDeskLimit = 1e9;
bool within_desk_limit(const Surface& surface, std::size_t n);
/// Throws InfeasibleError when n exceeds the desk limit and !force.
void require_feasible(const Surface& surface, std::size_t n, bool force);

// Enumeration ---------------------------------------------------------------
//
// Depth-first generation with the last-letter constraint; the visitor sees a
// span valid only during the call and returns false to stop early.

/// Strings of length n whose first letter is `first`; shards the word space.
template <typename Visitor>
bool for_each_string_starting(const Surface& surface, std::size_t n, Letter first,
                              Visitor&& visit) {
  if (n == 0) return true;
  const int g = surface.size();
  std::vector<Letter> buf(n);
  buf[0] = first;
  if (n == 1) return visit(std::span<const Letter>(buf));
  std::vector<int> next(n, 0);
  std::size_t depth = 1;
  while (true) {
    if (next[depth] >= g) {
      if (depth == 1) return true;
      next[depth] = 0;
      --depth;
      continue;
    }
    const Letter x(next[depth]++);
    if (x == surface.inverse(buf[depth - 1])) continue;
    buf[depth] = x;
    if (depth + 1 == n) {
      if (!visit(std::span<const Letter>(buf))) return false;
    } else {
      ++depth;
    }
  }
}

template <typename Visitor>
bool for_each_string(const Surface& surface, std::size_t n, Visitor&& visit) {
  for (int x = 0; x < surface.size(); ++x) {
    if (!for_each_string_starting(surface, n, Letter(x), visit)) return false;
  }
  return true;
}

template <typename Visitor>
bool for_each_joinable(const Surface& surface, std::size_t n, Visitor&& visit) {
  return for_each_string(surface, n, [&](std::span<const Letter> w) {
    if (w.back() == surface.inverse(w.front())) return true;
    return visit(w);
  });
}

/// Visits the canonical representative of each necklace together with its
/// rotation period.
template <typename Visitor>
bool for_each_necklace(const Surface& surface, std::size_t n, Visitor&& visit) {
  return for_each_joinable(surface, n, [&](std::span<const Letter> w) {
    if (least_rotation(w) != 0) return true;
    return visit(w, rotation_period(w));
  });
}

std::vector<Word> enumerate_strings(const Surface& surface, std::size_t n);
std::vector<JoinableWord> enumerate_joinable(const Surface& surface, std::size_t n);
std::vector<Necklace> enumerate_necklaces(const Surface& surface, std::size_t n);

struct NecklaceCounts {
  std::size_t necklaces = 0;
  std::size_t primitive = 0;
  std::size_t joinable = 0;  // sum of periods, equal to |J_n|
};
NecklaceCounts count_necklaces(const Surface& surface, std::size_t n);

}  // namespace curvecount
