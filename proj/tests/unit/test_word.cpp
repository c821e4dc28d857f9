#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "curvecount/errors.hpp"
#include "curvecount/surface.hpp"
#include "curvecount/word.hpp"

namespace cc = curvecount;
using cc::Letter;

namespace {

std::vector<Letter> W(const cc::Surface& s, const char* text) { return s.parse_letters(text); }

// Oracle: smallest rotation by trying all of them.
std::vector<Letter> brute_min_rotation(std::vector<Letter> w) {
  std::vector<Letter> best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    best = std::min(best, w);
  }
  return best;
}

TEST(Word, ReducedAndJoinable) {
  const auto s = cc::preset_surface("punctured_torus");
  EXPECT_TRUE(cc::is_reduced(s, W(s, "a b a")));
  EXPECT_FALSE(cc::is_reduced(s, W(s, "a A b")));
  EXPECT_TRUE(cc::is_joinable(s, W(s, "a b a")));
  EXPECT_FALSE(cc::is_joinable(s, W(s, "a b A")));
  EXPECT_THROW(cc::Word(s, W(s, "b B")), cc::InputError);
  EXPECT_THROW(cc::JoinableWord(s, W(s, "a b A")), cc::InputError);
  EXPECT_THROW(cc::Word(s, {}), cc::InputError);
}

TEST(Word, RotationsOfJoinableStayJoinable) {
  const auto s = cc::preset_surface("genus2_one_boundary");
  const cc::JoinableWord w(s, W(s, "a b C a a c B a"));
  for (std::ptrdiff_t i = -8; i <= 8; ++i) {
    const auto r = w.rotated(i);
    EXPECT_TRUE(cc::is_joinable(s, r.letters()));
    EXPECT_EQ(r.rotated(-i), w);
  }
}

TEST(Word, LeastRotationMatchesBruteForce) {
  const auto s = cc::preset_surface("punctured_torus");
  for (std::size_t n = 1; n <= 7; ++n) {
    cc::for_each_joinable(s, n, [&](std::span<const Letter> w) {
      std::vector<Letter> v(w.begin(), w.end());
      std::vector<Letter> rotated(v.begin() + cc::least_rotation(w), v.end());
      rotated.insert(rotated.end(), v.begin(), v.begin() + cc::least_rotation(w));
      EXPECT_EQ(rotated, brute_min_rotation(v));
      return true;
    });
  }
}

TEST(Word, RotationPeriod) {
  const auto s = cc::preset_surface("punctured_torus");
  EXPECT_EQ(cc::rotation_period(W(s, "a b a b")), 2u);
  EXPECT_EQ(cc::rotation_period(W(s, "a a a")), 1u);
  EXPECT_EQ(cc::rotation_period(W(s, "a b a b a")), 5u);
  EXPECT_EQ(cc::rotation_period(W(s, "a b B a b B")), 3u);
}

TEST(Necklace, CanonicalFormIsRotationInvariant) {
  const auto s = cc::preset_surface("genus2_one_boundary");
  const cc::JoinableWord w(s, W(s, "a b C a a c B a"));
  const auto nk = cc::necklace_of(w);
  EXPECT_TRUE(nk.primitive());
  for (std::ptrdiff_t i = 0; i < 8; ++i) EXPECT_EQ(cc::necklace_of(w.rotated(i)), nk);
  for (std::ptrdiff_t i = 0; i < 8; ++i) EXPECT_EQ(cc::necklace_of(cc::unhook(nk, i)), nk);
}

TEST(Necklace, ProperPowerIsNotPrimitive) {
  const auto s = cc::preset_surface("punctured_torus");
  const auto nk = cc::necklace_of(cc::JoinableWord(s, W(s, "b a b a")));
  EXPECT_FALSE(nk.primitive());
  EXPECT_EQ(nk.period(), 2u);
  EXPECT_EQ(s.format_letters(nk.canonical().letters(), cc::Notation::kUppercase, true), "abab");
}

TEST(Counting, ClosedFormsMatchMatrices) {
  for (const auto& name : cc::preset_names()) {
    const auto s = cc::preset_surface(name);
    for (std::size_t n = 1; n <= 12; ++n) {
      EXPECT_EQ(cc::count_strings(s, n), cc::count_strings_closed_form(s.size(), n));
    }
  }
}

TEST(Counting, EnumerationMatchesMatrixCounts) {
  const auto s = cc::preset_surface("punctured_torus");
  for (std::size_t n = 1; n <= 9; ++n) {
    EXPECT_EQ(cc::BigInt(cc::enumerate_strings(s, n).size()), cc::count_strings(s, n));
    EXPECT_EQ(cc::BigInt(cc::enumerate_joinable(s, n).size()), cc::count_joinable(s, n));
  }
}

TEST(Counting, TraceWithExponentNMinusOneIsNotJoinableCount) {
  // The joinable count is trace((B - A)^n); one power fewer gives a different number.
  const auto s = cc::preset_surface("punctured_torus");
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_NE(cc::BigInt(cc::enumerate_joinable(s, n).size()), cc::count_joinable(s, n - 1));
  }
}

TEST(Counting, NecklaceCountsAgreeWithBurnside) {
  // Oracle: Burnside over rotations. Necklaces = (1/n) sum_{d | n} phi(n/d) |J_d|.
  const auto s = cc::preset_surface("punctured_torus");
  auto phi = [](std::size_t m) {
    std::size_t r = 0;
    for (std::size_t i = 1; i <= m; ++i) r += std::gcd(i, m) == 1;
    return r;
  };
  for (std::size_t n = 1; n <= 10; ++n) {
    cc::BigInt sum = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) sum += cc::BigInt(phi(n / d)) * cc::count_joinable(s, d);
    const auto c = cc::count_necklaces(s, n);
    EXPECT_EQ(cc::BigInt(c.necklaces) * n, sum) << "n=" << n;
    EXPECT_EQ(cc::BigInt(c.joinable), cc::count_joinable(s, n));
    EXPECT_LE(c.primitive, c.necklaces);
  }
}

TEST(Counting, JoinableClosedFormAndPrimitiveNecklaces) {
  for (const auto& name : cc::preset_names()) {
    const auto s = cc::preset_surface(name);
    for (std::size_t n = 1; n <= 9; ++n) {
      EXPECT_EQ(cc::count_joinable_closed_form(s.size(), n), cc::count_joinable(s, n));
      EXPECT_EQ(cc::BigInt(cc::count_necklaces(s, n).primitive), cc::count_primitive_necklaces(s.size(), n));
    }
  }
  EXPECT_EQ(cc::count_joinable_closed_form(4, 200), cc::count_joinable(cc::preset_surface("punctured_torus"), 200));
}

TEST(Counting, SmallTableForPuncturedTorus) {
  const auto s = cc::preset_surface("punctured_torus");
  const auto c = cc::count_necklaces(s, 6);
  EXPECT_EQ(c.necklaces, 132u);
  EXPECT_EQ(c.primitive, 116u);
}

TEST(Enumeration, NecklacesAreDistinctAndCanonical) {
  const auto s = cc::preset_surface("genus2_one_boundary");
  std::set<cc::Necklace> seen;
  for (const auto& nk : cc::enumerate_necklaces(s, 4)) {
    EXPECT_EQ(cc::least_rotation(nk.canonical().letters()), 0u);
    EXPECT_TRUE(seen.insert(nk).second);
  }
}

TEST(Enumeration, EarlyStop) {
  const auto s = cc::preset_surface("punctured_torus");
  int visits = 0;
  const bool finished = cc::for_each_string(s, 6, [&](std::span<const Letter>) { return ++visits < 10; });
  EXPECT_FALSE(finished);
  EXPECT_EQ(visits, 10);
}

TEST(Feasibility, DeskLimit) {
  const auto s = cc::preset_surface("punctured_torus");
  EXPECT_TRUE(cc::within_desk_limit(s, 18));
  EXPECT_FALSE(cc::within_desk_limit(s, 19));
  EXPECT_THROW(cc::require_feasible(s, 30, false), cc::InfeasibleError);
  EXPECT_NO_THROW(cc::require_feasible(s, 30, true));
}

}  // namespace
