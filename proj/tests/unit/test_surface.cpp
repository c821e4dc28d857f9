#include <gtest/gtest.h>

#include <stdexcept>

#include "curvecount/errors.hpp"
#include "curvecount/surface.hpp"

namespace cc = curvecount;
using cc::Letter;

namespace {

Letter L(const cc::Surface& s, const char* name) { return s.parse_letter(name); }

TEST(Surface, PresetsHaveExpectedTopology) {
  const auto torus = cc::analyze_gluing(cc::preset_surface("punctured_torus"));
  EXPECT_EQ(torus.euler_characteristic, -1);
  EXPECT_EQ(torus.boundary_components, 1);
  EXPECT_EQ(torus.genus, 1);

  const auto pants = cc::analyze_gluing(cc::preset_surface("pair_of_pants"));
  EXPECT_EQ(pants.euler_characteristic, -1);
  EXPECT_EQ(pants.boundary_components, 3);
  EXPECT_EQ(pants.genus, 0);

  const auto g2 = cc::analyze_gluing(cc::preset_surface("genus2_one_boundary"));
  EXPECT_EQ(g2.euler_characteristic, -3);
  EXPECT_EQ(g2.boundary_components, 1);
  EXPECT_EQ(g2.genus, 2);
  EXPECT_TRUE(g2.orientable);
}

TEST(Surface, EulerCharacteristicFromAlphabetSize) {
  for (const auto& name : cc::preset_names()) {
    const auto s = cc::preset_surface(name);
    EXPECT_EQ(s.euler_characteristic(), cc::analyze_gluing(s).euler_characteristic) << name;
  }
}

TEST(Surface, UnknownPresetThrows) {
  EXPECT_FALSE(cc::is_preset("klein_bottle"));
  EXPECT_THROW(cc::preset_surface("klein_bottle"), cc::InputError);
}

TEST(Surface, InverseIsInvolutionWithoutFixedPoints) {
  const auto s = cc::preset_surface("genus2_one_boundary");
  for (int x = 0; x < s.size(); ++x) {
    EXPECT_NE(s.inverse(Letter(x)), Letter(x));
    EXPECT_EQ(s.inverse(s.inverse(Letter(x))), Letter(x));
  }
}

TEST(Surface, RejectsMalformedDescriptions) {
  // Reference word missing a letter.
  EXPECT_THROW(cc::surface_from_names({"a", "b"}, "a b A", cc::Notation::kUppercase, "x"), cc::InputError);
  // Letter listed twice.
  EXPECT_THROW(cc::surface_from_names({"a", "b"}, "a b A a", cc::Notation::kUppercase, "x"), cc::InputError);
  // Unknown letter.
  EXPECT_THROW(cc::surface_from_names({"a", "b"}, "a b A C", cc::Notation::kUppercase, "x"), cc::InputError);
}

TEST(Surface, ParsesDescriptionFileWithComments) {
  const auto s = cc::parse_surface_description("# torus\n\na b\na b A B\n", cc::Notation::kUppercase, "t");
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(cc::analyze_gluing(s).genus, 1);
}

TEST(Surface, PrimeNotationRoundTrip) {
  const auto s = cc::preset_surface("punctured_torus");
  const auto w = s.parse_letters("a b A B");
  EXPECT_EQ(s.format_letters(w, cc::Notation::kPrime), "a b a' b'");
  EXPECT_EQ(s.parse_letters("a b a' b'"), w);
  EXPECT_EQ(s.parse_letters("abAB"), w);
}

TEST(Surface, ParseRejectsUnknownLetters) {
  const auto s = cc::preset_surface("punctured_torus");
  EXPECT_THROW(s.parse_letters("a z"), cc::InputError);
  EXPECT_THROW(s.parse_letter("c"), cc::InputError);
}

TEST(CyclicOrder, ClockwiseAndCounterclockwise) {
  const auto s = cc::preset_surface("genus2_one_boundary");  // a b A B c d C D
  EXPECT_EQ(cc::cyclic_order(s, L(s, "a"), L(s, "b"), L(s, "c")), 1);
  EXPECT_EQ(cc::cyclic_order(s, L(s, "c"), L(s, "b"), L(s, "a")), -1);
  // Cyclic rotations of a clockwise triple stay clockwise.
  EXPECT_EQ(cc::cyclic_order(s, L(s, "c"), L(s, "a"), L(s, "b")), 1);
  EXPECT_EQ(cc::cyclic_order(s, L(s, "a"), L(s, "b"), L(s, "A"), L(s, "D")), 1);
  EXPECT_EQ(cc::cyclic_order(s, L(s, "D"), L(s, "A"), L(s, "b"), L(s, "a")), -1);
  // Neither cyclic arrangement.
  EXPECT_EQ(cc::cyclic_order(s, L(s, "a"), L(s, "A"), L(s, "b"), L(s, "B")), 0);
}

TEST(CyclicOrder, RepeatedLetterGivesZero) {
  const auto s = cc::preset_surface("punctured_torus");
  EXPECT_EQ(cc::cyclic_order(s, L(s, "a"), L(s, "a"), L(s, "b")), 0);
  EXPECT_EQ(cc::cyclic_order(s, L(s, "a"), L(s, "b"), L(s, "A"), L(s, "a")), 0);
}

TEST(CyclicOrder, AgreesWithDescentCountOracle) {
  // Oracle: a tuple is clockwise iff exactly one cyclic step decreases in position.
  const auto s = cc::preset_surface("genus2_one_boundary");
  const int g = s.size();
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int c = 0; c < g; ++c) {
        if (a == b || b == c || a == c) continue;
        const int p[3] = {s.position(Letter(a)), s.position(Letter(b)), s.position(Letter(c))};
        int descents = 0;
        for (int i = 0; i < 3; ++i) descents += p[(i + 1) % 3] < p[i];
        const int expected = descents == 1 ? 1 : -1;
        EXPECT_EQ(cc::cyclic_order(s, Letter(a), Letter(b), Letter(c)), expected);
      }
}

TEST(Gap, CountsLettersStrictlyBetween) {
  const auto s = cc::preset_surface("punctured_torus");  // a b A B
  // gap(x, y): letters strictly between inverse(x) and y clockwise.
  EXPECT_EQ(cc::gap(s, L(s, "A"), L(s, "b")), 0);  // inverse(A) = a, next is b
  EXPECT_EQ(cc::gap(s, L(s, "A"), L(s, "B")), 2);
  EXPECT_EQ(cc::gap(s, L(s, "b"), L(s, "b")), 1);  // B, a, b
  EXPECT_THROW(cc::gap(s, L(s, "a"), L(s, "A")), cc::InputError);
}

TEST(Gap, RangeAndComplement) {
  const auto s = cc::preset_surface("genus2_one_boundary");
  const int g = s.size();
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y) {
      if (Letter(y) == s.inverse(Letter(x))) continue;
      const int j = cc::gap(s, Letter(x), Letter(y));
      EXPECT_GE(j, 0);
      EXPECT_LE(j, g - 2);
      EXPECT_EQ(j + cc::gap_counterclockwise(s, Letter(x), Letter(y)), g - 2);
    }
}

TEST(Surface, HashDependsOnReferenceOrder) {
  EXPECT_NE(cc::surface_hash(cc::preset_surface("punctured_torus")),
            cc::surface_hash(cc::preset_surface("pair_of_pants")));
  EXPECT_EQ(cc::surface_hash(cc::preset_surface("punctured_torus")),
            cc::surface_hash(cc::preset_surface("punctured_torus")));
}

}  // namespace
