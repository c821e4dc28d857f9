#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace curvecount {

/// A generator or inverse generator, identified by a dense index in [0, g).
struct Letter {
  std::uint16_t id = 0;

  constexpr Letter() = default;
  constexpr explicit Letter(int i) : id(static_cast<std::uint16_t>(i)) {}

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// How inverses are spelled in text: `A` for the inverse of `a`, or `a'`.
enum class Notation { kUppercase, kPrime };

/// Result of gluing the labelled polygon and inspecting the complex.
struct GluingReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  int boundary_components = 0;
  int genus = 0;
  bool orientable = false;
};

/// An orientable surface with boundary, described by an alphabet with an
/// inverse involution and the cyclic reference word listing every letter
/// once. The reference word fixes the cyclic order used by all intersection
/// kernels; clockwise means increasing index in it.
///
/// Immutable after construction.
class Surface {
 public:
  /// Validating constructor. `inverse` must be a fixed-point-free
  /// involution on [0, g); `reference` a permutation of [0, g).
  /// `names[x]` is the printed form of letter x (inverses included).
  Surface(std::vector<int> inverse, std::vector<Letter> reference,
          std::vector<std::string> names, std::string id = {});

  int size() const { return static_cast<int>(inverse_.size()); }
  int euler_characteristic() const { return 1 - size() / 2; }
  const std::string& id() const { return id_; }

  Letter inverse(Letter x) const { return Letter(inverse_[x.id]); }
  int position(Letter x) const { return position_[x.id]; }
  Letter at_position(int p) const { return reference_[static_cast<std::size_t>(p)]; }
  std::span<const Letter> reference() const { return reference_; }

  bool contains(Letter x) const { return x.id < inverse_.size(); }

  const std::string& name(Letter x) const { return names_[x.id]; }
  std::vector<std::string> generator_names() const;

  /// Canonical text form (the two-line surface file), used for hashing.
  std::string describe(Notation notation = Notation::kUppercase) const;

  /// Parses one letter token such as `a`, `A` or `a'`.
  Letter parse_letter(std::string_view token) const;
  std::string format_letter(Letter x, Notation notation) const;

  /// Parses a space-separated word, or a compact one (`abCa`) when every
  /// generator name is a single character. Does not check reducedness.
  std::vector<Letter> parse_letters(std::string_view text) const;
  std::string format_letters(std::span<const Letter> w,
                             Notation notation = Notation::kUppercase,
                             bool compact = false) const;

 private:
  std::vector<int> inverse_;
  std::vector<Letter> reference_;
  std::vector<int> position_;
  std::vector<std::string> names_;
  std::string id_;
};

/// Builds a surface from a generic pairing. Letters are named `a`, `b`, ...
/// in order of the first member of each pair; the second member is the
/// uppercase inverse. Throws InputError on every violated precondition.
Surface build_surface(int g, const std::vector<std::pair<int, int>>& pairing,
                      const std::vector<int>& reference);

/// Builds a surface from generator names and a reference word written in the
/// given notation. Generator i gets id 2i and its inverse 2i+1.
Surface surface_from_names(const std::vector<std::string>& generators,
                           std::string_view reference_word,
                           Notation notation = Notation::kUppercase,
                           std::string id = {});

/// Parses the two-line surface description format.
Surface parse_surface_description(std::string_view text,
                                  Notation notation = Notation::kUppercase,
                                  std::string id = {});

/// Glues alternate edges of a 2g-gon per the reference word and reports
/// V - E + F, the number of boundary cycles and the resulting genus.
GluingReport analyze_gluing(const Surface& surface);

/// Presets: punctured_torus (a b A B), pair_of_pants (a A b B),
/// genus2_one_boundary (a b A B c d C D). Each is checked with
/// analyze_gluing before being returned.
Surface preset_surface(std::string_view name);
std::vector<std::string> preset_names();
bool is_preset(std::string_view name);

/// Cyclic order of 3 or 4 letters in the reference word: +1 clockwise,
/// -1 counterclockwise, 0 otherwise (including any repeated letter).
int cyclic_order(const Surface& surface, std::span<const Letter> letters);
int cyclic_order(const Surface& surface, Letter a, Letter b, Letter c);
int cyclic_order(const Surface& surface, Letter a, Letter b, Letter c, Letter d);

/// Number of letters strictly between inverse(x) and y, clockwise.
/// Throws InputError when y == inverse(x).
int gap(const Surface& surface, Letter x, Letter y);

/// Same count taken counterclockwise; gap + gap_counterclockwise == g - 2.
int gap_counterclockwise(const Surface& surface, Letter x, Letter y);

/// 64-bit FNV-1a of the canonical description.
std::uint64_t surface_hash(const Surface& surface);

}  // namespace curvecount
