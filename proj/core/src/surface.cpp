#include "curvecount/surface.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

std::string to_upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool valid_generator_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Union-find over polygon vertices.
struct Components {
  std::vector<int> parent;
  explicit Components(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Surface::Surface(std::vector<int> inverse, std::vector<Letter> reference,
                 std::vector<std::string> names, std::string id)
    : inverse_(std::move(inverse)),
      reference_(std::move(reference)),
      names_(std::move(names)),
      id_(std::move(id)) {
  const int g = size();
  if (g < 4 || g % 2 != 0) {
    throw InputError("alphabet size must be even and at least 4, got " +
                     std::to_string(g));
  }
  if (g > 0xFFFF) throw InputError("alphabet too large");
  for (int x = 0; x < g; ++x) {
    const int y = inverse_[x];
    if (y < 0 || y >= g) throw InputError("inverse pairing refers to an unknown letter");
    if (y == x) throw InputError("inverse pairing has a fixed point");
    if (inverse_[y] != x) throw InputError("inverse pairing is not an involution");
  }
  if (static_cast<int>(reference_.size()) != g) {
    throw InputError("reference word must have length " + std::to_string(g));
  }
  position_.assign(static_cast<std::size_t>(g), -1);
  for (int p = 0; p < g; ++p) {
    const Letter x = reference_[static_cast<std::size_t>(p)];
    if (x.id >= g) throw InputError("reference word contains an unknown letter");
    if (position_[x.id] != -1) {
      throw InputError("reference word repeats a letter; each letter must occur exactly once");
    }
    position_[x.id] = p;
  }
  if (names_.size() != static_cast<std::size_t>(g)) {
    throw InputError("one name per letter is required");
  }
}

std::vector<std::string> Surface::generator_names() const {
  std::vector<std::string> out;
  for (int x = 0; x < size(); ++x) {
    if (x < inverse_[x]) out.push_back(names_[x]);
  }
  return out;
}

std::string Surface::describe(Notation notation) const {
  std::string out;
  const auto gens = generator_names();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ' ';
    out += gens[i];
  }
  out += '\n';
  out += format_letters(reference_, notation);
  out += '\n';
  return out;
}

Letter Surface::parse_letter(std::string_view token) const {
  std::string tok(token);
  bool primed = false;
  if (!tok.empty() && tok.back() == '\'') {
    primed = true;
    tok.pop_back();
  }
  for (int x = 0; x < size(); ++x) {
    if (x > inverse_[x]) continue;  // generators are the smaller id of a pair
    if (names_[x] == tok) return primed ? Letter(inverse_[x]) : Letter(x);
    if (!primed && names_[inverse_[x]] == tok) return Letter(inverse_[x]);
  }
  throw InputError("unknown letter '" + std::string(token) + "'");
}

std::string Surface::format_letter(Letter x, Notation notation) const {
  if (notation == Notation::kPrime && x.id > inverse_[x.id]) {
    return names_[inverse_[x.id]] + "'";
  }
  return names_[x.id];
}

std::vector<Letter> Surface::parse_letters(std::string_view text) const {
  auto tokens = split_ws(text);
  const auto gens = generator_names();
  const bool single_char = std::all_of(gens.begin(), gens.end(),
                                       [](const std::string& s) { return s.size() == 1; });
  std::vector<Letter> out;
  if (tokens.size() == 1 && single_char && tokens[0].size() > 1) {
    const std::string& t = tokens[0];
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::string tok(1, t[i]);
      if (i + 1 < t.size() && t[i + 1] == '\'') {
        tok += '\'';
        ++i;
      }
      out.push_back(parse_letter(tok));
    }
    return out;
  }
  for (const auto& tok : tokens) out.push_back(parse_letter(tok));
  return out;
}

std::string Surface::format_letters(std::span<const Letter> w, Notation notation,
                                    bool compact) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !compact) out += ' ';
    out += format_letter(w[i], notation);
  }
  return out;
}

Surface build_surface(int g, const std::vector<std::pair<int, int>>& pairing,
                      const std::vector<int>& reference) {
  if (g < 4 || g % 2 != 0) {
    throw InputError("alphabet size must be even and at least 4, got " + std::to_string(g));
  }
  if (static_cast<int>(pairing.size()) * 2 != g) {
    throw InputError("pairing must cover all letters with g/2 pairs");
  }
  if (g / 2 > 26) throw InputError("at most 26 generators can be auto-named");
  std::vector<int> inverse(static_cast<std::size_t>(g), -1);
  std::vector<std::string> names(static_cast<std::size_t>(g));
  char next = 'a';
  for (auto [x, y] : pairing) {
    if (x < 0 || x >= g || y < 0 || y >= g) throw InputError("pairing refers to an unknown letter");
    if (x == y) throw InputError("inverse pairing has a fixed point");
    if (inverse[x] != -1 || inverse[y] != -1) {
      throw InputError("inverse pairing is not an involution");
    }
    inverse[x] = y;
    inverse[y] = x;
    // Generators are the smaller id of each pair.
    const int lo = std::min(x, y), hi = std::max(x, y);
    names[lo] = std::string(1, next);
    names[hi] = std::string(1, static_cast<char>(std::toupper(next)));
    ++next;
  }
  std::vector<Letter> ref;
  for (int r : reference) {
    if (r < 0 || r >= g) throw InputError("reference word contains an unknown letter");
    ref.emplace_back(r);
  }
  return Surface(std::move(inverse), std::move(ref), std::move(names));
}

Surface surface_from_names(const std::vector<std::string>& generators,
                           std::string_view reference_word, Notation notation,
                           std::string id) {
  const int g = static_cast<int>(generators.size()) * 2;
  std::vector<int> inverse(static_cast<std::size_t>(g));
  std::vector<std::string> names(static_cast<std::size_t>(g));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& name = generators[i];
    if (!valid_generator_name(name)) {
      throw InputError("generator names must be lowercase identifiers, got '" + name + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[j] == name) throw InputError("duplicate generator name '" + name + "'");
    }
    inverse[2 * i] = static_cast<int>(2 * i + 1);
    inverse[2 * i + 1] = static_cast<int>(2 * i);
    names[2 * i] = name;
    names[2 * i + 1] = to_upper(name);
  }
  // Parse the reference word with a provisional surface whose reference is
  // the identity order; the real one is validated by the constructor below.
  std::vector<Letter> identity;
  for (int x = 0; x < g; ++x) identity.emplace_back(x);
  const Surface provisional(inverse, identity, names);
  std::vector<Letter> ref;
  for (const auto& tok : split_ws(reference_word)) {
    if (notation == Notation::kUppercase && tok.back() == '\'') {
      throw InputError("prime notation used but uppercase notation selected: '" + tok + "'");
    }
    if (notation == Notation::kPrime && std::isupper(static_cast<unsigned char>(tok[0]))) {
      throw InputError("uppercase letter used but prime notation selected: '" + tok + "'");
    }
    ref.push_back(provisional.parse_letter(tok));
  }
  return Surface(std::move(inverse), std::move(ref), std::move(names), std::move(id));
}

Surface parse_surface_description(std::string_view text, Notation notation, std::string id) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() != 2) {
    throw InputError("surface file must have two lines: generator names, then the reference word");
  }
  return surface_from_names(split_ws(lines[0]), lines[1], notation, std::move(id));
}

GluingReport analyze_gluing(const Surface& surface) {
  // Polygon with 2g sides: labelled edge e_p runs from vertex 2p to 2p+1,
  // unlabelled edge f_p from 2p+1 to 2p+2. The edge labelled x is glued to
  // the one labelled inverse(x) with reversed direction.
  const int g = surface.size();
  const int nv = 2 * g;
  Components vertices(nv);
  std::vector<int> partner(static_cast<std::size_t>(g));
  bool orientable = true;
  for (int p = 0; p < g; ++p) {
    const Letter x = surface.at_position(p);
    const int q = surface.position(surface.inverse(x));
    partner[p] = q;
    if (surface.inverse(surface.at_position(q)) != x) orientable = false;
    vertices.unite(2 * p, (2 * q + 1) % nv);
    vertices.unite((2 * p + 1) % nv, 2 * q);
  }
  int v = 0;
  for (int i = 0; i < nv; ++i) v += vertices.find(i) == i;

  // Boundary: after f_p we arrive at the start of e_{p+1}, which is glued to
  // the end of its partner, where f_{partner} begins.
  std::vector<bool> seen(static_cast<std::size_t>(g), false);
  int cycles = 0;
  for (int p = 0; p < g; ++p) {
    if (seen[p]) continue;
    ++cycles;
    for (int cur = p; !seen[cur]; cur = partner[(cur + 1) % g]) seen[cur] = true;
  }

  GluingReport r;
  r.vertices = v;
  r.edges = g / 2 + g;
  r.faces = 1;
  r.euler_characteristic = r.vertices - r.edges + r.faces;
  r.boundary_components = cycles;
  r.genus = (2 - r.euler_characteristic - r.boundary_components) / 2;
  r.orientable = orientable;
  return r;
}

namespace {

struct Preset {
  std::string_view name;
  std::vector<std::string> generators;
  std::string_view reference;
};

const std::vector<Preset>& presets() {
  static const std::vector<Preset> kPresets = {
      {"punctured_torus", {"a", "b"}, "a b A B"},
      {"pair_of_pants", {"a", "b"}, "a A b B"},
      {"genus2_one_boundary", {"a", "b", "c", "d"}, "a b A B c d C D"},
  };
  return kPresets;
}

}  // namespace

Surface preset_surface(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name != name) continue;
    Surface s = surface_from_names(p.generators, p.reference, Notation::kUppercase,
                                   std::string(p.name));
    const auto report = analyze_gluing(s);
    if (!report.orientable || report.boundary_components < 1 ||
        report.euler_characteristic != s.euler_characteristic()) {
      throw std::logic_error("preset '" + std::string(name) + "' failed gluing analysis");
    }
    return s;
  }
  throw InputError("unknown surface preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : presets()) out.emplace_back(p.name);
  return out;
}

bool is_preset(std::string_view name) {
  const auto& ps = presets();
  return std::any_of(ps.begin(), ps.end(), [&](const Preset& p) { return p.name == name; });
}

int cyclic_order(const Surface& surface, std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  if (n != 3 && n != 4) throw InputError("cyclic order takes 3 or 4 letters");
  int pos[4];
  for (std::size_t i = 0; i < n; ++i) {
    if (!surface.contains(letters[i])) throw InputError("letter not in alphabet");
    pos[i] = surface.position(letters[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (pos[j] == pos[i]) return 0;
    }
  }
  // Distinct points read in order wrap around the circle exactly once iff
  // they are clockwise; exactly n-1 times iff counterclockwise.
  int descents = 0;
  for (std::size_t i = 0; i < n; ++i) descents += pos[(i + 1) % n] < pos[i];
  if (descents == 1) return 1;
  if (descents == static_cast<int>(n) - 1) return -1;
  return 0;
}

int cyclic_order(const Surface& surface, Letter a, Letter b, Letter c) {
  const Letter t[3] = {a, b, c};
  return cyclic_order(surface, t);
}

int cyclic_order(const Surface& surface, Letter a, Letter b, Letter c, Letter d) {
  const Letter t[4] = {a, b, c, d};
  return cyclic_order(surface, t);
}

int gap(const Surface& surface, Letter x, Letter y) {
  if (!surface.contains(x) || !surface.contains(y)) throw InputError("letter not in alphabet");
  const Letter xbar = surface.inverse(x);
  if (y == xbar) throw InputError("gap undefined: adjacent letters are inverses");
  const int g = surface.size();
  return ((surface.position(y) - surface.position(xbar) - 1) % g + g) % g;
}

int gap_counterclockwise(const Surface& surface, Letter x, Letter y) {
  if (!surface.contains(x) || !surface.contains(y)) throw InputError("letter not in alphabet");
  const Letter xbar = surface.inverse(x);
  if (y == xbar) throw InputError("gap undefined: adjacent letters are inverses");
  const int g = surface.size();
  return ((surface.position(xbar) - surface.position(y) - 1) % g + g) % g;
}

std::uint64_t surface_hash(const Surface& surface) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : surface.describe()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace curvecount
