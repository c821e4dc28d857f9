#include "curvecount/word.hpp"

#include <cmath>

namespace curvecount {

bool is_reduced(const Surface& surface, std::span<const Letter> letters) {
  for (Letter x : letters) {
    if (!surface.contains(x)) throw InputError("letter not in alphabet");
  }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i + 1] == surface.inverse(letters[i])) return false;
  }
  return true;
}

bool is_joinable(const Surface& surface, std::span<const Letter> letters) {
  if (letters.empty() || !is_reduced(surface, letters)) return false;
  return letters.back() != surface.inverse(letters.front());
}

Word::Word(const Surface& surface, std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InputError("empty word");
  if (!is_reduced(surface, letters_)) {
    throw InputError("word is not reduced: " + surface.format_letters(letters_));
  }
}

JoinableWord::JoinableWord(const Surface& surface, std::vector<Letter> letters)
    : Word(surface, std::move(letters)) {
  if (letters_.back() == surface.inverse(letters_.front())) {
    throw InputError("word is not joinable (last letter inverts the first): " +
                     surface.format_letters(letters_));
  }
}

JoinableWord JoinableWord::rotated(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(letters_.size());
  if (n == 0) return *this;
  const std::ptrdiff_t s = ((i % n) + n) % n;
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) out.push_back(letters_[static_cast<std::size_t>((s + k) % n)]);
  return JoinableWord(Trusted{}, std::move(out));
}

JoinableWord cyclic_shift(const JoinableWord& w, std::ptrdiff_t i) { return w.rotated(i); }

std::size_t least_rotation(std::span<const Letter> w) {
  // Two-candidate scan for the minimal cyclic shift.
  const std::size_t n = w.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = w[(i + k) % n];
    const Letter b = w[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::size_t rotation_period(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  // Prefix function; the smallest period is n - border when it divides n.
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t q = 1; q < n; ++q) {
    std::size_t k = pi[q - 1];
    while (k > 0 && w[q] != w[k]) k = pi[k - 1];
    if (w[q] == w[k]) ++k;
    pi[q] = k;
  }
  const std::size_t p = n - pi[n - 1];
  return n % p == 0 ? p : n;
}

Necklace necklace_of(const JoinableWord& w) {
  Necklace nk;
  nk.canonical_ = w.rotated(static_cast<std::ptrdiff_t>(least_rotation(w.letters())));
  nk.period_ = rotation_period(w.letters());
  return nk;
}

JoinableWord unhook(const Necklace& nk, std::ptrdiff_t at) { return nk.canonical().rotated(at); }

BigMatrix nonbacktracking_power(const Surface& surface, unsigned m) {
  const auto g = static_cast<std::size_t>(surface.size());
  BigMatrix result(g, std::vector<BigInt>(g, 0));
  for (std::size_t i = 0; i < g; ++i) result[i][i] = 1;
  BigMatrix base(g, std::vector<BigInt>(g, 1));
  for (std::size_t i = 0; i < g; ++i) base[i][surface.inverse(Letter(static_cast<int>(i))).id] = 0;

  auto multiply = [g](const BigMatrix& a, const BigMatrix& b) {
    BigMatrix c(g, std::vector<BigInt>(g, 0));
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t k = 0; k < g; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j = 0; j < g; ++j) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };
  for (unsigned e = m; e > 0; e >>= 1) {
    if (e & 1U) result = multiply(result, base);
    if (e > 1) base = multiply(base, base);
  }
  return result;
}

BigInt count_strings(const Surface& surface, std::size_t n) {
  if (n == 0) return 1;
  const auto p = nonbacktracking_power(surface, static_cast<unsigned>(n - 1));
  BigInt total = 0;
  for (const auto& row : p)
    for (const auto& v : row) total += v;
  return total;
}

BigInt count_joinable(const Surface& surface, std::size_t n) {
  if (n == 0) return 0;
  const auto p = nonbacktracking_power(surface, static_cast<unsigned>(n));
  BigInt tr = 0;
  for (std::size_t i = 0; i < p.size(); ++i) tr += p[i][i];
  return tr;
}

BigInt count_strings_closed_form(int g, std::size_t n) {
  if (n == 0) return 1;
  return BigInt(g) * big_pow(BigInt(g - 1), static_cast<unsigned>(n - 1));
}

BigInt count_joinable_closed_form(int g, std::size_t n) {
  if (n == 0) return 0;
  BigInt r = big_pow(BigInt(g - 1), static_cast<unsigned>(n)) + g / 2;
  if (n % 2 == 0) r += g / 2 - 1;
  else r -= g / 2 - 1;
  return r;
}

namespace {

int moebius(std::size_t m) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    mu = -mu;
  }
  return m > 1 ? -mu : mu;
}

}  // namespace

BigInt count_primitive_necklaces(int g, std::size_t d) {
  if (d == 0) return 0;
  BigInt sum = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = moebius(d / e);
    if (mu != 0) sum += mu * count_joinable_closed_form(g, e);
  }
  return sum / d;
}

bool within_desk_limit(const Surface& surface, std::size_t n) {
  return static_cast<double>(n) * std::log(static_cast<double>(surface.size() - 1)) <=
         std::log(kDeskLimit) + 1e-12;
}

void require_feasible(const Surface& surface, std::size_t n, bool force) {
  if (force || within_desk_limit(surface, n)) return;
  throw InfeasibleError("exhaustive computation at n=" + std::to_string(n) + " with g=" +
                        std::to_string(surface.size()) +
                        " exceeds the desk limit (g-1)^n <= 1e9; pass --force to run anyway");
}

std::vector<Word> enumerate_strings(const Surface& surface, std::size_t n) {
  std::vector<Word> out;
  for_each_string(surface, n, [&](std::span<const Letter> w) {
    out.emplace_back(surface, std::vector<Letter>(w.begin(), w.end()));
    return true;
  });
  return out;
}

std::vector<JoinableWord> enumerate_joinable(const Surface& surface, std::size_t n) {
  std::vector<JoinableWord> out;
  for_each_joinable(surface, n, [&](std::span<const Letter> w) {
    out.emplace_back(surface, std::vector<Letter>(w.begin(), w.end()));
    return true;
  });
  return out;
}

std::vector<Necklace> enumerate_necklaces(const Surface& surface, std::size_t n) {
  std::vector<Necklace> out;
  for_each_necklace(surface, n, [&](std::span<const Letter> w, std::size_t) {
    out.push_back(necklace_of(JoinableWord(surface, std::vector<Letter>(w.begin(), w.end()))));
    return true;
  });
  return out;
}

NecklaceCounts count_necklaces(const Surface& surface, std::size_t n) {
  NecklaceCounts c;
  for_each_necklace(surface, n, [&](std::span<const Letter> w, std::size_t period) {
    ++c.necklaces;
    c.primitive += period == w.size();
    c.joinable += period;
    return true;
  });
  return c;
}

}  // namespace curvecount
