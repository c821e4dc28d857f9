#include "curvecount/intersection.hpp"

#include <algorithm>
#include <cassert>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

void require_prefix(std::span<const Letter> w, std::span<const Letter> w2, std::size_t k) {
  if (k < 2) throw InputError("kernel index k must be at least 2");
  if (w.size() < k || w2.size() < k) throw InputError("kernel prefix shorter than k");
}

// Orientation test once positions 1 and k are known to differ and the
// letters strictly between agree. c and d are indexable by 0..k-1.
template <typename C, typename D>
int crossing(const Surface& s, const C& c, const D& d, std::size_t k) {
  const Letter c1bar = s.inverse(c(0));
  const Letter d1bar = s.inverse(d(0));
  if (k == 2) return cyclic_order(s, c1bar, d1bar, c(1), d(1)) != 0 ? 1 : 0;
  const int left = cyclic_order(s, c1bar, d1bar, c(1));
  const int right = cyclic_order(s, c(k - 1), d(k - 1), s.inverse(c(k - 2)));
  assert(left != 0 && right != 0);
  return left == right ? 1 : 0;
}

}  // namespace

int u_k(const Surface& surface, std::span<const Letter> w, std::span<const Letter> w2,
        std::size_t k) {
  require_prefix(w, w2, k);
  if (w[0] == w2[0] || w[k - 1] == w2[k - 1]) return 0;
  for (std::size_t j = 1; j + 1 < k; ++j) {
    if (w[j] != w2[j]) return 0;
  }
  return crossing(
      surface, [&](std::size_t i) { return w[i]; }, [&](std::size_t i) { return w2[i]; }, k);
}

int v_k(const Surface& surface, std::span<const Letter> w, std::span<const Letter> w2,
        std::size_t k) {
  require_prefix(w, w2, k);
  if (k == 2) return 0;
  std::vector<Letter> flipped(k);
  for (std::size_t m = 0; m < k; ++m) flipped[m] = surface.inverse(w2[k - 1 - m]);
  return u_k(surface, w.first(k), flipped, k);
}

int pair_kernel(const Surface& surface, std::span<const Letter> w, std::span<const Letter> w2) {
  if (w.size() != w2.size()) throw InputError("pair kernel needs words of equal length");
  int sum = 0;
  for (std::size_t k = 2; k <= w.size(); ++k) sum += u_k(surface, w, w2, k) + v_k(surface, w, w2, k);
  return sum;
}

std::size_t IntersectionResult::count(KernelKind kind, std::size_t k) const {
  return static_cast<std::size_t>(std::count_if(witnesses.begin(), witnesses.end(), [&](const Witness& w) {
    return w.kind == kind && w.k == k;
  }));
}

namespace {

template <typename Sink>
void scan_terms(const Surface& s, std::span<const Letter> alpha, std::size_t max_k, Sink&& sink) {
  const std::size_t n = alpha.size();
  if (max_k == 0 || max_k > n) max_k = n;
  auto a = [&](std::size_t idx) { return alpha[idx % n]; };

  // u-terms: rotations i < j agree from position 2 up to k-1, first
  // disagreement after position 1 at k.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alpha[i] == alpha[j]) continue;
      std::size_t m = 1;
      while (m < n && a(i + m) == a(j + m)) ++m;
      if (m == n) continue;
      const std::size_t k = m + 1;
      if (k > max_k) continue;
      const int hit = crossing(
          s, [&](std::size_t t) { return a(i + t); }, [&](std::size_t t) { return a(j + t); }, k);
      if (hit) sink(i, j, k, KernelKind::kU);
    }
  }

  // v-terms: v_k(rot_i, rot_j) = u_k(rot_i, rot_s(beta)) with beta the inverse
  // reversal of alpha and s = -(j + k) mod n.
  std::vector<Letter> beta(n);
  for (std::size_t q = 0; q < n; ++q) beta[q] = s.inverse(alpha[n - 1 - q]);
  auto b = [&](std::size_t idx) { return beta[idx % n]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      if (alpha[i] == beta[t]) continue;
      std::size_t m = 1;
      while (m < n && a(i + m) == b(t + m)) ++m;
      if (m == n) continue;
      const std::size_t k = m + 1;
      if (k < 3 || k > max_k) continue;
      const std::size_t j = (2 * n - t - k) % n;
      if (j <= i) continue;
      const int hit = crossing(
          s, [&](std::size_t q) { return a(i + q); }, [&](std::size_t q) { return b(t + q); }, k);
      if (hit) sink(i, j, k, KernelKind::kV);
    }
  }
}

void check_necklace_input(const Surface& surface, std::span<const Letter> w,
                          const IntersectionOptions& options) {
  if (w.size() < 2) throw InputError("self-intersection needs a necklace of length >= 2");
  if (!options.allow_nonprimitive && rotation_period(w) != w.size()) {
    throw NonPrimitiveError("necklace " + surface.format_letters(w) + " is a proper power (period " +
                            std::to_string(rotation_period(w)) +
                            "); the count formula applies to primitive necklaces only");
  }
}

}  // namespace

std::int64_t self_intersection_count(const Surface& surface, std::span<const Letter> alpha,
                                     std::size_t max_k) {
  std::int64_t total = 0;
  scan_terms(surface, alpha, max_k, [&](std::size_t, std::size_t, std::size_t, KernelKind) { ++total; });
  return total;
}

IntersectionResult self_intersection(const Surface& surface, const JoinableWord& unhooked,
                                     const IntersectionOptions& options) {
  const auto w = unhooked.letters();
  check_necklace_input(surface, w, options);
  IntersectionResult r;
  if (!options.record_witnesses) {
    r.total = self_intersection_count(surface, w, options.max_k);
    return r;
  }
  scan_terms(surface, w, options.max_k, [&](std::size_t i, std::size_t j, std::size_t k, KernelKind kind) {
    r.witnesses.push_back({i, j, k, kind});
  });
  std::sort(r.witnesses.begin(), r.witnesses.end());
  r.total = static_cast<std::int64_t>(r.witnesses.size());
  return r;
}

IntersectionResult self_intersection(const Surface& surface, const Necklace& nk,
                                     const IntersectionOptions& options) {
  return self_intersection(surface, nk.canonical(), options);
}

IntersectionResult self_intersection_definitional(const Surface& surface,
                                                  const JoinableWord& unhooked,
                                                  const IntersectionOptions& options) {
  check_necklace_input(surface, unhooked.letters(), options);
  const std::size_t n = unhooked.size();
  const std::size_t max_k = options.max_k == 0 ? n : std::min(options.max_k, n);
  std::vector<JoinableWord> rotations;
  for (std::size_t i = 0; i < n; ++i) rotations.push_back(unhooked.rotated(static_cast<std::ptrdiff_t>(i)));

  IntersectionResult r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 2; k <= max_k; ++k) {
        const auto x = rotations[i].letters();
        const auto y = rotations[j].letters();
        if (u_k(surface, x, y, k)) {
          ++r.total;
          if (options.record_witnesses) r.witnesses.push_back({i, j, k, KernelKind::kU});
        }
        if (v_k(surface, x, y, k)) {
          ++r.total;
          if (options.record_witnesses) r.witnesses.push_back({i, j, k, KernelKind::kV});
        }
      }
    }
  }
  std::sort(r.witnesses.begin(), r.witnesses.end());
  return r;
}

std::vector<PairSumViolation> pair_sum_violations(const Surface& surface,
                                                  const JoinableWord& unhooked) {
  const std::size_t n = unhooked.size();
  std::vector<PairSumViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto x = unhooked.rotated(static_cast<std::ptrdiff_t>(i));
      const auto y = unhooked.rotated(static_cast<std::ptrdiff_t>(j));
      const int sum = pair_kernel(surface, x.letters(), y.letters());
      if (sum > 1) out.push_back({i, j, sum});
    }
  }
  return out;
}

}  // namespace curvecount
