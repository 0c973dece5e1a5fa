// Orbit enumeration over Neck(n, j).
//
// The parallel kernel walks the j-subsets of {0..n-1} in colex order (which
// is increasing mask order), split into contiguous chunks. A subset is kept
// iff it is the least rotation of itself, so each chunk yields canonical
// representatives already sorted and the concatenation needs no merge.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_set>

#include <omp.h>

#include "gwbinom/necklace.hpp"

namespace gwbinom::necklace {
namespace {

using BinomTable = std::array<std::array<std::uint64_t, kMaxBeads + 1>, kMaxBeads + 1>;

const BinomTable& binom_table() {
  static const BinomTable table = [] {
    BinomTable t{};
    for (int a = 0; a <= kMaxBeads; ++a) {
      t[a][0] = 1;
      for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
    }
    return t;
  }();
  return table;
}

// The j-subset of colex rank r.
Mask unrank_colex(std::uint64_t r, int j) {
  const auto& c = binom_table();
  Mask m = 0;
  int hi = kMaxBeads;
  for (int i = j; i >= 1; --i) {
    int pos = i - 1;
    while (pos + 1 < hi && c[pos + 1][i] <= r) ++pos;
    r -= c[pos][i];
    m |= Mask{1} << pos;
    hi = pos;
  }
  return m;
}

Mask next_subset(Mask m) {
  const Mask low = m & (~m + 1);
  const Mask ripple = m + low;
  return ripple | (((m ^ ripple) >> 2) / low);
}

Mask rot(Mask m, int k, int n) { return ((m << k) | (m >> (n - k))) & full_mask(n); }

bool is_least_rotation(Mask m, int n) {
  for (int k = 1; k < n; ++k) {
    if (rot(m, k, n) < m) return false;
  }
  return true;
}

void validate(int n, int j) {
  if (n < 1 || n > kMaxBeads) throw LimitExceeded("n = " + std::to_string(n) + " outside [1, 63]");
  if (j < 0 || j > n) throw std::invalid_argument("need 0 <= j <= n");
}

}  // namespace

std::vector<OrbitRecord> enumerate_orbits(int n, int j) {
  validate(n, j);
  const std::uint64_t total = binom_table()[n][j];
  const auto chunks = static_cast<std::int64_t>(
      std::min<std::uint64_t>(total, std::uint64_t{4} * static_cast<std::uint64_t>(omp_get_max_threads()) * 16));
  std::vector<std::vector<OrbitRecord>> found(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
    const std::uint64_t end = total * static_cast<std::uint64_t>(c + 1) / static_cast<std::uint64_t>(chunks);
    Mask m = unrank_colex(begin, j);
    for (std::uint64_t i = begin; i < end; ++i) {
      if (is_least_rotation(m, n)) found[static_cast<std::size_t>(c)].push_back(make_orbit_record({n, m}));
      if (i + 1 < end) m = next_subset(m);
    }
  }

  std::vector<OrbitRecord> out;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

namespace reference {

std::vector<OrbitRecord> enumerate_orbits(int n, int j) {
  validate(n, j);
  std::vector<OrbitRecord> out;
  std::unordered_set<Mask> visited;

  const std::uint64_t total = binom_table()[n][j];
  Mask m = full_mask(j);
  for (std::uint64_t i = 0; i < total; ++i, m = (i < total ? next_subset(m) : m)) {
    if (visited.contains(m)) continue;

    std::set<Mask> orbit;
    Necklace x{n, m};
    do {
      orbit.insert(x.blues());
      x = rotate(x, 1);
    } while (x.blues() != m);
    visited.insert(orbit.begin(), orbit.end());

    OrbitRecord rec;
    rec.canonical = Necklace{n, *orbit.begin()};
    rec.period = static_cast<int>(orbit.size());
    rec.flip_fixed = orbit.contains(flip(rec.canonical).blues());

    // Every pair (representative, reflection) fixing it, moved back onto the
    // canonical representative: (r^k l, m) corresponds to (l, m - 2k).
    std::set<int> exponents;
    for (int k = 0; k < n; ++k) {
      const Necklace rep = rotate(rec.canonical, k);
      for (int a = 0; a < n; ++a) {
        if (reflect(rep, a) == rep) exponents.insert(((a - 2 * k) % n + n) % n);
      }
    }
    // Classes of exponents under rotations that fix the canonical representative.
    std::map<int, int> class_min;
    std::set<int> seen;
    for (int a : exponents) {
      if (seen.contains(a)) continue;
      int least = a;
      for (int k = 0; k < n; ++k) {
        if (rotate(rec.canonical, k) != rec.canonical) continue;
        const int b = ((a + 2 * k) % n + n) % n;
        seen.insert(b);
        least = std::min(least, b);
      }
      class_min[least] = least;
    }
    for (const auto& [least, unused] : class_min) rec.axes.push_back({least, axis_type(n, least)});
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) { return a.canonical < b.canonical; });
  return out;
}

}  // namespace reference

}  // namespace gwbinom::necklace
