#include "gwbinom/necklace.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

#include "gwbinom/arith.hpp"

namespace gwbinom::necklace {
namespace {

int mod(std::int64_t a, int n) {
  const auto r = static_cast<int>(a % n);
  return r < 0 ? r + n : r;
}

Mask rotate_mask(Mask m, int k, int n) {
  if (k == 0) return m;
  return ((m << k) | (m >> (n - k))) & full_mask(n);
}

}  // namespace

int enumeration_limit() {
  if (const char* env = std::getenv("GWBINOM_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, kMaxBeads));
  }
  return kDefaultEnumerationLimit;
}

void check_enumeration_limit(int n) {
  const int limit = enumeration_limit();
  if (n > limit) {
    throw LimitExceeded("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(limit) + " (set GWBINOM_MAX_N, at most " +
                        std::to_string(kMaxBeads) + ")");
  }
}

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

Necklace::Necklace(int size, Mask blues) : size_(size), blues_(blues) {
  if (size < 1 || size > kMaxBeads) {
    throw std::invalid_argument("necklace size must be in [1, " + std::to_string(kMaxBeads) +
                                "], got " + std::to_string(size));
  }
  if ((blues & ~full_mask(size)) != 0) throw std::invalid_argument("blue bead outside the necklace");
}

Necklace Necklace::from_positions(int size, const std::vector<int>& blue_positions) {
  Mask m = 0;
  for (int p : blue_positions) {
    if (p < 0 || p >= size) throw std::invalid_argument("bead position out of range");
    m |= Mask{1} << p;
  }
  return {size, m};
}

Necklace Necklace::parse(std::string_view beads) {
  Mask m = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    switch (beads[i]) {
      case '1':
      case 'B':
        m |= Mask{1} << i;
        break;
      case '0':
      case 'R':
        break;
      default:
        throw std::invalid_argument("bad bead character '" + std::string(1, beads[i]) + "'");
    }
  }
  return {static_cast<int>(beads.size()), m};
}

int Necklace::blue_count() const { return std::popcount(blues_); }

Color Necklace::at(int position) const {
  return ((blues_ >> mod(position, size_)) & 1) != 0 ? Color::blue : Color::red;
}

std::vector<int> Necklace::blue_positions() const {
  std::vector<int> out;
  for (int p = 0; p < size_; ++p) {
    if (at(p) == Color::blue) out.push_back(p);
  }
  return out;
}

std::string Necklace::to_bitstring() const {
  std::string s(static_cast<std::size_t>(size_), '0');
  for (int p = 0; p < size_; ++p) {
    if (at(p) == Color::blue) s[static_cast<std::size_t>(p)] = '1';
  }
  return s;
}

Necklace rotate(const Necklace& l, std::int64_t k) {
  return {l.size(), rotate_mask(l.blues(), mod(k, l.size()), l.size())};
}

Necklace reflect(const Necklace& l, int m) {
  const int n = l.size();
  Mask out = 0;
  for (int p = 0; p < n; ++p) {
    if (l.at(p) == Color::blue) out |= Mask{1} << mod(std::int64_t{m} - p, n);
  }
  return {n, out};
}

Necklace flip(const Necklace& l) { return reflect(l, 0); }

Necklace color_swap(const Necklace& l) { return {l.size(), ~l.blues() & full_mask(l.size())}; }

Necklace canonical(const Necklace& l) {
  Mask best = l.blues();
  for (int k = 1; k < l.size(); ++k) best = std::min(best, rotate_mask(l.blues(), k, l.size()));
  return {l.size(), best};
}

int period(const Necklace& l) {
  for (int k = 1; k < l.size(); ++k) {
    if (rotate_mask(l.blues(), k, l.size()) == l.blues()) return k;
  }
  return l.size();
}

AxisType axis_type(int n, int m) {
  return (n % 2 == 1 || mod(m, n) % 2 == 0) ? AxisType::type2 : AxisType::type1;
}

int axis_distance_doubled(int n, int m1, int m2) {
  const int d = mod(std::int64_t{m1} - m2, n);
  return std::min(d, n - d);
}

bool OrbitRecord::has_axis(AxisType t) const {
  return std::any_of(axes.begin(), axes.end(), [t](const AxisIndex& a) { return a.type == t; });
}

OrbitRecord make_orbit_record(const Necklace& any_representative) {
  OrbitRecord rec;
  rec.canonical = canonical(any_representative);
  const int n = rec.canonical.size();
  rec.period = period(rec.canonical);

  // The reflections fixing the representative form a coset m0 + period*Z;
  // pairs (l, axis) related by a rotation fixing l identify m with m + 2*period.
  std::optional<int> m0;
  for (int m = 0; m < rec.period && !m0; ++m) {
    if (reflect(rec.canonical, m) == rec.canonical) m0 = m;
  }
  if (m0) {
    rec.flip_fixed = true;
    rec.axes.push_back({*m0, axis_type(n, *m0)});
    if ((n / rec.period) % 2 == 0) {
      const int second = *m0 + rec.period;
      rec.axes.push_back({second, axis_type(n, second)});
    }
  }
  return rec;
}

std::vector<AxisIndex> symmetry_axes(const OrbitRecord& rec) { return rec.axes; }

int axis_class_distance_doubled(const OrbitRecord& rec, const AxisIndex& a, const AxisIndex& b) {
  const int n = rec.size();
  const int step = std::gcd(2 * rec.period, n);
  int best = n;
  for (int k = 0; k < n / step; ++k) best = std::min(best, axis_distance_doubled(n, a.m, b.m + k * step));
  return best;
}

std::int64_t aperiodic_count(int n, int j) {
  if (n < 1 || j < 0 || j > n) throw std::invalid_argument("aperiodic_count: need 0 <= j <= n, n >= 1");
  BigInt acc = 0;
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    acc += arith::mobius(k) * arith::big_binomial(arith::Rational(n, k), arith::Rational(j, k));
  }
  return static_cast<std::int64_t>(acc / n);
}

std::int64_t count_even_orbits(int n, int j) {
  const auto orbits = enumerate_orbits(n, j);
  return std::count_if(orbits.begin(), orbits.end(), [](const OrbitRecord& r) { return r.period % 2 == 0; });
}

FlipFixedCounts classify_flip_fixed(int n, int j) {
  if (n % 2 != 0) throw std::invalid_argument("classify_flip_fixed: n must be even");
  FlipFixedCounts c;
  for (const auto& rec : enumerate_orbits(n, j)) {
    if (!rec.flip_fixed) continue;
    if (rec.period % 2 == 1) {
      ++c.odd_fixed;
      continue;
    }
    if (rec.has_axis(AxisType::type1)) ++c.type1_even;
    if (rec.has_axis(AxisType::type2)) ++c.type2_even;
  }
  return c;
}

OrbitPair phi_decompose(const OrbitRecord& rec) {
  const int n = rec.size();
  if (n % 2 != 0) throw std::invalid_argument("phi_decompose: n must be even");
  Mask even = 0;
  Mask odd = 0;
  for (int i = 0; i < n / 2; ++i) {
    if (rec.canonical.at(2 * i) == Color::blue) even |= Mask{1} << i;
    if (rec.canonical.at(2 * i + 1) == Color::blue) odd |= Mask{1} << i;
  }
  auto a = make_orbit_record({n / 2, even});
  auto b = make_orbit_record({n / 2, odd});
  if (b.canonical < a.canonical) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::int64_t phi_fiber_size(const OrbitPair& pair) {
  if (pair.first.size() != pair.second.size()) throw std::invalid_argument("phi_fiber_size: mismatched sizes");
  if (canonical(flip(pair.first.canonical)) != pair.second.canonical) return 0;
  const int p = pair.first.period;
  if (!pair.first.flip_fixed) return p;
  return p % 2 == 1 ? (p + 1) / 2 : p / 2;
}

OrbitRecord strip_axis_beads(const OrbitRecord& rec, const AxisIndex& axis) {
  const int n = rec.size();
  if (n % 2 != 0 || rec.blue_count() % 2 != 0) {
    throw std::invalid_argument("strip_axis_beads: n and j must be even");
  }
  if (axis.type != AxisType::type2 || axis_type(n, axis.m) != AxisType::type2) {
    throw std::invalid_argument("strip_axis_beads: axis must be of type 2");
  }
  const Necklace& l = rec.canonical;
  if (reflect(l, axis.m) != l) throw std::invalid_argument("strip_axis_beads: not a symmetry axis of the representative");
  if (n < 4) throw std::invalid_argument("strip_axis_beads: need at least 4 beads");
  const int first = axis.m / 2;
  const int second = first + n / 2;
  if (l.at(first) != l.at(second)) throw std::logic_error("strip_axis_beads: on-axis beads differ in color");

  Mask out = 0;
  int pos = 0;
  for (int k = 1; k < n; ++k) {
    const int p = first + k;
    if (p == second) continue;
    if (l.at(p) == Color::blue) out |= Mask{1} << pos;
    ++pos;
  }
  return make_orbit_record({n - 2, out});
}

OrbitRecord insert_axis_beads(const OrbitRecord& rec, Color color) {
  const auto axis = std::find_if(rec.axes.begin(), rec.axes.end(),
                                 [](const AxisIndex& a) { return a.type == AxisType::type1; });
  if (!rec.flip_fixed || axis == rec.axes.end()) {
    throw std::invalid_argument("insert_axis_beads: orbit has no type-1 symmetry axis");
  }
  const int n = rec.size();
  const int half = n / 2;
  const int start = (axis->m + 1) / 2;
  const Necklace& l = rec.canonical;

  // New beads at positions 0 and half + 1; old beads fill the two arcs.
  Mask out = 0;
  if (color == Color::blue) out |= Mask{1} | (Mask{1} << (half + 1));
  for (int k = 0; k < half; ++k) {
    if (l.at(start + k) == Color::blue) out |= Mask{1} << (1 + k);
    if (l.at(start + half + k) == Color::blue) out |= Mask{1} << (half + 2 + k);
  }
  return make_orbit_record({n + 2, out});
}

Necklace twisted_step(const Necklace& l) { return color_swap(rotate(l, 1)); }

TwistedOrbitRecord make_twisted_record(const Necklace& l) {
  if (l.size() != 2 * l.blue_count()) throw std::invalid_argument("twisted action needs n = 2j");
  TwistedOrbitRecord rec;
  Necklace best = l;
  Necklace x = twisted_step(l);
  int count = 1;
  while (x != l) {
    best = std::min(best, x);
    x = twisted_step(x);
    ++count;
  }
  rec.canonical = best;
  rec.twisted_period = count;

  Necklace y = rotate(best, 1);
  Necklace y_best = y;
  for (Necklace z = twisted_step(y); z != y; z = twisted_step(z)) y_best = std::min(y_best, z);
  rec.swap_fixed = y_best == best;
  return rec;
}

TwistedOrbitRecord swap_action(const TwistedOrbitRecord& rec) {
  return make_twisted_record(rotate(rec.canonical, 1));
}

std::vector<TwistedOrbitRecord> enumerate_twisted_orbits(int j) {
  if (j < 1) throw std::invalid_argument("enumerate_twisted_orbits: j must be positive");
  const int n = 2 * j;
  if (n > kMaxBeads) throw LimitExceeded("2j exceeds the bitmask width");
  std::vector<TwistedOrbitRecord> out;
  std::unordered_set<Mask> seen;
  const Mask last = full_mask(n) & ~full_mask(n - j);
  for (Mask m = full_mask(j);; ) {
    if (!seen.contains(m)) {
      Necklace x{n, m};
      do {
        seen.insert(x.blues());
        x = twisted_step(x);
      } while (x.blues() != m);
      out.push_back(make_twisted_record({n, m}));
    }
    if (m == last) break;
    const Mask low = m & (~m + 1);
    const Mask ripple = m + low;
    m = ripple | (((m ^ ripple) >> 2) / low);
  }
  std::sort(out.begin(), out.end(),
            [](const TwistedOrbitRecord& a, const TwistedOrbitRecord& b) { return a.canonical < b.canonical; });
  return out;
}

std::int64_t count_even_twisted(int j) {
  const auto orbits = enumerate_twisted_orbits(j);
  return std::count_if(orbits.begin(), orbits.end(),
                       [](const TwistedOrbitRecord& r) { return r.twisted_period % 2 == 0; });
}

std::int64_t count_even_twisted_swap_fixed(int j) {
  const auto orbits = enumerate_twisted_orbits(j);
  return std::count_if(orbits.begin(), orbits.end(), [](const TwistedOrbitRecord& r) {
    return r.twisted_period % 2 == 0 && r.swap_fixed;
  });
}

}  // namespace gwbinom::necklace
