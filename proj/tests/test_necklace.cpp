#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gwbinom/arith.hpp"
#include "gwbinom/flip_formulas.hpp"
#include "gwbinom/necklace.hpp"

namespace nk = gwbinom::necklace;
namespace fm = gwbinom::necklace::formulas;
using nk::AxisType;
using nk::Color;
using nk::Necklace;
using nk::OrbitRecord;

namespace {

// String oracle: character p is bead p.
std::set<std::string> rotations(const std::string& s) {
  std::set<std::string> out;
  for (std::size_t k = 0; k < s.size(); ++k) out.insert(s.substr(k) + s.substr(0, k));
  return out;
}

std::string mirrored(const std::string& s) {
  std::string t(s.size(), '0');
  for (std::size_t p = 0; p < s.size(); ++p) t[(s.size() - p) % s.size()] = s[p];
  return t;
}

std::map<std::string, std::set<std::string>> brute_orbits(int n, int j) {
  std::map<std::string, std::set<std::string>> out;
  std::string s = std::string(static_cast<std::size_t>(n - j), '0') + std::string(static_cast<std::size_t>(j), '1');
  do {
    auto orbit = rotations(s);
    out.emplace(*orbit.begin(), std::move(orbit));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::int64_t burnside(int n, int j) {
  std::int64_t sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d || j % d) continue;
    int totient = 0;
    for (int k = 1; k <= d; ++k) totient += std::gcd(k, d) == 1;
    sum += totient * static_cast<std::int64_t>(gwbinom::arith::big_binomial(n / d, j / d));
  }
  return sum / n;
}

std::string every_other(const std::string& s, std::size_t start) {
  std::string out;
  for (std::size_t p = start; p < s.size(); p += 2) out += s[p];
  return out;
}

OrbitRecord record_of(const std::string& s) { return nk::make_orbit_record(Necklace::parse(s)); }

bool has_type(const OrbitRecord& r, AxisType t) { return r.has_axis(t); }

}  // namespace

TEST_CASE("necklace basics") {
  const Necklace l = Necklace::parse("110100");
  CHECK(l.size() == 6);
  CHECK(l.blue_count() == 3);
  CHECK(l.blue_positions() == std::vector<int>{0, 1, 3});
  CHECK(l.at(7) == Color::blue);
  CHECK(l.at(2) == Color::red);
  CHECK(l.to_bitstring() == "110100");
  CHECK(Necklace::parse("BBRBRR") == l);
  CHECK(Necklace::from_positions(6, {3, 0, 1}) == l);
  CHECK(nk::rotate(l, 1).to_bitstring() == "011010");
  CHECK(nk::rotate(l, -1).to_bitstring() == "101001");
  CHECK(nk::flip(l).to_bitstring() == "100101");
  CHECK(nk::reflect(l, 1).to_bitstring() == "110010");
  CHECK(nk::color_swap(l).to_bitstring() == "001011");
  CHECK(nk::canonical(l).to_bitstring() == "110100");
  CHECK(nk::canonical(Necklace::parse("011010")).to_bitstring() == "110100");
  CHECK(nk::period(Necklace::parse("101101")) == 3);
  CHECK_THROWS_AS(Necklace(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Necklace(3, 0b1000), std::invalid_argument);
  CHECK_THROWS_AS(Necklace::parse("10x"), std::invalid_argument);
}

TEST_CASE("enumeration limit") {
  ::unsetenv("GWBINOM_MAX_N");
  CHECK(nk::enumeration_limit() == nk::kDefaultEnumerationLimit);
  CHECK_THROWS_AS(nk::check_enumeration_limit(25), nk::LimitExceeded);
  ::setenv("GWBINOM_MAX_N", "30", 1);
  CHECK(nk::enumeration_limit() == 30);
  CHECK_NOTHROW(nk::check_enumeration_limit(25));
  ::setenv("GWBINOM_MAX_N", "500", 1);
  CHECK(nk::enumeration_limit() == nk::kMaxBeads);
  ::unsetenv("GWBINOM_MAX_N");
}

TEST_CASE("parallel kernel matches the serial reference") {
  for (int n = 1; n <= 16; ++n) {
    for (int j = 0; j <= n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      CHECK(nk::enumerate_orbits(n, j) == nk::reference::enumerate_orbits(n, j));
    }
  }
}

TEST_CASE("orbits agree with the string oracle and Burnside") {
  for (int n = 1; n <= 12; ++n) {
    for (int j = 0; j <= n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      const auto recs = nk::enumerate_orbits(n, j);
      const auto brute = brute_orbits(n, j);
      REQUIRE(recs.size() == brute.size());
      CHECK(static_cast<std::int64_t>(recs.size()) == burnside(n, j));
      std::int64_t total = 0;
      for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        if (i > 0) CHECK(recs[i - 1].canonical < r.canonical);
        const auto orbit = rotations(r.canonical.to_bitstring());
        REQUIRE(brute.count(*orbit.begin()) == 1);
        CHECK(r.period == static_cast<int>(orbit.size()));
        CHECK(r.flip_fixed == (orbit.count(mirrored(r.canonical.to_bitstring())) == 1));
        for (int k = 0; k < n; ++k) CHECK(nk::rotate(r.canonical, k).blues() >= r.canonical.blues());
        total += r.period;
      }
      CHECK(total == static_cast<std::int64_t>(gwbinom::arith::big_binomial(n, j)));
    }
  }
}

TEST_CASE("axes are reflections fixing the representative") {
  for (int n = 1; n <= 16; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (const auto& r : nk::enumerate_orbits(n, j)) {
        CHECK(r.flip_fixed == !r.axes.empty());
        CHECK(nk::symmetry_axes(r) == r.axes);
        for (const auto& a : r.axes) {
          CHECK(nk::reflect(r.canonical, a.m) == r.canonical);
          bool through_bead = false;
          for (int p = 0; p < n; ++p) through_bead = through_bead || (2 * p) % n == a.m;
          CHECK((a.type == AxisType::type2) == through_bead);
        }
      }
    }
  }
}

TEST_CASE("axis count and spacing") {
  for (int n = 1; n <= 16; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (const auto& r : nk::enumerate_orbits(n, j)) {
        if (!r.flip_fixed) continue;
        CAPTURE(r.canonical.to_bitstring());
        if ((n / r.period) % 2 == 1) {
          CHECK(r.axes.size() == 1);
        } else {
          REQUIRE(r.axes.size() == 2);
          CHECK(nk::axis_class_distance_doubled(r, r.axes[0], r.axes[1]) == r.period);
        }
      }
    }
  }
}

TEST_CASE("mixed axis types exactly for odd period") {
  for (int n = 2; n <= 16; n += 2) {
    for (int j = 0; j <= n; ++j) {
      for (const auto& r : nk::enumerate_orbits(n, j)) {
        const bool mixed = has_type(r, AxisType::type1) && has_type(r, AxisType::type2);
        CHECK(mixed == (r.flip_fixed && r.period % 2 == 1));
        if (n % 4 == 2 && has_type(r, AxisType::type1)) {
          if (r.period % 2 == 0) {
            CHECK(r.axes.size() == 1);
          } else {
            CHECK(mixed);
          }
        }
      }
    }
  }
  for (int n = 1; n <= 15; n += 2) {
    for (int j = 0; j <= n; ++j) {
      for (const auto& r : nk::enumerate_orbits(n, j)) CHECK_FALSE(has_type(r, AxisType::type1));
    }
  }
}

TEST_CASE("example necklaces") {
  const auto consecutive = nk::make_orbit_record(Necklace::from_positions(6, {1, 2, 3, 4}));
  CHECK(consecutive.period == 6);
  REQUIRE(consecutive.axes.size() == 1);
  CHECK(consecutive.axes[0].type == AxisType::type1);

  const auto mixed = nk::make_orbit_record(Necklace::from_positions(6, {0, 2, 3, 5}));
  CHECK(mixed.period == 3);
  REQUIRE(mixed.axes.size() == 2);
  CHECK(mixed.axes[0].type != mixed.axes[1].type);
  CHECK(nk::axis_class_distance_doubled(mixed, mixed.axes[0], mixed.axes[1]) == 3);
  CHECK(nk::axis_distance_doubled(6, 0, 3) == 3);

  const auto five = nk::make_orbit_record(Necklace::from_positions(5, {1, 2}));
  CHECK(five.period == 5);
  CHECK(five.flip_fixed);
  CHECK(nk::phi_fiber_size({five, five}) == 3);
}

TEST_CASE("Moebius count of aperiodic orbits") {
  for (int n = 1; n <= 16; ++n) {
    for (int j = 0; j <= n; ++j) {
      std::int64_t full = 0;
      std::int64_t even = 0;
      for (const auto& r : nk::enumerate_orbits(n, j)) {
        full += r.period == n;
        even += r.period % 2 == 0;
      }
      CHECK(nk::aperiodic_count(n, j) == full);
      CHECK(nk::count_even_orbits(n, j) == even);
    }
  }
}

TEST_CASE("flip-fixed counts against the closed forms") {
  for (int n = 1; n <= 16; ++n) {
    for (int j = 0; j <= n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      nk::FlipFixedCounts brute;
      for (const auto& r : nk::enumerate_orbits(n, j)) {
        if (!r.flip_fixed) continue;
        if (r.period % 2 == 1) {
          ++brute.odd_fixed;
        } else {
          brute.type1_even += has_type(r, AxisType::type1);
          brute.type2_even += has_type(r, AxisType::type2);
        }
      }
      CHECK(fm::odd_flip_fixed(n, j) == brute.odd_fixed);
      if (n % 2) continue;
      CHECK(nk::classify_flip_fixed(n, j) == brute);
      CHECK(fm::type1_even(n, j) == brute.type1_even);
      if (j % 2) continue;
      const std::int64_t even_fixed = brute.type1_even + brute.type2_even;
      if (n % 4 == 2) {
        CHECK(fm::even_flip_fixed_n2mod4(n, j) == even_fixed);
      } else {
        CHECK(fm::type2_n0mod4(n, j) == brute.type2_even + brute.odd_fixed);
        CHECK(fm::even_flip_fixed_n0mod4(n, j) == even_fixed);
      }
    }
  }
  CHECK_THROWS_AS(nk::classify_flip_fixed(5, 2), std::invalid_argument);
}

TEST_CASE("interleaving decomposition and its fibers") {
  for (int n = 2; n <= 16; n += 2) {
    const int h = n / 2;
    for (int j = 0; j <= n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      std::map<std::pair<nk::Mask, nk::Mask>, std::int64_t> fibers;
      std::map<std::pair<nk::Mask, nk::Mask>, std::vector<int>> fiber_periods;
      for (const auto& r : nk::enumerate_orbits(n, j)) {
        const auto s = r.canonical.to_bitstring();
        const auto a = record_of(every_other(s, 0));
        const auto b = record_of(every_other(s, 1));
        const auto pair = nk::phi_decompose(r);
        CHECK(pair.first.canonical == std::min(a.canonical, b.canonical));
        CHECK(pair.second.canonical == std::max(a.canonical, b.canonical));
        if (r.flip_fixed && has_type(r, AxisType::type1)) {
          ++fibers[{pair.first.canonical.blues(), pair.second.canonical.blues()}];
          if (pair.first == pair.second) fiber_periods[{pair.first.canonical.blues(), 0}].push_back(r.period);
        }
      }
      for (int j1 = 0; j1 <= std::min(j, h); ++j1) {
        const int j2 = j - j1;
        if (j2 < 0 || j2 > h) continue;
        for (const auto& x : nk::enumerate_orbits(h, j1)) {
          for (const auto& y : nk::enumerate_orbits(h, j2)) {
            if (y.canonical < x.canonical) continue;
            const auto it = fibers.find({x.canonical.blues(), y.canonical.blues()});
            const std::int64_t expected = it == fibers.end() ? 0 : it->second;
            CHECK(nk::phi_fiber_size({x, y}) == expected);
          }
        }
      }
      for (const auto& [key, periods] : fiber_periods) {
        const auto l1 = nk::make_orbit_record(Necklace(h, key.first));
        const auto short_count = std::count(periods.begin(), periods.end(), l1.period);
        const auto long_count = std::count(periods.begin(), periods.end(), 2 * l1.period);
        CHECK(short_count + long_count == static_cast<std::int64_t>(periods.size()));
        CHECK(short_count == ((l1.flip_fixed && l1.period % 2 == 1) ? 1 : 0));
      }
    }
  }
  CHECK_THROWS_AS(nk::phi_decompose(record_of("10100")), std::invalid_argument);
}

TEST_CASE("inserting and stripping axis beads") {
  for (int n = 2; n <= 14; n += 2) {
    for (int j = 0; j <= n; j += 2) {
      for (const auto& r : nk::enumerate_orbits(n, j)) {
        if (!has_type(r, AxisType::type1)) continue;
        for (Color c : {Color::red, Color::blue}) {
          const auto grown = nk::insert_axis_beads(r, c);
          CHECK(grown.size() == n + 2);
          CHECK(grown.blue_count() == j + (c == Color::blue ? 2 : 0));
          REQUIRE(has_type(grown, AxisType::type2));
          bool restored = false;
          for (const auto& a : grown.axes) {
            if (a.type == AxisType::type2) restored = restored || nk::strip_axis_beads(grown, a) == r;
          }
          CHECK(restored);
        }
      }
    }
  }
}
