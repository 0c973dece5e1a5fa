#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gwbinom/arith.hpp"

namespace ar = gwbinom::arith;
using gwbinom::BigInt;

namespace {

std::vector<std::vector<BigInt>> pascal(int rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int m = 1; m < n; ++m) t[n][m] = t[n - 1][m - 1] + t[n - 1][m];
  }
  return t;
}

unsigned naive_valuation(unsigned p, BigInt x) {
  unsigned e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

int naive_mobius(int m) {
  int result = 1;
  for (int p = 2; p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  return result;
}

}  // namespace

TEST_CASE("big_binomial") {
  const auto t = pascal(80);
  for (int n = 0; n <= 80; ++n) {
    for (int m = 0; m <= n; ++m) CHECK(ar::big_binomial(n, m) == t[n][m]);
    CHECK(ar::big_binomial(n, n + 1) == 0);
    CHECK(ar::big_binomial(n, -1) == 0);
  }
  CHECK(ar::big_binomial(ar::Rational(7, 2), ar::Rational(1)) == 0);
  CHECK(ar::big_binomial(ar::Rational(6, 2), ar::Rational(3, 2)) == 0);
  CHECK(ar::big_binomial(ar::Rational(6, 2), ar::Rational(2, 2)) == 3);
}

TEST_CASE("Lucas and Kummer against Pascal's triangle") {
  const auto t = pascal(120);
  for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
    for (unsigned n = 0; n <= 120; ++n) {
      for (unsigned m = 0; m <= n; ++m) {
        CHECK(ar::lucas_binom_mod_p(p, n, m) == static_cast<unsigned>(t[n][m] % p));
        CHECK(ar::kummer_valuation(p, n, m) == naive_valuation(p, t[n][m]));
      }
    }
  }
  CHECK(ar::lucas_binom_mod_p(3, 4, 7) == 0);
  CHECK_THROWS_AS(ar::kummer_valuation(2, 3, 4), std::invalid_argument);
}

TEST_CASE("digit dominance is the parity of the binomial") {
  for (int y = 0; y < 128; ++y) {
    for (int x = 0; x < 128; ++x) {
      const bool odd = ar::big_binomial(y, x) % 2 == 1;
      CHECK(ar::digit_dominates(ar::Rational(x), ar::Rational(y)) == odd);
    }
  }
  CHECK_FALSE(ar::digit_dominates(ar::Rational(1, 2), ar::Rational(3)));
  CHECK_FALSE(ar::digit_dominates(ar::Rational(1), ar::Rational(5, 2)));
  CHECK_FALSE(ar::digit_dominates(ar::Rational(-1), ar::Rational(3)));
}

TEST_CASE("2-adic valuations of doubled binomials") {
  for (int n = 0; n <= 60; ++n) {
    for (int j = 0; j <= n; ++j) {
      const unsigned v = ar::kummer_valuation(2, n, j);
      CHECK(ar::kummer_valuation(2, 2 * n, 2 * j) == v);
      CHECK(ar::kummer_valuation(2, 2 * n + 1, 2 * j + 1) == v);
      if (n % 2 == 0 && j % 2 == 0) CHECK(ar::kummer_valuation(2, n + 1, j) == v);
    }
  }
  for (int j = 1; j <= 200; ++j) {
    const unsigned v = ar::kummer_valuation(2, 2 * j, j);
    CHECK(v >= 1);
    CHECK((v == 1) == ar::is_power_of_two(static_cast<std::uint64_t>(j)));
  }
}

TEST_CASE("Moebius function") {
  for (int m = 1; m <= 500; ++m) {
    CHECK(ar::mobius(m) == naive_mobius(m));
    int sum = 0;
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) sum += ar::mobius(d);
    }
    CHECK(sum == (m == 1 ? 1 : 0));
  }
  CHECK_THROWS_AS(ar::mobius(0), std::invalid_argument);
}

TEST_CASE("valuations and digits") {
  CHECK(ar::valuation(2, std::uint64_t{96}) == 5);
  CHECK(ar::valuation(3, BigInt(81) * 7) == 4);
  CHECK_THROWS_AS(ar::valuation(2, std::uint64_t{0}), std::invalid_argument);
  CHECK_THROWS_AS(ar::valuation(4, std::uint64_t{8}), std::invalid_argument);

  const auto d = ar::PAdicDigits::of(3, 100);
  CHECK(d.digits == std::vector<std::uint64_t>{1, 0, 2, 0, 1});
  CHECK(d.value() == 100);
  CHECK(d.digit_sum() == 4);
  CHECK(ar::PAdicDigits::of(5, 0).digits == std::vector<std::uint64_t>{0});

  CHECK(ar::is_prime(2));
  CHECK(ar::is_prime(97));
  CHECK_FALSE(ar::is_prime(1));
  CHECK_FALSE(ar::is_prime(91));
  CHECK(ar::is_power_of_two(1));
  CHECK(ar::is_power_of_two(64));
  CHECK_FALSE(ar::is_power_of_two(0));
  CHECK_FALSE(ar::is_power_of_two(12));
}
