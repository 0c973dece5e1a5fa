#include "gwbinom/arith.hpp"

#include <stdexcept>
#include <string>

namespace gwbinom::arith {
namespace {

bool is_nonneg_integer(const Rational& x) { return x.denominator() == 1 && x.numerator() >= 0; }

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

BigInt big_binomial(const Rational& a, const Rational& b) {
  if (!is_nonneg_integer(a) || !is_nonneg_integer(b)) return 0;
  return big_binomial(a.numerator(), b.numerator());
}

BigInt big_binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt acc = 1;
  // acc * (a - b + i) is divisible by i at every step.
  for (std::int64_t i = 1; i <= b; ++i) {
    acc *= a - b + i;
    acc /= i;
  }
  return acc;
}

int mobius(std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mobius: argument must be positive, got " + std::to_string(m));
  int sign = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

unsigned valuation(std::uint64_t p, const BigInt& x) {
  if (x == 0) throw std::invalid_argument("valuation of zero is undefined");
  require_prime(p);
  BigInt r = abs(x);
  unsigned e = 0;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  return e;
}

unsigned valuation(std::uint64_t p, std::uint64_t x) { return valuation(p, BigInt(x)); }

PAdicDigits PAdicDigits::of(std::uint64_t p, std::uint64_t x) {
  require_prime(p);
  PAdicDigits d{p, {}};
  do {
    d.digits.push_back(x % p);
    x /= p;
  } while (x != 0);
  return d;
}

std::uint64_t PAdicDigits::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * prime + *it;
  return v;
}

std::uint64_t PAdicDigits::digit_sum() const {
  std::uint64_t s = 0;
  for (auto d : digits) s += d;
  return s;
}

std::uint64_t lucas_binom_mod_p(std::uint64_t p, std::uint64_t x, std::uint64_t y) {
  require_prime(p);
  std::uint64_t acc = 1 % p;
  while ((x != 0 || y != 0) && acc != 0) {
    const std::uint64_t xi = x % p;
    const std::uint64_t yi = y % p;
    if (yi > xi) return 0;
    acc = static_cast<std::uint64_t>(big_binomial(static_cast<std::int64_t>(xi), static_cast<std::int64_t>(yi)) % p) * acc % p;
    x /= p;
    y /= p;
  }
  return acc;
}

unsigned kummer_valuation(std::uint64_t p, std::uint64_t n, std::uint64_t m) {
  if (m > n) throw std::invalid_argument("kummer_valuation: m > n");
  const auto s = [p](std::uint64_t v) { return PAdicDigits::of(p, v).digit_sum(); };
  return static_cast<unsigned>((s(m) + s(n - m) - s(n)) / (p - 1));
}

bool digit_dominates(const Rational& x, const Rational& y) {
  if (!is_nonneg_integer(x) || !is_nonneg_integer(y)) return false;
  const auto xv = static_cast<std::uint64_t>(x.numerator());
  const auto yv = static_cast<std::uint64_t>(y.numerator());
  return (xv & ~yv) == 0;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace gwbinom::arith
