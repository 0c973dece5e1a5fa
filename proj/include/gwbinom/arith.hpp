#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "gwbinom/bigint.hpp"

namespace gwbinom::arith {

/// Exact rational binomial argument, e.g. (n-2)/2 or (j-1)/2.
using Rational = boost::rational<std::int64_t>;

/// binom(a, b) with the convention that the value is 0 unless a and b are
/// integers with 0 <= b <= a.
BigInt big_binomial(const Rational& a, const Rational& b);
BigInt big_binomial(std::int64_t a, std::int64_t b);

/// Moebius function. Throws std::invalid_argument for m <= 0.
int mobius(std::int64_t m);

/// Largest e with p^e | x. Throws std::invalid_argument for x == 0.
unsigned valuation(std::uint64_t p, const BigInt& x);
unsigned valuation(std::uint64_t p, std::uint64_t x);

/// Base-p digits, least significant first. Zero is the single digit 0.
struct PAdicDigits {
  std::uint64_t prime = 2;
  std::vector<std::uint64_t> digits;

  static PAdicDigits of(std::uint64_t p, std::uint64_t x);
  std::uint64_t value() const;
  /// Carrier function S_p: the digit sum.
  std::uint64_t digit_sum() const;
};

/// binom(x, y) mod p via Lucas' theorem.
std::uint64_t lucas_binom_mod_p(std::uint64_t p, std::uint64_t x, std::uint64_t y);

/// nu_p(binom(n, m)) via Kummer's theorem. Throws for m > n.
unsigned kummer_valuation(std::uint64_t p, std::uint64_t n, std::uint64_t m);

/// x ≺ y: both non-negative integers and every binary digit of x is at most
/// the matching digit of y.
bool digit_dominates(const Rational& x, const Rational& y);

bool is_prime(std::uint64_t p);
bool is_power_of_two(std::uint64_t x);

}  // namespace gwbinom::arith
