#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "gwbinom/bigint.hpp"

namespace gwbinom {

/// Discriminant class in F_q^* / (F_q^*)^2, identified with Z/2.
enum class Disc : std::uint8_t { square = 0, nonsquare = 1 };

/// Thrown by GWElem::display() for classes with no "(r-1)+u" rendering.
class Unrepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of GW(F_q) for q odd, i.e. Z[u]/(u^2 - 1, 2 - 2u).
///
/// Stored in the canonical (rank, discriminant) form, which is a complete
/// invariant. Every constructor normalizes, so equality is field-wise.
/// Ranks may be negative (the ring is a group completion).
class GWElem {
 public:
  GWElem() = default;
  GWElem(BigInt rank, Disc disc) : rank_(std::move(rank)), disc_(disc) {}

  /// Canonical form of a*<1> + b*<u>.
  static GWElem from_coeffs(const BigInt& a, const BigInt& b);
  static GWElem one() { return {1, Disc::square}; }
  static GWElem u() { return {1, Disc::nonsquare}; }
  static GWElem zero() { return {0, Disc::square}; }

  const BigInt& rank() const { return rank_; }
  Disc disc() const { return disc_; }

  GWElem& operator+=(const GWElem& other);
  GWElem& operator-=(const GWElem& other);
  friend GWElem operator+(GWElem x, const GWElem& y) { return x += y; }
  friend GWElem operator-(GWElem x, const GWElem& y) { return x -= y; }
  friend GWElem operator-(const GWElem& x);
  friend GWElem operator*(const GWElem& x, const GWElem& y);
  friend bool operator==(const GWElem&, const GWElem&) = default;

  /// Integer multiple k*x.
  GWElem scaled(const BigInt& k) const;

  /// "6", "3+u", "u". Throws Unrepresentable for a nonsquare class of
  /// rank < 1 and for a square class of negative rank.
  std::string display() const;

 private:
  BigInt rank_ = 0;
  Disc disc_ = Disc::square;
};

inline Disc disc_from_parity(bool odd) {
  return odd ? Disc::nonsquare : Disc::square;
}

/// Class of the trace form of the degree-n extension of F_q:
/// n when n is odd, n-1+u when n is even. Requires n >= 1.
GWElem epsilon(std::int64_t n);

std::string to_string(Disc d);

}  // namespace gwbinom
