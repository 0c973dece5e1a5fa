#include "gwbinom/gw_ring.hpp"

namespace gwbinom {
namespace {

Disc disc_xor(Disc a, Disc b) {
  return disc_from_parity((a == Disc::nonsquare) != (b == Disc::nonsquare));
}

bool is_odd(const BigInt& x) { return boost::multiprecision::bit_test(abs(x), 0); }

}  // namespace

GWElem GWElem::from_coeffs(const BigInt& a, const BigInt& b) {
  return {a + b, disc_from_parity(is_odd(b))};
}

GWElem& GWElem::operator+=(const GWElem& other) {
  rank_ += other.rank_;
  disc_ = disc_xor(disc_, other.disc_);
  return *this;
}

GWElem& GWElem::operator-=(const GWElem& other) {
  // -x has the same discriminant as x, since 2(u-1) = 0.
  rank_ -= other.rank_;
  disc_ = disc_xor(disc_, other.disc_);
  return *this;
}

GWElem operator-(const GWElem& x) { return {-x.rank_, x.disc_}; }

GWElem operator*(const GWElem& x, const GWElem& y) {
  // (a1 + b1 u)(a2 + b2 u) has u-coefficient a1 b2 + a2 b1, whose parity is
  // rank(x) disc(y) + rank(y) disc(x).
  const bool dx = x.disc_ == Disc::nonsquare;
  const bool dy = y.disc_ == Disc::nonsquare;
  const bool odd = (dy && is_odd(x.rank_)) != (dx && is_odd(y.rank_));
  return {x.rank_ * y.rank_, disc_from_parity(odd)};
}

GWElem GWElem::scaled(const BigInt& k) const {
  return {rank_ * k, disc_from_parity(disc_ == Disc::nonsquare && is_odd(k))};
}

std::string GWElem::display() const {
  if (disc_ == Disc::square) {
    if (rank_ < 0) throw Unrepresentable("negative rank " + rank_.str() + " has no display form");
    return rank_.str();
  }
  if (rank_ < 1) {
    throw Unrepresentable("nonsquare class of rank " + rank_.str() + " has no display form");
  }
  if (rank_ == 1) return "u";
  return BigInt(rank_ - 1).str() + "+u";
}

GWElem epsilon(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("epsilon: n must be positive, got " + std::to_string(n));
  return {n, disc_from_parity(n % 2 == 0)};
}

std::string to_string(Disc d) { return d == Disc::square ? "square" : "nonsquare"; }

}  // namespace gwbinom
