#pragma once

#include "gwbinom/bigint.hpp"

// Closed forms for the flip-fixed orbit counts of Neck(n, j). Each has an
// enumeration counterpart in necklace.hpp; the tests compare the two.
namespace gwbinom::necklace::formulas {

/// Flip-fixed orbits of odd period, any n >= 1 and 0 <= j <= n.
BigInt odd_flip_fixed(int n, int j);

/// Even-period orbits with a type-1 axis, n even.
BigInt type1_even(int n, int j);

/// All even-period flip-fixed orbits, n = 2 mod 4 and j even.
BigInt even_flip_fixed_n2mod4(int n, int j);

/// Orbits with a type-2 axis, n = 0 mod 4 and j even.
BigInt type2_n0mod4(int n, int j);

/// All even-period flip-fixed orbits, n = 0 mod 4 and j even, split by the
/// relative 2-adic valuations of n and j.
BigInt even_flip_fixed_n0mod4(int n, int j);

}  // namespace gwbinom::necklace::formulas
