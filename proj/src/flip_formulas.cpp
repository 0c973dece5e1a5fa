#include "gwbinom/flip_formulas.hpp"

#include <stdexcept>

#include "gwbinom/arith.hpp"

namespace gwbinom::necklace::formulas {
namespace {

using arith::big_binomial;
using arith::Rational;

unsigned nu2(int x) { return arith::valuation(2, static_cast<std::uint64_t>(x)); }

void require_even_nj(int n, int j, const char* what) {
  if (n % 2 != 0 || j % 2 != 0 || j < 0 || j > n) {
    throw std::invalid_argument(std::string(what) + ": needs n, j even with 0 <= j <= n");
  }
}

BigInt halve_exact(const BigInt& x) {
  if (x % 2 != 0) throw std::logic_error("flip formula: odd value where an even one is required");
  return x / 2;
}

}  // namespace

BigInt odd_flip_fixed(int n, int j) {
  if (n < 1 || j < 0 || j > n) throw std::invalid_argument("odd_flip_fixed: need 0 <= j <= n, n >= 1");
  const unsigned vn = nu2(n);
  // j = 0 behaves as nu2(j) = infinity.
  const bool j_higher = j == 0 || nu2(j) > vn;
  if (!j_higher && nu2(j) < vn) return 0;
  const std::int64_t scale = std::int64_t{1} << (vn + 1);
  const Rational top = Rational(n, scale) - Rational(1, 2);
  const Rational bottom = j_higher ? Rational(j, scale) : Rational(j, scale) - Rational(1, 2);
  return big_binomial(top, bottom);
}

BigInt type1_even(int n, int j) {
  if (n % 2 != 0 || j < 0 || j > n) throw std::invalid_argument("type1_even: needs n even, 0 <= j <= n");
  if (j % 2 != 0) return 0;
  return halve_exact(big_binomial(n / 2, j / 2) - odd_flip_fixed(n / 2, j / 2));
}

BigInt even_flip_fixed_n2mod4(int n, int j) {
  require_even_nj(n, j, "even_flip_fixed_n2mod4");
  if (n % 4 != 2) throw std::invalid_argument("even_flip_fixed_n2mod4: needs n = 2 mod 4");
  const Rational top((n - 2) / 4);
  const Rational bottom = j % 4 == 2 ? Rational(j - 2, 4) : Rational(j, 4);
  return big_binomial(n / 2, j / 2) - big_binomial(top, bottom);
}

BigInt type2_n0mod4(int n, int j) {
  require_even_nj(n, j, "type2_n0mod4");
  if (n % 4 != 0) throw std::invalid_argument("type2_n0mod4: needs n = 0 mod 4");
  return halve_exact(big_binomial(n / 2, j / 2) + odd_flip_fixed(n, j));
}

BigInt even_flip_fixed_n0mod4(int n, int j) {
  require_even_nj(n, j, "even_flip_fixed_n0mod4");
  if (n % 4 != 0) throw std::invalid_argument("even_flip_fixed_n0mod4: needs n = 0 mod 4");
  const unsigned vn = nu2(n);
  const BigInt base = big_binomial(n / 2, j / 2);
  if (j != 0 && vn > nu2(j)) return base;
  const std::int64_t scale = std::int64_t{1} << (vn + 1);
  const Rational top = Rational(n, scale) - Rational(1, 2);
  if (j != 0 && vn == nu2(j)) return base - big_binomial(top, Rational(j, scale) - Rational(1, 2));
  return base - big_binomial(top, Rational(j, scale));
}

}  // namespace gwbinom::necklace::formulas
