#include "gwbinom/coefficients.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include <omp.h>

#include "gwbinom/arith.hpp"
#include "gwbinom/necklace.hpp"

namespace gwbinom::coefficients {
namespace {

using arith::Rational;

// binom + (u - 1) * count
GWElem deviate(const BigInt& binom, const BigInt& count) { return GWElem::from_coeffs(binom - count, count); }

void require_range(std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0 || j > n) {
    throw std::invalid_argument("need 0 <= j <= n, got n = " + std::to_string(n) + ", j = " + std::to_string(j));
  }
}

void require_twisted_j(std::int64_t j) {
  if (j < 1) throw std::invalid_argument("twisted coefficient needs j >= 1, got " + std::to_string(j));
}

GWElem closed_value(std::int64_t n, std::int64_t j, bool mutate) {
  const bool delta = delta_untwisted(n, j) != mutate;
  return deviate(arith::big_binomial(n, j), delta ? 1 : 0);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string to_string(Method m) { return m == Method::closed ? "closed" : "oracle"; }

bool delta_untwisted(std::int64_t n, std::int64_t j) {
  return arith::digit_dominates(Rational(j - 1, 2), Rational(n - 2, 2));
}

bool delta_twisted(std::int64_t j) { return j >= 2 && arith::is_power_of_two(static_cast<std::uint64_t>(j)); }

GWElem untwisted_closed_literal(std::int64_t n, std::int64_t j) {
  const BigInt correction = arith::big_binomial(Rational(n - 2, 2), Rational(j - 1, 2));
  // binom - (1 - u) * c
  return GWElem(arith::big_binomial(n, j), Disc::square) - (GWElem::one() - GWElem::u()).scaled(correction);
}

EnrichedCoefficient untwisted_closed(std::int64_t n, std::int64_t j) {
  require_range(n, j);
  GWElem value = closed_value(n, j, false);
  if (value != untwisted_closed_literal(n, j)) {
    throw std::logic_error("closed forms disagree at n = " + std::to_string(n) + ", j = " + std::to_string(j));
  }
  return {n, j, false, std::move(value), Method::closed};
}

EnrichedCoefficient untwisted_oracle(std::int64_t n, std::int64_t j) {
  require_range(n, j);
  if (n < 1) throw std::invalid_argument("untwisted_oracle: n must be positive");
  necklace::check_enumeration_limit(static_cast<int>(std::min<std::int64_t>(n, necklace::kMaxBeads + 1)));
  const auto even = necklace::count_even_orbits(static_cast<int>(n), static_cast<int>(j));
  return {n, j, false, deviate(arith::big_binomial(n, j), even), Method::oracle};
}

EnrichedCoefficient twisted_closed(std::int64_t j) {
  require_twisted_j(j);
  return {2 * j, j, true, deviate(arith::big_binomial(2 * j, j), delta_twisted(j) ? 1 : 0), Method::closed};
}

EnrichedCoefficient twisted_oracle(std::int64_t j) {
  require_twisted_j(j);
  necklace::check_enumeration_limit(static_cast<int>(std::min<std::int64_t>(2 * j, necklace::kMaxBeads + 1)));
  const auto even = necklace::count_even_twisted(static_cast<int>(j));
  return {2 * j, j, true, deviate(arith::big_binomial(2 * j, j), even), Method::oracle};
}

std::vector<std::vector<EnrichedCoefficient>> triangle(int rows) {
  if (rows < 1) throw std::invalid_argument("triangle: rows must be positive");
  std::vector<std::vector<EnrichedCoefficient>> out(static_cast<std::size_t>(rows));
  for (int n = 0; n < rows; ++n) {
    for (int j = 0; j <= n; ++j) out[static_cast<std::size_t>(n)].push_back(untwisted_closed(n, j));
  }
  return out;
}

bool VerifyReport::ok() const {
  for (const auto& c : cells) {
    if (!c.agree) return false;
  }
  for (const auto& p : properties) {
    if (!p.passed) return false;
  }
  return true;
}

std::optional<CellResult> VerifyReport::first_divergence() const {
  for (const auto& c : cells) {
    if (!c.agree) return c;
  }
  return std::nullopt;
}

VerifyReport verify(const VerifyOptions& options) {
  if (options.max_n < 0 || options.twisted_max_j < 0) throw std::invalid_argument("verify: limits must be non-negative");
  if (options.max_n > 0) necklace::check_enumeration_limit(options.max_n);
  if (options.twisted_max_j > 0) necklace::check_enumeration_limit(2 * options.twisted_max_j);

  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  for (int n = 1; n <= options.max_n; ++n) {
    for (int j = 0; j <= n; ++j) report.cells.push_back({n, j, false, {}, {}, false, 0.0});
  }
  for (int j = 1; j <= options.twisted_max_j; ++j) report.cells.push_back({2 * j, j, true, {}, {}, false, 0.0});

  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  const auto cell_count = static_cast<std::int64_t>(report.cells.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < cell_count; ++i) {
    auto& cell = report.cells[static_cast<std::size_t>(i)];
    const auto c0 = std::chrono::steady_clock::now();
    if (cell.twisted) {
      cell.closed = twisted_closed(cell.j).value;
      if (options.mutate_closed) cell.closed = cell.closed + (GWElem::u() - GWElem::one());
      cell.oracle = twisted_oracle(cell.j).value;
    } else {
      cell.closed = closed_value(cell.n, cell.j, options.mutate_closed);
      cell.oracle = untwisted_oracle(cell.n, cell.j).value;
    }
    cell.agree = cell.closed == cell.oracle;
    cell.seconds = seconds_since(c0);
  }

  std::map<std::pair<std::int64_t, std::int64_t>, const CellResult*> untwisted;
  for (const auto& c : report.cells) {
    if (!c.twisted) untwisted[{c.n, c.j}] = &c;
  }

  const auto check = [&report](std::string name, const std::function<std::string(const CellResult&)>& failure) {
    PropertyResult p{std::move(name), true, {}};
    for (const auto& c : report.cells) {
      std::string why = failure(c);
      if (!why.empty()) {
        p.passed = false;
        p.detail = std::move(why);
        break;
      }
    }
    report.properties.push_back(std::move(p));
  };
  const auto where = [](const CellResult& c) {
    return std::string(c.twisted ? "twisted " : "") + "n=" + std::to_string(c.n) + " j=" + std::to_string(c.j);
  };
  const auto oracle_odd = [](const CellResult& c) { return c.oracle.disc() == Disc::nonsquare; };

  check("rank equals binomial", [&](const CellResult& c) {
    const BigInt b = arith::big_binomial(c.n, c.j);
    return (c.closed.rank() == b && c.oracle.rank() == b) ? std::string{} : where(c);
  });
  check("row symmetry", [&](const CellResult& c) {
    if (c.twisted) return std::string{};
    const auto* mirror = untwisted.at({c.n, c.n - c.j});
    return (mirror->closed == c.closed && mirror->oracle == c.oracle) ? std::string{} : where(c);
  });
  check("digit dominance matches even-orbit parity (n even, j odd)", [&](const CellResult& c) {
    if (c.twisted || c.n % 2 != 0 || c.j % 2 != 1) return std::string{};
    return delta_untwisted(c.n, c.j) == oracle_odd(c) ? std::string{} : where(c);
  });
  check("vanishing for n odd", [&](const CellResult& c) {
    return (c.twisted || c.n % 2 == 0 || !oracle_odd(c)) ? std::string{} : where(c);
  });
  check("vanishing for n even, j even", [&](const CellResult& c) {
    return (c.twisted || c.n % 2 != 0 || c.j % 2 != 0 || !oracle_odd(c)) ? std::string{} : where(c);
  });
  check("twisted vanishing for j odd", [&](const CellResult& c) {
    return (!c.twisted || c.j % 2 == 0 || !oracle_odd(c)) ? std::string{} : where(c);
  });

  report.seconds = seconds_since(t0);
  return report;
}

}  // namespace gwbinom::coefficients
