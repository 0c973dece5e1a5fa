#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwbinom/gw_ring.hpp"

namespace gwbinom::coefficients {

enum class Method { closed, oracle };

std::string to_string(Method m);

/// An enriched binomial coefficient in GW(F_q), q odd, with provenance.
/// Twisted coefficients have n = 2j.
struct EnrichedCoefficient {
  std::int64_t n = 0;
  std::int64_t j = 0;
  bool twisted = false;
  GWElem value;
  Method method = Method::closed;
  friend bool operator==(const EnrichedCoefficient&, const EnrichedCoefficient&) = default;
};

/// delta(n, j) = [(j-1)/2 ≺ (n-2)/2].
bool delta_untwisted(std::int64_t n, std::int64_t j);
/// delta(j) = [j = 2^m with m >= 1].
bool delta_twisted(std::int64_t j);

/// binom(n, j) - (1 - u) delta(n, j). Accepts n >= 0 (row 0 of the
/// triangle); throws std::invalid_argument for j outside [0, n]. The value is
/// cross-checked against binom(n, j) - (1 - u) binom((n-2)/2, (j-1)/2) taken
/// literally, and std::logic_error is thrown if they disagree.
EnrichedCoefficient untwisted_closed(std::int64_t n, std::int64_t j);

/// binom(n, j) - (1 - u) binom((n-2)/2, (j-1)/2), computed directly from the
/// big binomial with fractional arguments sent to 0.
GWElem untwisted_closed_literal(std::int64_t n, std::int64_t j);

/// binom(n, j) + (u - 1) * #(even-period rotation orbits of Neck(n, j)).
/// Throws necklace::LimitExceeded past the enumeration limit.
EnrichedCoefficient untwisted_oracle(std::int64_t n, std::int64_t j);

/// binom(2j, j) + (u - 1) delta(j). Throws for j <= 0.
EnrichedCoefficient twisted_closed(std::int64_t j);

/// binom(2j, j) + (u - 1) * #(even-period orbits of the twisted action).
EnrichedCoefficient twisted_oracle(std::int64_t j);

/// Rows 0 .. rows-1 of untwisted_closed.
std::vector<std::vector<EnrichedCoefficient>> triangle(int rows);

struct CellResult {
  std::int64_t n = 0;
  std::int64_t j = 0;
  bool twisted = false;
  GWElem closed;
  GWElem oracle;
  bool agree = false;
  double seconds = 0.0;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, empty when passed
};

struct VerifyOptions {
  int max_n = 16;
  int twisted_max_j = 10;
  int jobs = 0;  // 0: OpenMP default
  /// Flips delta(n, j) in the closed form. Exercises divergence reporting.
  bool mutate_closed = false;
};

struct VerifyReport {
  std::vector<CellResult> cells;  // untwisted by (n, j), then twisted by j
  std::vector<PropertyResult> properties;
  double seconds = 0.0;

  bool ok() const;
  std::optional<CellResult> first_divergence() const;
};

/// Closed forms against the orbit oracles, every cell with 1 <= n <= max_n
/// and every twisted j in [1, twisted_max_j], plus per-cell properties.
VerifyReport verify(const VerifyOptions& options);

}  // namespace gwbinom::coefficients
