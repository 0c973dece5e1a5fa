#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gwbinom/necklace.hpp"

namespace gwbinom::partitions {

/// Run-length encoding (r1 b1 r2 b2 ... rm bm) of a two-colored necklace:
/// r_i are red runs (the marked entries), b_i blue runs. Two sequences that
/// differ by a shift of whole (r_i, b_i) blocks are the same partition; the
/// stored runs are the lexicographically least such shift.
class MarkedCyclicPartition {
 public:
  /// Validates (even length, entries >= 1) and canonicalizes.
  static MarkedCyclicPartition from_runs(std::vector<int> runs);

  const std::vector<int>& runs() const { return runs_; }
  int blocks() const { return static_cast<int>(runs_.size() / 2); }
  int bead_count() const;
  int blue_count() const;

  /// "(6' 4)": marked (red) entries carry a trailing apostrophe.
  std::string to_text() const;

  friend bool operator==(const MarkedCyclicPartition&, const MarkedCyclicPartition&) = default;

 private:
  std::vector<int> runs_;
};

/// Throws std::invalid_argument for monochrome orbits.
MarkedCyclicPartition encode(const necklace::OrbitRecord& rec);
/// A necklace in the encoded orbit: the runs laid out from bead 0.
necklace::Necklace decode(const MarkedCyclicPartition& p);

/// The color swap seen on partitions: marked and plain entries trade roles.
MarkedCyclicPartition exchange_markings(const MarkedCyclicPartition& p);

/// Size of the orbit of the run sequence under block shifts, counted in
/// entries (two per block). An aperiodic partition has period = length.
int partition_period(const MarkedCyclicPartition& p);

/// A composition of j up to cyclic rotation, with the number of distinct
/// rotations as its period. The parts are the least rotation.
struct CyclicCompositionClass {
  std::vector<int> parts;
  int period = 1;
};

/// All cyclic classes of compositions of j >= 1, sorted by parts.
std::vector<CyclicCompositionClass> cyclic_composition_classes(int j);

/// Classes with odd period.
std::int64_t odd_period_composition_classes(int j);

enum class PeriodFilter { all, nu2_equals_1, nu2_above_1 };

/// Orbits [l] of Neck(2j, j) with e[l] = [l], restricted by nu2 of the period.
std::int64_t efixed_untwisted_count(int j, PeriodFilter filter = PeriodFilter::all);

}  // namespace gwbinom::partitions
