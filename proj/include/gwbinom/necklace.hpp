#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwbinom::necklace {

using Mask = std::uint64_t;

/// Bead sets are machine words; bit p is bead p (0 = top bead).
inline constexpr int kMaxBeads = 63;
inline constexpr int kDefaultEnumerationLimit = 24;

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Current enumeration cap: GWBINOM_MAX_N if set (clamped to kMaxBeads),
/// kDefaultEnumerationLimit otherwise.
int enumeration_limit();
/// Throws LimitExceeded if n exceeds enumeration_limit().
void check_enumeration_limit(int n);

enum class Color : std::uint8_t { red, blue };

/// A circular word of n beads, blue or red, with bead 0 at the top.
class Necklace {
 public:
  Necklace() = default;
  /// Throws std::invalid_argument unless 1 <= size <= kMaxBeads and blues
  /// has no bit at or above size.
  Necklace(int size, Mask blues);

  static Necklace from_positions(int size, const std::vector<int>& blue_positions);
  /// '1' (or 'B') is blue, '0' (or 'R') is red; index 0 leftmost.
  static Necklace parse(std::string_view beads);

  int size() const { return size_; }
  Mask blues() const { return blues_; }
  int blue_count() const;
  Color at(int position) const;
  std::vector<int> blue_positions() const;
  std::string to_bitstring() const;

  friend auto operator<=>(const Necklace&, const Necklace&) = default;

 private:
  int size_ = 1;
  Mask blues_ = 0;
};

Mask full_mask(int n);

/// Position p goes to p + k (mod n).
Necklace rotate(const Necklace& l, std::int64_t k);
/// Position p goes to -p (mod n): reflection through the top bead.
Necklace flip(const Necklace& l);
/// The reflection r^m f: position p goes to m - p (mod n).
Necklace reflect(const Necklace& l, int m);
Necklace color_swap(const Necklace& l);

/// Least bead-set mask among all rotations of l.
Necklace canonical(const Necklace& l);
/// Size of the rotation orbit of l.
int period(const Necklace& l);

enum class AxisType : std::uint8_t { type1 = 1, type2 = 2 };

/// Type 1 axes miss every bead; type 2 axes pass through at least one.
AxisType axis_type(int n, int m);

/// A symmetry axis, indexed by the reflection exponent m of r^m f. The
/// axis makes the angle m*pi/n with the vertical through the top bead.
struct AxisIndex {
  int m = 0;
  AxisType type = AxisType::type2;
  friend bool operator==(const AxisIndex&, const AxisIndex&) = default;
};

/// Distance between two axes, in half-bead units (3 means 3/2 beads).
int axis_distance_doubled(int n, int m1, int m2);

struct OrbitRecord {
  Necklace canonical;
  int period = 1;
  bool flip_fixed = false;
  /// Axis classes up to the orbit's rotation symmetry; each entry carries the
  /// least reflection exponent of its class, for the canonical representative.
  std::vector<AxisIndex> axes;

  int size() const { return canonical.size(); }
  int blue_count() const { return canonical.blue_count(); }
  bool has_axis(AxisType t) const;
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

OrbitRecord make_orbit_record(const Necklace& any_representative);

/// Symmetry axes of the orbit, as stored on the record.
std::vector<AxisIndex> symmetry_axes(const OrbitRecord& rec);

/// Least distance between two axis classes of the orbit, in half-bead units.
int axis_class_distance_doubled(const OrbitRecord& rec, const AxisIndex& a, const AxisIndex& b);

/// All rotation orbits of Neck(n, j), sorted by canonical mask. OpenMP
/// parallel over the j-subsets of the n beads.
std::vector<OrbitRecord> enumerate_orbits(int n, int j);

/// Number of orbits with even period.
std::int64_t count_even_orbits(int n, int j);

/// Number of orbits of full period n, by Moebius inversion.
std::int64_t aperiodic_count(int n, int j);

/// Even-period orbits with a type-1 axis, even-period orbits with a type-2
/// axis, and odd-period flip-fixed orbits. Requires n even.
struct FlipFixedCounts {
  std::int64_t type1_even = 0;
  std::int64_t type2_even = 0;
  std::int64_t odd_fixed = 0;
  friend bool operator==(const FlipFixedCounts&, const FlipFixedCounts&) = default;
};
FlipFixedCounts classify_flip_fixed(int n, int j);

/// Unordered pair of half-size orbits, stored with first <= second by
/// canonical mask.
struct OrbitPair {
  OrbitRecord first;
  OrbitRecord second;
  friend bool operator==(const OrbitPair&, const OrbitPair&) = default;
};

/// Splits an orbit on n beads (n even) into the orbits of its even-position
/// and odd-position beads.
OrbitPair phi_decompose(const OrbitRecord& rec);

/// Number of type-1 flip-fixed orbits on 2m beads whose decomposition is the
/// given pair of m-bead orbits.
std::int64_t phi_fiber_size(const OrbitPair& pair);

/// Deletes the two beads on a type-2 axis of an orbit with n and j even.
OrbitRecord strip_axis_beads(const OrbitRecord& rec, const AxisIndex& axis);

/// Inserts two beads of the given color on a type-1 axis of a flip-fixed
/// orbit, giving an orbit on two more beads with a type-2 axis.
OrbitRecord insert_axis_beads(const OrbitRecord& rec, Color color);

// Twisted action of C_{2j} on Neck(2j, j): the generator rotates one bead
// and then exchanges the colors.

struct TwistedOrbitRecord {
  Necklace canonical;
  int twisted_period = 1;
  bool swap_fixed = false;
  friend bool operator==(const TwistedOrbitRecord&, const TwistedOrbitRecord&) = default;
};

Necklace twisted_step(const Necklace& l);
/// Orbit of l under the twisted action; l must have size 2 * blue_count.
TwistedOrbitRecord make_twisted_record(const Necklace& l);
std::vector<TwistedOrbitRecord> enumerate_twisted_orbits(int j);
/// The twisted orbit of rotate(canonical, 1).
TwistedOrbitRecord swap_action(const TwistedOrbitRecord& rec);
std::int64_t count_even_twisted(int j);
std::int64_t count_even_twisted_swap_fixed(int j);

namespace reference {

/// Serial orbit closure with an explicit visited set; axes by scanning every
/// reflection of every representative. Kept as the oracle for the kernel.
std::vector<OrbitRecord> enumerate_orbits(int n, int j);

}  // namespace reference

}  // namespace gwbinom::necklace
