#include "gwbinom/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gwbinom::partitions {
namespace {

template <typename T>
std::vector<T> rotated(const std::vector<T>& v, std::size_t k) {
  std::vector<T> out(v.size());
  std::rotate_copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % v.size()), v.end(), out.begin());
  return out;
}

std::vector<int> least_shift(const std::vector<int>& v, std::size_t step) {
  std::vector<int> best = v;
  for (std::size_t k = step; k < v.size(); k += step) best = std::min(best, rotated(v, k));
  return best;
}

}  // namespace

MarkedCyclicPartition MarkedCyclicPartition::from_runs(std::vector<int> runs) {
  if (runs.empty() || runs.size() % 2 != 0) throw std::invalid_argument("marked partition needs an even, nonzero length");
  if (std::any_of(runs.begin(), runs.end(), [](int r) { return r < 1; })) {
    throw std::invalid_argument("marked partition entries must be positive");
  }
  MarkedCyclicPartition p;
  p.runs_ = least_shift(runs, 2);
  return p;
}

int MarkedCyclicPartition::bead_count() const { return std::accumulate(runs_.begin(), runs_.end(), 0); }

int MarkedCyclicPartition::blue_count() const {
  int s = 0;
  for (std::size_t i = 1; i < runs_.size(); i += 2) s += runs_[i];
  return s;
}

std::string MarkedCyclicPartition::to_text() const {
  std::string s = "(";
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i != 0) s += ' ';
    s += std::to_string(runs_[i]);
    if (i % 2 == 0) s += '\'';
  }
  return s + ")";
}

MarkedCyclicPartition encode(const necklace::OrbitRecord& rec) {
  using necklace::Color;
  const auto& l = rec.canonical;
  const int n = l.size();
  int start = -1;
  for (int p = 0; p < n && start < 0; ++p) {
    if (l.at(p) == Color::red && l.at(p - 1) == Color::blue) start = p;
  }
  if (start < 0) throw std::invalid_argument("encode: monochrome necklace has no runs");

  std::vector<int> runs;
  int length = 1;
  for (int k = 1; k < n; ++k) {
    if (l.at(start + k) == l.at(start + k - 1)) {
      ++length;
    } else {
      runs.push_back(length);
      length = 1;
    }
  }
  runs.push_back(length);
  return MarkedCyclicPartition::from_runs(std::move(runs));
}

necklace::Necklace decode(const MarkedCyclicPartition& p) {
  const int n = p.bead_count();
  necklace::Mask m = 0;
  int pos = 0;
  for (std::size_t i = 0; i < p.runs().size(); ++i) {
    for (int k = 0; k < p.runs()[i]; ++k, ++pos) {
      if (i % 2 == 1) m |= necklace::Mask{1} << pos;
    }
  }
  return {n, m};
}

MarkedCyclicPartition exchange_markings(const MarkedCyclicPartition& p) {
  return MarkedCyclicPartition::from_runs(rotated(p.runs(), 1));
}

int partition_period(const MarkedCyclicPartition& p) {
  const auto& v = p.runs();
  for (std::size_t k = 2; k < v.size(); k += 2) {
    if (rotated(v, k) == v) return static_cast<int>(k);
  }
  return static_cast<int>(v.size());
}

std::vector<CyclicCompositionClass> cyclic_composition_classes(int j) {
  if (j < 1 || j > 30) throw std::invalid_argument("cyclic_composition_classes: need 1 <= j <= 30");
  std::set<std::vector<int>> classes;
  // Bit i of cuts set means a part ends after unit i.
  for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << (j - 1)); ++cuts) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < j - 1; ++i) {
      if ((cuts >> i) & 1U) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    classes.insert(least_shift(parts, 1));
  }
  std::vector<CyclicCompositionClass> out;
  for (const auto& parts : classes) {
    int period = static_cast<int>(parts.size());
    for (std::size_t k = 1; k < parts.size(); ++k) {
      if (rotated(parts, k) == parts) {
        period = static_cast<int>(k);
        break;
      }
    }
    out.push_back({parts, period});
  }
  return out;
}

std::int64_t odd_period_composition_classes(int j) {
  const auto classes = cyclic_composition_classes(j);
  return std::count_if(classes.begin(), classes.end(), [](const CyclicCompositionClass& c) { return c.period % 2 == 1; });
}

std::int64_t efixed_untwisted_count(int j, PeriodFilter filter) {
  if (j < 1) throw std::invalid_argument("efixed_untwisted_count: j must be positive");
  std::int64_t count = 0;
  for (const auto& rec : necklace::enumerate_orbits(2 * j, j)) {
    if (necklace::canonical(necklace::color_swap(rec.canonical)) != rec.canonical) continue;
    const bool nu2_is_1 = rec.period % 4 == 2;
    switch (filter) {
      case PeriodFilter::all:
        ++count;
        break;
      case PeriodFilter::nu2_equals_1:
        count += nu2_is_1 ? 1 : 0;
        break;
      case PeriodFilter::nu2_above_1:
        count += (rec.period % 4 == 0) ? 1 : 0;
        break;
    }
  }
  return count;
}

}  // namespace gwbinom::partitions
