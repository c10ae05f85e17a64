#pragma once

// Orbits of the fc-averaging map on difference vectors: width and block
// structure, the width/min-block descent witness, distance to the final
// cycle, and the fixed/periodic classification of terminal vectors.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenrhythm/core.hpp"
#include "evenrhythm/transforms.hpp"

namespace evenrhythm {

enum class TerminalClass {
  FixedWidth0,           // constant vector
  FixedWidth1EvenMin,    // entries in {m, m+1}, m even: fixed by dav_fc
  PeriodicWidth1OddMin,  // entries in {m, m+1}, m odd: dav_fc acts as cyc-
  Transient,             // width >= 2
};

std::string_view to_string(TerminalClass c) noexcept;
/// Throws UsageError for an unknown name.
TerminalClass terminal_class_from_string(std::string_view name);

/// max(d) - min(d). Throws UsageError on an empty vector.
int width(const DifferenceVector& d);

/// Cyclic index run [first, last] on the n-cycle; `length` counts its members.
struct CyclicInterval {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t length = 0;

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

/// A min block whose following gap holds an entry >= m + 2.
struct DeepGap {
  std::size_t block = 0;        // index into BlockDecomposition::blocks_min
  std::size_t lead_length = 0;  // consecutive (m+1)-entries right after the block
};

/// Maximal cyclic runs of minimum and maximum entries.
///
/// Blocks are ordered by their first index. A run crossing index n-1 -> 0 is a
/// single block whose `first` exceeds its `last`. For a constant vector both
/// block lists hold the whole cycle [0, n-1] and `full_cycle` is set.
struct BlockDecomposition {
  int min_value = 0;
  int max_value = 0;
  bool full_cycle = false;
  std::vector<CyclicInterval> blocks_min;
  std::vector<CyclicInterval> blocks_max;
  /// gaps[p]: entries strictly between blocks_min[p] and the next min block.
  std::vector<std::size_t> gaps;
  std::size_t s_min = 0;
  std::size_t s_max = 0;
  std::vector<DeepGap> deep_gaps;
};

BlockDecomposition decompose_blocks(const DifferenceVector& d);

/// Number of entries equal to min(d), i.e. the total length of the min blocks.
std::size_t min_block_total(const DifferenceVector& d);

/// k-fold dav_fc. Throws UsageError for k < 0.
DifferenceVector iterate(const DifferenceVector& d, int k);

/// Least p >= 1 with cyc-^p(d) = d. Divides n.
int rotation_period(const DifferenceVector& d);

/// max(N * n, 64) for CD vectors. Untagged vectors use max(n * n * max(w, 1), 64).
int default_cap(const DifferenceVector& d);

struct TraceStep {
  int k = 0;
  std::optional<AscendingCycle> a;
  DifferenceVector d;
  int width = 0;
};

/// Orbit d^(0), d^(1), ... up to the final cycle.
///
/// `trace` holds rows k = 0 .. K + period - 1: the transient part followed by
/// each state of the terminal cycle once. When the cap is hit before width <= 1,
/// `cap_hit` is set, the trace stops at k = cap, `distance_to_cycle` equals
/// the cap, the class is Transient and `period` is 0.
struct OrbitReport {
  std::vector<TraceStep> trace;
  int distance_to_cycle = 0;
  TerminalClass terminal_class = TerminalClass::Transient;
  int period = 1;
  bool cap_hit = false;
};

OrbitReport orbit(const DifferenceVector& d, std::optional<int> cap = std::nullopt);

/// Like orbit() but iterates dav_A on the cycle and derives each d^(k) from
/// it. Throws InvariantViolation if diff(a^(k)) ever departs from the
/// directly iterated dav_fc^k(d^(0)).
OrbitReport orbit_labeled(const AscendingCycle& a, std::optional<int> cap = std::nullopt);

/// Least k >= 0 with w(d^(k)) <= 1. Throws CapExceeded past the cap.
int distance_to_cycle(const DifferenceVector& d, std::optional<int> cap = std::nullopt);

enum class WitnessKind { WidthDrop, SminDrop };
std::string_view to_string(WitnessKind kind) noexcept;

struct ConditionWitness {
  int k = 0;
  WitnessKind kind = WitnessKind::WidthDrop;
};

/// Least k >= 1 where the width or the min-block total strictly drops.
/// A width drop wins when both happen at the same k. Requires w(d) >= 2
/// (UsageError); throws CapExceeded past the cap.
ConditionWitness condition_c_witness(const DifferenceVector& d, std::optional<int> cap = std::nullopt);

/// Closed-form class of d itself (not of its orbit's end).
TerminalClass classify(const DifferenceVector& d);

struct ErosionBlockOutcome {
  CyclicInterval block;
  std::size_t lead_length = 0;
  int steps = 0;                // lead_length + 1
  std::size_t length_after = 0; // expected |block| - 1
  bool held = false;
  std::string detail;           // set when !held
};

struct ErosionResult {
  bool passed = true;
  bool parity_reduced = false;  // min was odd; the check ran on f+(d)
  DifferenceVector examined;
  std::vector<ErosionBlockOutcome> blocks;
};

/// For every min block followed by a deep gap, applies dav_fc lead_length + 1
/// times and checks that the block lost exactly its last index (or vanished
/// when it had length 1). An odd minimum is first lifted to even through f+.
/// Requires w(d) >= 2 (UsageError).
ErosionResult block_erosion_check(const DifferenceVector& d);

}  // namespace evenrhythm
