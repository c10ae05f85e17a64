#pragma once

// Residues mod N and the three equivalent views of a cyclic rhythm:
// onset sets, ascending cycles, and polygons on the N-th roots of unity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evenrhythm {

/// R_N: the representative of `x` in [0, modulus - 1] (mathematical mod,
/// so reduce(-1, 16) == 15).
constexpr int reduce(std::int64_t x, int modulus) noexcept {
  const auto r = x % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

/// An element of Z_N = {0, ..., N-1} tagged with its modulus.
class Residue {
 public:
  /// Requires modulus >= 2 and 0 <= value < modulus; throws UsageError otherwise.
  Residue(int value, int modulus);

  /// Applies R_N to an arbitrary integer.
  static Residue reduced(std::int64_t x, int modulus);

  int value() const noexcept { return value_; }
  int modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  struct Unchecked {};
  Residue(Unchecked, int value, int modulus) noexcept : value_(value), modulus_(modulus) {}
  friend Residue residue_add(Residue a, Residue b);

  int value_;
  int modulus_;
};

/// a +_N b = R_N(a + b). Throws UsageError on modulus mismatch.
Residue residue_add(Residue a, Residue b);
/// The additive inverse -a in Z_N.
Residue residue_negate(Residue a);
/// a -_N b = a +_N (-b).
Residue residue_sub(Residue a, Residue b);

/// A point of mu_N, stored as the exponent of zeta_N = exp(2 pi i / N).
/// No complex number is ever materialized; multiplication adds exponents.
class RootOfUnity {
 public:
  explicit RootOfUnity(Residue exponent) : exponent_(exponent) {}

  /// chi_N(a) = zeta_N^a.
  static RootOfUnity character(Residue a) { return RootOfUnity(a); }

  Residue exponent() const noexcept { return exponent_; }
  int modulus() const noexcept { return exponent_.modulus(); }
  RootOfUnity inverse() const { return RootOfUnity(residue_negate(exponent_)); }

  friend RootOfUnity operator*(RootOfUnity p, RootOfUnity q) {
    return RootOfUnity(residue_add(p.exponent_, q.exponent_));
  }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  Residue exponent_;
};

/// A rhythm of N pulses with n sounded onsets (a weight-n binary word of length N).
class OnsetRhythm {
 public:
  /// Onsets may be given in any order. Requires N >= 3, 1 <= n < N, every
  /// onset in [0, N-1] and no duplicates; throws UsageError otherwise.
  OnsetRhythm(int pulses, std::vector<int> onsets);

  /// Decodes a {0,1} string, pulse 0 leftmost.
  static OnsetRhythm from_binary(std::string_view bits);

  int pulses() const noexcept { return pulses_; }
  std::size_t onset_count() const noexcept { return onsets_.size(); }
  /// Sorted ascending.
  const std::vector<int>& onsets() const noexcept { return onsets_; }
  bool is_onset(int pulse) const;
  /// Pulse 0 leftmost, '1' for an onset.
  std::string binary() const;

  friend bool operator==(const OnsetRhythm&, const OnsetRhythm&) = default;

 private:
  int pulses_;
  std::vector<int> onsets_;
};

/// True iff the entries are pairwise distinct and exactly one cyclic index k
/// has entries[k] > entries[k+1] (with entries[n] = entries[0]).
bool has_property_a(std::span<const int> entries);

/// An element of CA_N^(n): n >= 2 distinct residues that ascend cyclically
/// with a single wrap past N-1.
class AscendingCycle {
 public:
  /// Throws UnsupportedSize when n < 2, UsageError for entries outside
  /// [0, N-1], InvariantViolation when property (A) fails.
  AscendingCycle(int modulus, std::vector<int> entries);

  int modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  /// Entry at k mod n, as a residue.
  Residue at(std::size_t k) const { return Residue(entries_[k % entries_.size()], modulus_); }

  friend bool operator==(const AscendingCycle&, const AscendingCycle&) = default;

 private:
  int modulus_;
  std::vector<int> entries_;
};

/// The unique index k0 with a[k0] > a[k0 + 1], indices mod n.
std::size_t jumping_number(const AscendingCycle& a);

/// Onsets sorted ascending from the smallest; jumping number n - 1.
/// Throws UnsupportedSize when the rhythm has fewer than two onsets.
AscendingCycle rhythm_to_cycle(const OnsetRhythm& r);
/// Forgets the starting index.
OnsetRhythm cycle_to_rhythm(const AscendingCycle& a);

/// A cyclic polygon mod N: vertices on mu_N, consecutive vertices distinct.
class PolygonView {
 public:
  /// Throws UsageError when two cyclically consecutive vertices coincide.
  explicit PolygonView(std::vector<RootOfUnity> vertices);
  PolygonView(int modulus, std::span<const int> exponents);

  int modulus() const noexcept { return vertices_.front().modulus(); }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<RootOfUnity>& vertices() const noexcept { return vertices_; }
  const RootOfUnity& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::vector<int> exponents() const;

  friend bool operator==(const PolygonView&, const PolygonView&) = default;

 private:
  std::vector<RootOfUnity> vertices_;
};

/// X_N: applies chi_N to every entry.
PolygonView to_polygon(const AscendingCycle& a);
/// Inverse of X_N. Throws InvariantViolation if the exponents lack property (A).
AscendingCycle from_polygon(const PolygonView& p);

}  // namespace evenrhythm
