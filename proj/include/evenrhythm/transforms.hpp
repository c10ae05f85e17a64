#pragma once

// Vector-level maps: the A-difference, the averaging transformations on
// cycles, polygons and difference vectors, and the bijections of Z^n
// (rotations, reversal, unit shifts) that intertwine them.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "evenrhythm/core.hpp"

namespace evenrhythm {

/// A vector in Z^n. When it carries a context modulus N it is an element of
/// CD_N^(n): entries in [0, N-1] summing to N as plain integers.
///
/// Equality compares entries only; the modulus tag is bookkeeping.
class DifferenceVector {
 public:
  DifferenceVector() = default;
  explicit DifferenceVector(std::vector<int> entries) : entries_(std::move(entries)) {}
  DifferenceVector(std::initializer_list<int> entries) : entries_(entries) {}

  /// Validates CD_N^(n) membership; throws UsageError otherwise.
  static DifferenceVector in_cd(std::vector<int> entries, int modulus);

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  /// Entry at i mod n.
  int cyclic(std::ptrdiff_t i) const;

  std::optional<int> context_modulus() const noexcept { return modulus_; }
  DifferenceVector without_modulus() const { return DifferenceVector(entries_); }

  std::int64_t sum() const noexcept;
  /// Both throw UsageError on an empty vector.
  int min() const;
  int max() const;

  /// "(3,4,7,2)".
  std::string to_string() const;

  friend bool operator==(const DifferenceVector& x, const DifferenceVector& y) noexcept {
    return x.entries_ == y.entries_;
  }

 private:
  std::vector<int> entries_;
  std::optional<int> modulus_;
};

/// entry k = a[k+1] -_N a[k]. Entries are >= 1 and sum to N.
DifferenceVector diff(const AscendingCycle& a);

/// entry k = av_z(a[k], a[k+1]); the result again has property (A).
AscendingCycle dav_A(const AscendingCycle& a);

/// entry k = av_mu(P[k], P[k+1]), computed on the roots themselves.
PolygonView dav_P(const PolygonView& p);

/// entry k = av_fc(d[k], d[k+1]). Preserves the sum, hence CD membership.
DifferenceVector dav_fc(const DifferenceVector& d);
/// entry k = av_cf(d[k], d[k+1]).
DifferenceVector dav_cf(const DifferenceVector& d);

/// cyc+: last entry moves to the front.
DifferenceVector rotate_right(const DifferenceVector& d);
/// cyc-: first entry moves to the back.
DifferenceVector rotate_left(const DifferenceVector& d);
/// iota: (iota d)[i] = d[n-1-i].
DifferenceVector reverse(const DifferenceVector& d);
/// add+ / add-: every entry +1 / -1. Drops the CD tag.
DifferenceVector shift_up(const DifferenceVector& d);
DifferenceVector shift_down(const DifferenceVector& d);

/// f+ = add+ . iota
DifferenceVector f_plus(const DifferenceVector& d);
/// g+ = add+ . iota . cyc+
DifferenceVector g_plus(const DifferenceVector& d);

/// F(r): one averaging step on the onset set. Requires at least two onsets.
OnsetRhythm rhythm_step(const OnsetRhythm& r);

}  // namespace evenrhythm
