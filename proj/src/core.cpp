#include "evenrhythm/core.hpp"

#include <algorithm>
#include <string>

#include "evenrhythm/error.hpp"
#include "mutation.hpp"

namespace evenrhythm {

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw UsageError("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()));
  }
}

}  // namespace

Residue::Residue(int value, int modulus) : value_(value), modulus_(modulus) {
  if (modulus < 2) {
    throw UsageError("modulus must be at least 2, got " + std::to_string(modulus));
  }
  if (value < 0 || value >= modulus) {
    throw UsageError("residue " + std::to_string(value) + " outside [0, " +
                     std::to_string(modulus - 1) + "]");
  }
}

Residue Residue::reduced(std::int64_t x, int modulus) {
  if (modulus < 2) {
    throw UsageError("modulus must be at least 2, got " + std::to_string(modulus));
  }
  return Residue(reduce(x, modulus), modulus);
}

Residue residue_add(Residue a, Residue b) {
  require_same_modulus(a, b);
  const std::int64_t sum = std::int64_t{a.value()} + b.value();
  if constexpr (detail::active_mutant == detail::Mutant::no_wraparound) {
    return Residue(Residue::Unchecked{}, static_cast<int>(sum), a.modulus());
  }
  return Residue::reduced(sum, a.modulus());
}

Residue residue_negate(Residue a) { return Residue::reduced(-std::int64_t{a.value()}, a.modulus()); }

Residue residue_sub(Residue a, Residue b) { return residue_add(a, residue_negate(b)); }

// ---------------------------------------------------------------------------

OnsetRhythm::OnsetRhythm(int pulses, std::vector<int> onsets)
    : pulses_(pulses), onsets_(std::move(onsets)) {
  if (pulses_ < 3) {
    throw UsageError("a rhythm needs at least 3 pulses, got " + std::to_string(pulses_));
  }
  if (onsets_.empty()) {
    throw UsageError("a rhythm needs at least one onset");
  }
  std::sort(onsets_.begin(), onsets_.end());
  for (int p : onsets_) {
    if (p < 0 || p >= pulses_) {
      throw UsageError("onset " + std::to_string(p) + " outside [0, " +
                       std::to_string(pulses_ - 1) + "]");
    }
  }
  if (auto dup = std::adjacent_find(onsets_.begin(), onsets_.end()); dup != onsets_.end()) {
    throw UsageError("duplicate onset " + std::to_string(*dup));
  }
  if (onsets_.size() >= static_cast<std::size_t>(pulses_)) {
    throw UsageError("onset count must be below the pulse count");
  }
}

OnsetRhythm OnsetRhythm::from_binary(std::string_view bits) {
  std::vector<int> onsets;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      onsets.push_back(static_cast<int>(i));
    } else if (bits[i] != '0') {
      throw UsageError(std::string("non-binary character '") + bits[i] + "' in rhythm");
    }
  }
  return OnsetRhythm(static_cast<int>(bits.size()), std::move(onsets));
}

bool OnsetRhythm::is_onset(int pulse) const {
  return std::binary_search(onsets_.begin(), onsets_.end(), pulse);
}

std::string OnsetRhythm::binary() const {
  std::string bits(static_cast<std::size_t>(pulses_), '0');
  for (int p : onsets_) bits[static_cast<std::size_t>(p)] = '1';
  return bits;
}

// ---------------------------------------------------------------------------

bool has_property_a(std::span<const int> entries) {
  const std::size_t n = entries.size();
  if (n < 2) return false;
  std::vector<int> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  std::size_t descents = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (entries[k] > entries[(k + 1) % n]) ++descents;
  }
  if constexpr (detail::active_mutant == detail::Mutant::skip_jump_uniqueness) {
    return descents >= 1;
  }
  return descents == 1;
}

AscendingCycle::AscendingCycle(int modulus, std::vector<int> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus_ < 2) {
    throw UsageError("modulus must be at least 2, got " + std::to_string(modulus_));
  }
  if (entries_.size() < 2) {
    throw UnsupportedSize("an ascending cycle needs at least 2 entries");
  }
  for (int x : entries_) {
    if (x < 0 || x >= modulus_) {
      throw UsageError("entry " + std::to_string(x) + " outside [0, " +
                       std::to_string(modulus_ - 1) + "]");
    }
  }
  if (!has_property_a(entries_)) {
    throw InvariantViolation("entries do not ascend cyclically with exactly one descent");
  }
}

std::size_t jumping_number(const AscendingCycle& a) {
  const auto& e = a.entries();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] > e[(k + 1) % e.size()]) return k;
  }
  throw InvariantViolation("ascending cycle without a descent");
}

AscendingCycle rhythm_to_cycle(const OnsetRhythm& r) {
  if (r.onset_count() < 2) {
    throw UnsupportedSize("cycle view needs at least 2 onsets");
  }
  return AscendingCycle(r.pulses(), r.onsets());
}

OnsetRhythm cycle_to_rhythm(const AscendingCycle& a) {
  return OnsetRhythm(a.modulus(), a.entries());
}

// ---------------------------------------------------------------------------

PolygonView::PolygonView(std::vector<RootOfUnity> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw UnsupportedSize("a polygon needs at least 2 vertices");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& next = vertices_[(i + 1) % vertices_.size()];
    if (vertices_[i].modulus() != next.modulus()) {
      throw UsageError("polygon vertices with different moduli");
    }
    if (vertices_[i] == next) {
      throw UsageError("consecutive polygon vertices coincide at index " + std::to_string(i));
    }
  }
}

namespace {

std::vector<RootOfUnity> roots_from_exponents(int modulus, std::span<const int> exponents) {
  std::vector<RootOfUnity> out;
  out.reserve(exponents.size());
  for (int e : exponents) out.push_back(RootOfUnity::character(Residue(e, modulus)));
  return out;
}

}  // namespace

PolygonView::PolygonView(int modulus, std::span<const int> exponents)
    : PolygonView(roots_from_exponents(modulus, exponents)) {}

std::vector<int> PolygonView::exponents() const {
  std::vector<int> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.exponent().value());
  return out;
}

PolygonView to_polygon(const AscendingCycle& a) { return PolygonView(a.modulus(), a.entries()); }

AscendingCycle from_polygon(const PolygonView& p) { return AscendingCycle(p.modulus(), p.exponents()); }

}  // namespace evenrhythm
