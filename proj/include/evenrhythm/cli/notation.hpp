#pragma once

// The three text forms of a rhythm.
//
//   binary     "1001001000100100"    pulse 0 leftmost, N = length
//   onsets     "0,3,6,10,13"         needs the pulse count from elsewhere
//   intervals  "i:3,3,4,3,3"         N = sum; first onset at pulse 0
//
// diff forgets where the cycle starts, so an interval list always puts its
// first onset at pulse 0 unless it carries an explicit anchor: "i:3,3,3,3,4@2"
// starts at pulse 2. format_intervals() writes the anchor only when it is
// nonzero, which keeps every printed rhythm re-parseable to itself.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenrhythm/core.hpp"
#include "evenrhythm/transforms.hpp"

namespace evenrhythm::cli {

enum class Notation { Binary, Onsets, Intervals };

/// Picks the notation from the text: an "i:" prefix means intervals, a comma
/// (or a pulse count that differs from the text length) means onsets, and
/// anything else is read as a binary word.
Notation detect_notation(std::string_view text, std::optional<int> pulses);

/// Throws UsageError on a non-{0,1} character, an onset >= N, a duplicate
/// onset, intervals whose sum differs from `pulses`, or an empty onset set.
OnsetRhythm parse_rhythm(std::string_view text, std::optional<int> pulses = std::nullopt);

/// Comma list of integers; surrounding whitespace and an optional "i:" prefix
/// are accepted. Throws UsageError on anything else or an empty list.
std::vector<int> parse_int_list(std::string_view text);

/// Interval vector as given, untagged (any integers, length >= 1).
DifferenceVector parse_intervals(std::string_view text);

std::string format_binary(const OnsetRhythm& r);
std::string format_onsets(const OnsetRhythm& r);
/// "i:3,3,3,3,4" or "i:3,3,3,3,4@2" when the first onset is not pulse 0.
std::string format_intervals(const OnsetRhythm& r);
std::string format(const OnsetRhythm& r, Notation notation);

/// Cyclic gaps between consecutive onsets, starting from the smallest onset.
std::vector<int> onset_intervals(const OnsetRhythm& r);

std::string join(const std::vector<int>& values, char separator = ',');

}  // namespace evenrhythm::cli
