#include "evenrhythm/cli/notation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "evenrhythm/error.hpp"

namespace evenrhythm::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\n' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view context) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw UsageError("expected an integer, got '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

bool starts_with_interval_prefix(std::string_view s) { return s.size() >= 2 && s.substr(0, 2) == "i:"; }

OnsetRhythm parse_binary(std::string_view bits, std::optional<int> pulses) {
  if (pulses && static_cast<int>(bits.size()) != *pulses) {
    throw UsageError("binary rhythm has length " + std::to_string(bits.size()) + " but --pulses is " +
                     std::to_string(*pulses));
  }
  if (bits.find_first_not_of("01") == std::string_view::npos && bits.find('1') == std::string_view::npos) {
    throw UsageError("rhythm '" + std::string(bits) + "' has no onsets");
  }
  return OnsetRhythm::from_binary(bits);
}

OnsetRhythm parse_onsets(std::string_view text, std::optional<int> pulses) {
  if (!pulses) throw UsageError("an onset list needs --pulses");
  if (trim(text).empty()) throw UsageError("empty onset list");
  std::vector<int> onsets = parse_int_list(text);
  std::vector<int> sorted = onsets;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw UsageError("duplicate onset " + std::to_string(*dup));
  }
  for (int x : onsets) {
    if (x < 0 || x >= *pulses) {
      throw UsageError("onset " + std::to_string(x) + " outside [0, " + std::to_string(*pulses - 1) + "]");
    }
  }
  return OnsetRhythm(*pulses, std::move(onsets));
}

OnsetRhythm parse_interval_rhythm(std::string_view text, std::optional<int> pulses) {
  std::string_view body = trim(text).substr(2);
  int anchor = 0;
  if (const auto at = body.find('@'); at != std::string_view::npos) {
    anchor = parse_int(body.substr(at + 1), text);
    body = body.substr(0, at);
  }
  const std::vector<int> intervals = parse_int_list(body);
  for (int x : intervals) {
    if (x < 1) throw UsageError("interval " + std::to_string(x) + " in '" + std::string(text) + "' is not positive");
  }
  const int sum = std::accumulate(intervals.begin(), intervals.end(), 0);
  if (pulses && sum != *pulses) {
    throw UsageError("intervals sum to " + std::to_string(sum) + ", expected " + std::to_string(*pulses));
  }
  if (anchor < 0 || anchor >= sum) {
    throw UsageError("anchor " + std::to_string(anchor) + " outside [0, " + std::to_string(sum - 1) + "]");
  }
  std::vector<int> onsets;
  int pos = anchor;
  for (int x : intervals) {
    onsets.push_back(pos);
    pos = reduce(pos + x, sum);
  }
  return OnsetRhythm(sum, std::move(onsets));
}

}  // namespace

Notation detect_notation(std::string_view text, std::optional<int> pulses) {
  text = trim(text);
  if (starts_with_interval_prefix(text)) return Notation::Intervals;
  if (text.find(',') != std::string_view::npos) return Notation::Onsets;
  if (pulses && static_cast<int>(text.size()) != *pulses) return Notation::Onsets;
  return Notation::Binary;
}

OnsetRhythm parse_rhythm(std::string_view text, std::optional<int> pulses) {
  switch (detect_notation(text, pulses)) {
    case Notation::Intervals:
      return parse_interval_rhythm(text, pulses);
    case Notation::Onsets:
      return parse_onsets(text, pulses);
    case Notation::Binary:
      break;
  }
  const std::string_view bits = trim(text);
  if (bits.empty()) throw UsageError("empty rhythm");
  return parse_binary(bits, pulses);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::string_view body = trim(text);
  if (starts_with_interval_prefix(body)) body = body.substr(2);
  if (trim(body).empty()) throw UsageError("empty list");
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    out.push_back(parse_int(body.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

DifferenceVector parse_intervals(std::string_view text) { return DifferenceVector(parse_int_list(text)); }

std::string join(const std::vector<int>& values, char separator) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += separator;
    s += std::to_string(values[i]);
  }
  return s;
}

std::vector<int> onset_intervals(const OnsetRhythm& r) {
  const auto& on = r.onsets();
  std::vector<int> out(on.size());
  for (std::size_t i = 0; i < on.size(); ++i) out[i] = reduce(on[(i + 1) % on.size()] - on[i], r.pulses());
  if (on.size() == 1) out[0] = r.pulses();
  return out;
}

std::string format_binary(const OnsetRhythm& r) { return r.binary(); }

std::string format_onsets(const OnsetRhythm& r) { return join(r.onsets()); }

std::string format_intervals(const OnsetRhythm& r) {
  std::string s = "i:" + join(onset_intervals(r));
  if (const int anchor = r.onsets().front(); anchor != 0) s += "@" + std::to_string(anchor);
  return s;
}

std::string format(const OnsetRhythm& r, Notation notation) {
  switch (notation) {
    case Notation::Binary:
      return format_binary(r);
    case Notation::Onsets:
      return format_onsets(r);
    case Notation::Intervals:
      return format_intervals(r);
  }
  return format_binary(r);
}

}  // namespace evenrhythm::cli
