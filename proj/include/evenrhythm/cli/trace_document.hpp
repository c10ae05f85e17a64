#pragma once

// Serializable form of a labeled orbit. JSON key names and order are fixed:
// {"pulses","onsets","steps":[{"k","a","d","width"}],"distance_to_cycle",
//  "terminal_class","period","cap_hit"}.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenrhythm/core.hpp"
#include "evenrhythm/dynamics.hpp"

namespace evenrhythm::cli {

struct TraceRow {
  int k = 0;
  std::vector<int> a;
  std::vector<int> d;
  int width = 0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct TraceDocument {
  int pulses = 0;
  std::vector<int> onsets;
  std::vector<TraceRow> steps;
  int distance_to_cycle = 0;
  std::string terminal_class;
  int period = 0;
  bool cap_hit = false;

  friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

/// Labeled orbit of the rhythm's ascending cycle (jumping number n - 1).
TraceDocument make_trace_document(const OnsetRhythm& r, std::optional<int> max_steps = std::nullopt);
TraceDocument to_document(const OnsetRhythm& r, const OrbitReport& report);

std::string render_text(const TraceDocument& doc);
/// Header k,a,d,width; vectors joined with ';'.
std::string render_csv(const TraceDocument& doc);
/// Compact single-line JSON followed by a newline.
std::string render_json(const TraceDocument& doc);

/// Inverse of render_json. Throws UsageError on malformed input or missing keys.
TraceDocument parse_trace_json(std::string_view text);

}  // namespace evenrhythm::cli
