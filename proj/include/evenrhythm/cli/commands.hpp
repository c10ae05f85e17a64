#pragma once

// Subcommand bodies. Each writes its result to `out`, diagnostics to `err`,
// and returns the process exit code. Parse problems surface as UsageError
// and are mapped to exit code 2 by the dispatcher.

#include <iosfwd>
#include <optional>
#include <string_view>

#include "evenrhythm/core.hpp"
#include "evenrhythm/transforms.hpp"

namespace evenrhythm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

enum class Format { Text, Csv, Json };
/// "text", "csv" or "json"; UsageError otherwise.
Format parse_format(std::string_view name);

/// Orbit table until width <= 1 plus one terminal period. Exit 3 when the
/// step cap is reached first (the partial trace is still printed).
int cmd_trace(const OnsetRhythm& r, std::optional<int> max_steps, Format format, std::ostream& out,
              std::ostream& err);

/// F^K(r), K the distance to the final cycle, in all three notations.
int cmd_even(const OnsetRhythm& r, std::optional<int> max_steps, Format format, std::ostream& out,
             std::ostream& err);

int cmd_classify(const DifferenceVector& d, Format format, std::ostream& out, std::ostream& err);

/// 3 <= max_pulses <= 12. Exit 0 iff every identity holds.
int cmd_verify(int max_pulses, std::ostream& out, std::ostream& err);

/// DOT for CD_N^(n). Exit 3 if the graph disagrees with the classification.
int cmd_graph(int pulses, int n, std::ostream& out, std::ostream& err);

/// The built-in corpus with computed distances. Exit 3 on any mismatch.
int cmd_corpus(Format format, std::ostream& out, std::ostream& err);

}  // namespace evenrhythm::cli
