#include "evenrhythm/dynamics.hpp"

#include <algorithm>
#include <array>

#include "evenrhythm/averages.hpp"
#include "evenrhythm/error.hpp"

namespace evenrhythm {

namespace {

constexpr std::array<std::pair<TerminalClass, std::string_view>, 4> kClassNames{{
    {TerminalClass::FixedWidth0, "FixedWidth0"},
    {TerminalClass::FixedWidth1EvenMin, "FixedWidth1EvenMin"},
    {TerminalClass::PeriodicWidth1OddMin, "PeriodicWidth1OddMin"},
    {TerminalClass::Transient, "Transient"},
}};

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((i % sn) + sn) % sn);
}

// Maximal cyclic runs of entries equal to `value`, ordered by first index.
// Assumes d is not constant.
std::vector<CyclicInterval> runs_of(const DifferenceVector& d, int value) {
  const std::size_t n = d.size();
  std::vector<CyclicInterval> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] != value || d[wrap(static_cast<std::ptrdiff_t>(i) - 1, n)] == value) continue;
    CyclicInterval run{i, i, 1};
    while (d[(run.last + 1) % n] == value) {
      run.last = (run.last + 1) % n;
      ++run.length;
    }
    out.push_back(run);
  }
  return out;
}

std::size_t total_length(const std::vector<CyclicInterval>& blocks) {
  std::size_t s = 0;
  for (const auto& b : blocks) s += b.length;
  return s;
}

int resolve_cap(const DifferenceVector& d, std::optional<int> cap) {
  const int c = cap.value_or(default_cap(d));
  if (c < 1) throw UsageError("iteration cap must be at least 1");
  return c;
}

// Shared tail of orbit()/orbit_labeled(): the current state has width <= 1.
// Appends the remaining states of the terminal cycle and checks that the
// closed form really closes the cycle.
template <typename Step>
void finish_cycle(OrbitReport& report, Step&& step) {
  const TraceStep& terminal = report.trace.back();
  report.distance_to_cycle = terminal.k;
  report.terminal_class = classify(terminal.d);
  report.period =
      report.terminal_class == TerminalClass::PeriodicWidth1OddMin ? rotation_period(terminal.d) : 1;

  const DifferenceVector start = terminal.d;
  for (int i = 1; i <= report.period; ++i) {
    TraceStep next = step(report.trace.back());
    if (i == report.period) {
      if (!(next.d == start)) {
        throw InvariantViolation("terminal cycle did not close after " + std::to_string(report.period) +
                                 " steps from " + start.to_string());
      }
      break;
    }
    report.trace.push_back(std::move(next));
  }
}

}  // namespace

std::string_view to_string(TerminalClass c) noexcept {
  for (const auto& [cls, name] : kClassNames) {
    if (cls == c) return name;
  }
  return "Transient";
}

TerminalClass terminal_class_from_string(std::string_view name) {
  for (const auto& [cls, n] : kClassNames) {
    if (n == name) return cls;
  }
  throw UsageError("unknown terminal class '" + std::string(name) + "'");
}

std::string_view to_string(WitnessKind kind) noexcept {
  return kind == WitnessKind::WidthDrop ? "WidthDrop" : "SminDrop";
}

int width(const DifferenceVector& d) {
  if (d.empty()) throw UsageError("width of an empty vector");
  return d.max() - d.min();
}

BlockDecomposition decompose_blocks(const DifferenceVector& d) {
  if (d.empty()) throw UsageError("block decomposition of an empty vector");
  const std::size_t n = d.size();
  BlockDecomposition out;
  out.min_value = d.min();
  out.max_value = d.max();

  if (out.min_value == out.max_value) {
    const CyclicInterval whole{0, n - 1, n};
    out.full_cycle = true;
    out.blocks_min = {whole};
    out.blocks_max = {whole};
    out.gaps = {0};
    out.s_min = out.s_max = n;
    return out;
  }

  out.blocks_min = runs_of(d, out.min_value);
  out.blocks_max = runs_of(d, out.max_value);
  out.s_min = total_length(out.blocks_min);
  out.s_max = total_length(out.blocks_max);

  const int m = out.min_value;
  const std::size_t count = out.blocks_min.size();
  for (std::size_t p = 0; p < count; ++p) {
    const auto& block = out.blocks_min[p];
    const auto& next = out.blocks_min[(p + 1) % count];
    const std::size_t gap = (next.first + n - block.last - 1) % n;
    out.gaps.push_back(gap);

    bool deep = false;
    for (std::size_t t = 1; t <= gap; ++t) {
      if (d[(block.last + t) % n] >= m + 2) deep = true;
    }
    if (!deep) continue;
    std::size_t lead = 0;
    while (d[(block.last + 1 + lead) % n] == m + 1) ++lead;
    out.deep_gaps.push_back({p, lead});
  }
  return out;
}

std::size_t min_block_total(const DifferenceVector& d) {
  const int m = d.min();
  return static_cast<std::size_t>(std::count(d.entries().begin(), d.entries().end(), m));
}

DifferenceVector iterate(const DifferenceVector& d, int k) {
  if (k < 0) throw UsageError("iteration count must be non-negative");
  DifferenceVector cur = d;
  for (int i = 0; i < k; ++i) cur = dav_fc(cur);
  return cur;
}

int rotation_period(const DifferenceVector& d) {
  const std::size_t n = d.size();
  if (n == 0) throw UsageError("rotation period of an empty vector");
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = d[(i + p) % n] == d[i];
    if (same) return static_cast<int>(p);
  }
  return static_cast<int>(n);
}

int default_cap(const DifferenceVector& d) {
  const int n = static_cast<int>(d.size());
  if (auto modulus = d.context_modulus()) return std::max(*modulus * n, 64);
  const int w = d.empty() ? 0 : width(d);
  return std::max(n * n * std::max(w, 1), 64);
}

OrbitReport orbit(const DifferenceVector& d, std::optional<int> cap) {
  const int limit = resolve_cap(d, cap);
  OrbitReport report;
  report.trace.push_back({0, std::nullopt, d, width(d)});
  while (report.trace.back().width > 1) {
    const TraceStep& cur = report.trace.back();
    if (cur.k == limit) {
      report.cap_hit = true;
      report.distance_to_cycle = limit;
      report.terminal_class = TerminalClass::Transient;
      report.period = 0;
      return report;
    }
    DifferenceVector next = dav_fc(cur.d);
    const int w = width(next);
    report.trace.push_back({cur.k + 1, std::nullopt, std::move(next), w});
  }
  finish_cycle(report, [](const TraceStep& s) {
    DifferenceVector next = dav_fc(s.d);
    const int w = width(next);
    return TraceStep{s.k + 1, std::nullopt, std::move(next), w};
  });
  return report;
}

OrbitReport orbit_labeled(const AscendingCycle& a, std::optional<int> cap) {
  const DifferenceVector d0 = diff(a);
  const int limit = resolve_cap(d0, cap);

  // The d column is iterated on its own and compared with diff(a^(k)).
  const auto step = [](const TraceStep& s) {
    AscendingCycle next_a = dav_A(*s.a);
    DifferenceVector next_d = dav_fc(s.d);
    DifferenceVector derived = diff(next_a);
    if (!(derived == next_d)) {
      throw InvariantViolation("diff(a^(" + std::to_string(s.k + 1) + ")) = " + derived.to_string() +
                               " but dav_fc gives " + next_d.to_string());
    }
    const int w = width(next_d);
    return TraceStep{s.k + 1, std::move(next_a), std::move(next_d), w};
  };

  OrbitReport report;
  report.trace.push_back({0, a, d0, width(d0)});
  while (report.trace.back().width > 1) {
    if (report.trace.back().k == limit) {
      report.cap_hit = true;
      report.distance_to_cycle = limit;
      report.terminal_class = TerminalClass::Transient;
      report.period = 0;
      return report;
    }
    report.trace.push_back(step(report.trace.back()));
  }
  finish_cycle(report, step);
  return report;
}

int distance_to_cycle(const DifferenceVector& d, std::optional<int> cap) {
  const int limit = resolve_cap(d, cap);
  DifferenceVector cur = d;
  for (int k = 0; k <= limit; ++k) {
    if (width(cur) <= 1) return k;
    cur = dav_fc(cur);
  }
  throw CapExceeded("width stayed above 1 for " + std::to_string(limit) + " steps from " + d.to_string());
}

ConditionWitness condition_c_witness(const DifferenceVector& d, std::optional<int> cap) {
  const int w0 = width(d);
  if (w0 < 2) throw UsageError("descent witness needs width >= 2, got " + std::to_string(w0));
  const int limit = resolve_cap(d, cap);
  const std::size_t s0 = min_block_total(d);
  DifferenceVector cur = d;
  for (int k = 1; k <= limit; ++k) {
    cur = dav_fc(cur);
    if (width(cur) < w0) return {k, WitnessKind::WidthDrop};
    if (min_block_total(cur) < s0) return {k, WitnessKind::SminDrop};
  }
  throw CapExceeded("no width or min-block drop within " + std::to_string(limit) + " steps from " +
                    d.to_string());
}

TerminalClass classify(const DifferenceVector& d) {
  const int w = width(d);
  if (w == 0) return TerminalClass::FixedWidth0;
  if (w == 1) return is_odd(d.min()) ? TerminalClass::PeriodicWidth1OddMin : TerminalClass::FixedWidth1EvenMin;
  return TerminalClass::Transient;
}

ErosionResult block_erosion_check(const DifferenceVector& d) {
  if (width(d) < 2) throw UsageError("block erosion needs width >= 2, got " + std::to_string(width(d)));

  ErosionResult result;
  result.parity_reduced = is_odd(d.min());
  result.examined = result.parity_reduced ? f_plus(d) : d;

  const DifferenceVector& e = result.examined;
  const std::size_t n = e.size();
  const BlockDecomposition blocks = decompose_blocks(e);
  const int m = blocks.min_value;

  for (const DeepGap& gap : blocks.deep_gaps) {
    ErosionBlockOutcome outcome;
    outcome.block = blocks.blocks_min[gap.block];
    outcome.lead_length = gap.lead_length;
    outcome.steps = static_cast<int>(gap.lead_length) + 1;
    outcome.length_after = outcome.block.length - 1;

    const DifferenceVector after = iterate(e, outcome.steps);
    const std::size_t first = outcome.block.first;
    const std::size_t last = outcome.block.last;
    std::string problem;
    // The surviving run must be exactly [first, last - 1].
    for (std::size_t t = 0; t + 1 < outcome.block.length; ++t) {
      const std::size_t i = (first + t) % n;
      if (after[i] != m) problem = "index " + std::to_string(i) + " left the minimum";
    }
    if (after[last] <= m) problem = "block end " + std::to_string(last) + " still at the minimum";
    if (outcome.block.length > 1 && after[wrap(static_cast<std::ptrdiff_t>(first) - 1, n)] <= m) {
      problem = "index before the block dropped to the minimum";
    }
    outcome.held = problem.empty();
    if (!outcome.held) {
      outcome.detail = problem + " after " + std::to_string(outcome.steps) + " steps: " + after.to_string();
      result.passed = false;
    }
    result.blocks.push_back(std::move(outcome));
  }
  return result;
}

}  // namespace evenrhythm
