#include "evenrhythm/cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "evenrhythm/averages.hpp"
#include "evenrhythm/cli/corpus.hpp"
#include "evenrhythm/cli/notation.hpp"
#include "evenrhythm/cli/trace_document.hpp"
#include "evenrhythm/dynamics.hpp"
#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"

namespace evenrhythm::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

const DifferenceVector kBossaCycle{3, 3, 4, 3, 3};

bool is_rotation_of(const std::vector<int>& v, const DifferenceVector& target) {
  if (v.size() != target.size()) return false;
  std::vector<int> r = v;
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (r == target.entries()) return true;
    std::rotate(r.begin(), r.begin() + 1, r.end());
  }
  return false;
}

void report_cap(const TraceDocument& doc, std::ostream& err) {
  err << "error: width still above 1 after " << doc.distance_to_cycle << " steps (raise --max-steps)\n";
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("unknown format '" + std::string(name) + "' (text, csv or json)");
}

int cmd_trace(const OnsetRhythm& r, std::optional<int> max_steps, Format format, std::ostream& out,
              std::ostream& err) {
  const TraceDocument doc = make_trace_document(r, max_steps);
  switch (format) {
    case Format::Text: out << render_text(doc); break;
    case Format::Csv: out << render_csv(doc); break;
    case Format::Json: out << render_json(doc); break;
  }
  if (doc.cap_hit) {
    report_cap(doc, err);
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_even(const OnsetRhythm& r, std::optional<int> max_steps, Format format, std::ostream& out,
             std::ostream& err) {
  const TraceDocument doc = make_trace_document(r, max_steps);
  if (doc.cap_hit) {
    report_cap(doc, err);
    return kExitFailure;
  }
  const auto& row = doc.steps[static_cast<std::size_t>(doc.distance_to_cycle)];
  const OnsetRhythm even = cycle_to_rhythm(AscendingCycle(doc.pulses, row.a));

  switch (format) {
    case Format::Text:
      out << "binary     " << format_binary(even) << '\n'
          << "onsets     " << format_onsets(even) << '\n'
          << "intervals  " << format_intervals(even) << '\n'
          << "distance   " << doc.distance_to_cycle << '\n';
      break;
    case Format::Csv:
      out << "pulses,binary,onsets,intervals,distance_to_cycle\n"
          << even.pulses() << ',' << format_binary(even) << ",\"" << format_onsets(even) << "\",\""
          << format_intervals(even) << "\"," << doc.distance_to_cycle << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["pulses"] = even.pulses();
      j["binary"] = format_binary(even);
      j["onsets"] = even.onsets();
      j["intervals"] = format_intervals(even);
      j["distance_to_cycle"] = doc.distance_to_cycle;
      out << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_classify(const DifferenceVector& d, Format format, std::ostream& out, std::ostream&) {
  const TerminalClass cls = classify(d);
  const int w = width(d);
  const int m = d.min();
  std::optional<int> period;
  if (cls == TerminalClass::PeriodicWidth1OddMin) {
    period = rotation_period(d);
  } else if (cls != TerminalClass::Transient) {
    period = 1;
  }
  const char* parity = is_odd(m) ? "odd" : "even";

  switch (format) {
    case Format::Text:
      out << to_string(cls) << "  width=" << w << "  min=" << m << " (" << parity << ")";
      if (period) out << "  period=" << *period;
      out << '\n';
      break;
    case Format::Csv:
      out << "class,width,min,min_parity,period\n"
          << to_string(cls) << ',' << w << ',' << m << ',' << parity << ',' << (period ? std::to_string(*period) : "")
          << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["d"] = d.entries();
      j["class"] = std::string(to_string(cls));
      j["width"] = w;
      j["min"] = m;
      j["min_parity"] = parity;
      j["period"] = period ? ordered_json(*period) : ordered_json(nullptr);
      out << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_verify(int max_pulses, std::ostream& out, std::ostream& err) {
  if (max_pulses < 3 || max_pulses > 12) {
    throw UsageError("verify takes 3 <= max_pulses <= 12, got " + std::to_string(max_pulses));
  }
  const oracle::IdentityReport report = oracle::verify_identities(max_pulses);
  oracle::print_report(report, out);
  if (report.all_passed()) return kExitOk;
  for (const auto& r : report.results) {
    if (!r.passed()) err << "witness for " << r.name << ": " << r.first_witness << '\n';
  }
  return kExitFailure;
}

int cmd_graph(int pulses, int n, std::ostream& out, std::ostream& err) {
  const oracle::TransitionGraph graph = oracle::build_graph(pulses, n);
  const std::vector<std::string> problems = oracle::graph_disagreements(graph);
  oracle::write_dot(graph, out);
  if (problems.empty()) return kExitOk;
  err << problems.size() << " nodes disagree with the classification; first: " << problems.front() << '\n';
  return kExitFailure;
}

int cmd_corpus(Format format, std::ostream& out, std::ostream& err) {
  struct Line {
    const CorpusEntry* entry;
    std::string intervals;
    int distance;
    std::string terminal_class;
    bool bossa_rotation;
    bool ok;
  };
  std::vector<Line> lines;
  bool all_ok = true;
  for (const CorpusEntry& e : corpus()) {
    const OnsetRhythm r = e.rhythm();
    const TraceDocument doc = make_trace_document(r);
    const auto& terminal = doc.steps[static_cast<std::size_t>(doc.distance_to_cycle)].d;
    Line line{&e, format_intervals(r), doc.distance_to_cycle, doc.terminal_class,
              is_rotation_of(terminal, kBossaCycle), false};
    line.ok = !doc.cap_hit && line.distance == e.expected_distance && line.bossa_rotation;
    all_ok = all_ok && line.ok;
    lines.push_back(std::move(line));
  }

  switch (format) {
    case Format::Text: {
      std::size_t wn = 4, wo = 6, wi = 9;
      for (const auto& l : lines) {
        wn = std::max(wn, l.entry->name.size());
        wo = std::max(wo, join(l.entry->onsets).size());
        wi = std::max(wi, l.intervals.size());
      }
      out << std::left << std::setw(static_cast<int>(wn)) << "name" << "  " << std::setw(static_cast<int>(wo))
          << "onsets" << "  " << std::setw(static_cast<int>(wi)) << "intervals"
          << "  dist  expected  terminal_class        status\n";
      for (const auto& l : lines) {
        out << std::left << std::setw(static_cast<int>(wn)) << l.entry->name << "  "
            << std::setw(static_cast<int>(wo)) << join(l.entry->onsets) << "  " << std::setw(static_cast<int>(wi))
            << l.intervals << "  " << std::setw(4) << l.distance << "  " << std::setw(8)
            << l.entry->expected_distance << "  " << std::setw(20) << l.terminal_class << "  "
            << (l.ok ? "ok" : "MISMATCH") << '\n';
      }
      break;
    }
    case Format::Csv:
      out << "name,onsets,intervals,distance_to_cycle,expected_distance,terminal_class,ok\n";
      for (const auto& l : lines) {
        out << l.entry->name << ",\"" << join(l.entry->onsets) << "\",\"" << l.intervals << "\"," << l.distance
            << ',' << l.entry->expected_distance << ',' << l.terminal_class << ',' << (l.ok ? "true" : "false")
            << '\n';
      }
      break;
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& l : lines) {
        ordered_json j;
        j["name"] = l.entry->name;
        j["pulses"] = l.entry->pulses;
        j["onsets"] = l.entry->onsets;
        j["intervals"] = l.intervals;
        j["distance_to_cycle"] = l.distance;
        j["expected_distance"] = l.entry->expected_distance;
        j["terminal_class"] = l.terminal_class;
        j["ok"] = l.ok;
        arr.push_back(std::move(j));
      }
      out << arr.dump() << '\n';
      break;
    }
  }
  if (all_ok) return kExitOk;
  err << "corpus self-test failed\n";
  return kExitFailure;
}

}  // namespace evenrhythm::cli
