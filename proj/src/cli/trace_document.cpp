#include "evenrhythm/cli/trace_document.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "evenrhythm/cli/notation.hpp"
#include "evenrhythm/error.hpp"

namespace evenrhythm::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string parenthesized(const std::vector<int>& v) { return "(" + join(v) + ")"; }

}  // namespace

TraceDocument to_document(const OnsetRhythm& r, const OrbitReport& report) {
  TraceDocument doc;
  doc.pulses = r.pulses();
  doc.onsets = r.onsets();
  for (const TraceStep& s : report.trace) {
    doc.steps.push_back({s.k, s.a ? s.a->entries() : std::vector<int>{}, s.d.entries(), s.width});
  }
  doc.distance_to_cycle = report.distance_to_cycle;
  doc.terminal_class = std::string(to_string(report.terminal_class));
  doc.period = report.period;
  doc.cap_hit = report.cap_hit;
  return doc;
}

TraceDocument make_trace_document(const OnsetRhythm& r, std::optional<int> max_steps) {
  return to_document(r, orbit_labeled(rhythm_to_cycle(r), max_steps));
}

std::string render_text(const TraceDocument& doc) {
  std::size_t wa = 1, wd = 1;
  for (const auto& row : doc.steps) {
    wa = std::max(wa, parenthesized(row.a).size());
    wd = std::max(wd, parenthesized(row.d).size());
  }
  std::ostringstream os;
  os << "N=" << doc.pulses << "  onsets=" << join(doc.onsets) << '\n';
  os << std::right << std::setw(3) << "k" << "  " << std::left << std::setw(static_cast<int>(wa)) << "a" << "  "
     << std::setw(static_cast<int>(wd)) << "d" << "  w\n";
  for (const auto& row : doc.steps) {
    os << std::right << std::setw(3) << row.k << "  " << std::left << std::setw(static_cast<int>(wa))
       << parenthesized(row.a) << "  " << std::setw(static_cast<int>(wd)) << parenthesized(row.d) << "  "
       << row.width << '\n';
  }
  os << "distance_to_cycle=" << doc.distance_to_cycle << "  terminal_class=" << doc.terminal_class
     << "  period=" << doc.period << "  cap_hit=" << (doc.cap_hit ? "true" : "false") << '\n';
  return os.str();
}

std::string render_csv(const TraceDocument& doc) {
  std::ostringstream os;
  os << "k,a,d,width\n";
  for (const auto& row : doc.steps) {
    os << row.k << ',' << join(row.a, ';') << ',' << join(row.d, ';') << ',' << row.width << '\n';
  }
  return os.str();
}

std::string render_json(const TraceDocument& doc) {
  ordered_json j;
  j["pulses"] = doc.pulses;
  j["onsets"] = doc.onsets;
  j["steps"] = ordered_json::array();
  for (const auto& row : doc.steps) {
    ordered_json s;
    s["k"] = row.k;
    s["a"] = row.a;
    s["d"] = row.d;
    s["width"] = row.width;
    j["steps"].push_back(std::move(s));
  }
  j["distance_to_cycle"] = doc.distance_to_cycle;
  j["terminal_class"] = doc.terminal_class;
  j["period"] = doc.period;
  j["cap_hit"] = doc.cap_hit;
  return j.dump() + "\n";
}

TraceDocument parse_trace_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    TraceDocument doc;
    doc.pulses = j.at("pulses").get<int>();
    doc.onsets = j.at("onsets").get<std::vector<int>>();
    for (const auto& s : j.at("steps")) {
      doc.steps.push_back({s.at("k").get<int>(), s.at("a").get<std::vector<int>>(),
                           s.at("d").get<std::vector<int>>(), s.at("width").get<int>()});
    }
    doc.distance_to_cycle = j.at("distance_to_cycle").get<int>();
    doc.terminal_class = j.at("terminal_class").get<std::string>();
    doc.period = j.at("period").get<int>();
    doc.cap_hit = j.at("cap_hit").get<bool>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad trace document: ") + e.what());
  }
}

}  // namespace evenrhythm::cli
