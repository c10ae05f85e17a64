#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evenrhythm/averages.hpp"
#include "evenrhythm/cli/corpus.hpp"
#include "evenrhythm/cli/notation.hpp"
#include "evenrhythm/cli/trace_document.hpp"
#include "evenrhythm/core.hpp"
#include "evenrhythm/dynamics.hpp"
#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"
#include "evenrhythm/transforms.hpp"

namespace py = pybind11;
using namespace evenrhythm;

namespace {

// Difference vectors cross the boundary as plain lists.
using Ints = std::vector<int>;

DifferenceVector vec(const Ints& d, std::optional<int> pulses) {
  return pulses ? DifferenceVector::in_cd(d, *pulses) : DifferenceVector(d);
}

py::dict orbit_dict(const OnsetRhythm& r, std::optional<int> max_steps) {
  const cli::TraceDocument doc = cli::make_trace_document(r, max_steps);
  py::list steps;
  for (const auto& row : doc.steps) {
    py::dict s;
    s["k"] = row.k;
    s["a"] = row.a;
    s["d"] = row.d;
    s["width"] = row.width;
    steps.append(s);
  }
  py::dict out;
  out["pulses"] = doc.pulses;
  out["onsets"] = doc.onsets;
  out["steps"] = steps;
  out["distance_to_cycle"] = doc.distance_to_cycle;
  out["terminal_class"] = doc.terminal_class;
  out["period"] = doc.period;
  out["cap_hit"] = doc.cap_hit;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete-average dynamics on cyclic rhythms";

  // UsageError derives from std::invalid_argument and arrives as ValueError.
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<OnsetRhythm>(m, "OnsetRhythm")
      .def(py::init<int, Ints>(), py::arg("pulses"), py::arg("onsets"))
      .def_static("from_binary", &OnsetRhythm::from_binary)
      .def_property_readonly("pulses", &OnsetRhythm::pulses)
      .def_property_readonly("onsets", &OnsetRhythm::onsets)
      .def("binary", &OnsetRhythm::binary)
      .def("intervals", &cli::format_intervals)
      .def("__eq__", [](const OnsetRhythm& a, const OnsetRhythm& b) { return a == b; })
      .def("__repr__", [](const OnsetRhythm& r) {
        return "OnsetRhythm(" + std::to_string(r.pulses()) + ", [" + cli::join(r.onsets(), ',') + "])";
      });

  py::class_<AscendingCycle>(m, "AscendingCycle")
      .def(py::init<int, Ints>(), py::arg("modulus"), py::arg("entries"))
      .def_property_readonly("modulus", &AscendingCycle::modulus)
      .def_property_readonly("entries", &AscendingCycle::entries)
      .def("jumping_number", [](const AscendingCycle& a) { return jumping_number(a); })
      .def("__eq__", [](const AscendingCycle& a, const AscendingCycle& b) { return a == b; });

  m.def("av_fc", &av_fc);
  m.def("av_cf", &av_cf);
  m.def("av_z", [](int a, int b, int pulses) { return av_z(Residue(a, pulses), Residue(b, pulses)).value(); },
        py::arg("a"), py::arg("b"), py::arg("pulses"));

  m.def("diff", [](const AscendingCycle& a) { return diff(a).entries(); });
  m.def("dav_A", &dav_A);
  m.def("dav_fc", [](const Ints& d) { return dav_fc(DifferenceVector(d)).entries(); });
  m.def("dav_cf", [](const Ints& d) { return dav_cf(DifferenceVector(d)).entries(); });
  m.def("rhythm_to_cycle", &rhythm_to_cycle);
  m.def("cycle_to_rhythm", &cycle_to_rhythm);
  m.def("rhythm_step", &rhythm_step);

  m.def("width", [](const Ints& d) { return width(DifferenceVector(d)); });
  m.def("classify", [](const Ints& d) { return std::string(to_string(classify(DifferenceVector(d)))); });
  m.def("distance_to_cycle",
        [](const Ints& d, std::optional<int> pulses, std::optional<int> cap) {
          return distance_to_cycle(vec(d, pulses), cap);
        },
        py::arg("d"), py::arg("pulses") = py::none(), py::arg("cap") = py::none());
  m.def("rotation_period", [](const Ints& d) { return rotation_period(DifferenceVector(d)); });

  m.def("parse_rhythm", &cli::parse_rhythm, py::arg("text"), py::arg("pulses") = py::none());
  m.def("orbit", &orbit_dict, py::arg("rhythm"), py::arg("max_steps") = py::none());
  m.def("trace_json",
        [](const OnsetRhythm& r, std::optional<int> max_steps) {
          return cli::render_json(cli::make_trace_document(r, max_steps));
        },
        py::arg("rhythm"), py::arg("max_steps") = py::none());

  m.def("corpus", [] {
    py::list out;
    for (const auto& e : cli::corpus()) out.append(py::make_tuple(e.name, e.rhythm(), e.expected_distance));
    return out;
  });

  m.def("verify_identities",
        [](int max_pulses) {
          const auto report = oracle::verify_identities(max_pulses);
          py::dict out;
          for (const auto& r : report.results) out[py::str(r.name)] = r.passed();
          return out;
        },
        py::arg("max_pulses"));
  m.def("hamming_distance", py::overload_cast<std::string_view, std::string_view>(&oracle::hamming_distance));
}
