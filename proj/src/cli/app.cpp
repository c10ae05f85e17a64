#include "evenrhythm/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "evenrhythm/cli/commands.hpp"
#include "evenrhythm/cli/notation.hpp"
#include "evenrhythm/error.hpp"

namespace evenrhythm::cli {

namespace {

struct Options {
  std::string rhythm;
  std::optional<int> pulses;
  std::string format = "text";
  std::optional<int> max_steps;
  std::string out_path;
  int max_pulses = 10;
  int graph_pulses = 0;
  int graph_n = 0;
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_out(CLI::App* sub, Options& o) { sub->add_option("--out", o.out_path, "Write output to FILE"); }

void add_rhythm(CLI::App* sub, Options& o) {
  sub->add_option("rhythm", o.rhythm, "Binary word, onset list (with --pulses) or i:intervals")->required();
  sub->add_option("--pulses", o.pulses, "Pulse count N for onset lists");
  sub->add_option("--max-steps", o.max_steps, "Iteration cap (default max(N*n, 64))")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete-average dynamics on cyclic rhythms", "evenrhythm"};
  app.require_subcommand(1);
  Options o;

  auto* trace = app.add_subcommand("trace", "Labeled orbit until the final cycle, plus one period");
  add_rhythm(trace, o);
  add_format(trace, o);
  add_out(trace, o);

  auto* even = app.add_subcommand("even", "The rhythm reached at the distance to the final cycle");
  add_rhythm(even, o);
  add_format(even, o);
  add_out(even, o);

  auto* cls = app.add_subcommand("classify", "Terminal class of an interval vector");
  cls->add_option("intervals", o.rhythm, "Comma list, e.g. 3,3,4,3,3")->required();
  add_format(cls, o);
  add_out(cls, o);

  auto* verify = app.add_subcommand("verify", "Exhaustive identity suite for 3 <= N <= max_pulses");
  verify->add_option("max_pulses", o.max_pulses, "Largest N (3..12)")->capture_default_str();
  add_out(verify, o);

  auto* graph = app.add_subcommand("graph", "DOT transition graph of CD_N^(n)");
  graph->add_option("pulses", o.graph_pulses, "N")->required();
  graph->add_option("n", o.graph_n, "Vector length")->required();
  add_out(graph, o);

  auto* corpus = app.add_subcommand("corpus", "Built-in 16-pulse corpus with distances");
  add_format(corpus, o);
  add_out(corpus, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ofstream file;
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) throw UsageError("cannot open '" + o.out_path + "' for writing");
    }
    std::ostream& sink = o.out_path.empty() ? out : file;
    const Format format = parse_format(o.format);

    if (*trace) return cmd_trace(parse_rhythm(o.rhythm, o.pulses), o.max_steps, format, sink, err);
    if (*even) return cmd_even(parse_rhythm(o.rhythm, o.pulses), o.max_steps, format, sink, err);
    if (*cls) return cmd_classify(parse_intervals(o.rhythm), format, sink, err);
    if (*verify) return cmd_verify(o.max_pulses, sink, err);
    if (*graph) return cmd_graph(o.graph_pulses, o.graph_n, sink, err);
    return cmd_corpus(format, sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace evenrhythm::cli
