#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "evenrhythm/cli/app.hpp"
#include "evenrhythm/cli/commands.hpp"
#include "evenrhythm/cli/corpus.hpp"
#include "evenrhythm/cli/notation.hpp"
#include "evenrhythm/cli/trace_document.hpp"
#include "evenrhythm/error.hpp"

using namespace evenrhythm;
using namespace evenrhythm::cli;

using V = std::vector<int>;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "evenrhythm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse the three notations") {
  const auto bossa = parse_rhythm("1001001000100100");
  CHECK(bossa.pulses() == 16);
  CHECK(bossa.onsets() == V{0, 3, 6, 10, 13});

  const auto rumba = parse_rhythm("0,3,7,10,12", 16);
  CHECK(rumba.onsets() == V{0, 3, 7, 10, 12});
  CHECK(parse_rhythm("12,0,7,3,10", 16) == rumba);

  const auto ex = parse_rhythm("i:3,4,7,2");
  CHECK(ex.pulses() == 16);
  CHECK(ex.onsets() == V{0, 3, 7, 14});
  CHECK(parse_rhythm("i:3,3,3,3,4@2").onsets() == V{2, 5, 8, 11, 14});
  CHECK(parse_rhythm("i:3,4,7,2", 16) == ex);
  CHECK(parse_rhythm("7", 16).onsets() == V{7});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_rhythm("1001x01000100100"), UsageError);
  CHECK_THROWS_AS(parse_rhythm("0,3,16", 16), UsageError);
  CHECK_THROWS_AS(parse_rhythm("0,3,3", 16), UsageError);
  CHECK_THROWS_AS(parse_rhythm("i:3,4,7,2", 15), UsageError);
  CHECK_THROWS_AS(parse_rhythm("0000"), UsageError);
  CHECK_THROWS_AS(parse_rhythm(""), UsageError);
  CHECK_THROWS_AS(parse_rhythm("0,3"), UsageError);  // no --pulses
  CHECK_THROWS_AS(parse_rhythm("i:3,0,13"), UsageError);
  CHECK_THROWS_AS(parse_rhythm("i:3,13@16"), UsageError);
  CHECK_THROWS_AS(parse_intervals("3,,4"), UsageError);
}

TEST_CASE("formatting round-trips in every notation, N <= 10") {
  for (int pulses = 3; pulses <= 10; ++pulses) {
    for (unsigned mask = 1; mask + 1 < (1u << pulses); ++mask) {
      std::vector<int> onsets;
      for (int i = 0; i < pulses; ++i) {
        if (mask & (1u << i)) onsets.push_back(i);
      }
      const OnsetRhythm r(pulses, onsets);
      REQUIRE(parse_rhythm(format_binary(r)) == r);
      REQUIRE(parse_rhythm(format_onsets(r), pulses) == r);
      REQUIRE(parse_rhythm(format_intervals(r)) == r);
    }
  }
}

TEST_CASE("trace document") {
  const auto doc = make_trace_document(parse_rhythm("i:3,4,7,2"));
  REQUIRE(doc.steps.size() == 5);
  CHECK(doc.steps[0].a == V{0, 3, 7, 14});
  CHECK(doc.steps[4].d == V{4, 4, 4, 4});
  CHECK(doc.distance_to_cycle == 4);
  CHECK(doc.terminal_class == "FixedWidth0");

  const std::string json = render_json(doc);
  CHECK(json.rfind("{\"pulses\":16,\"onsets\":[0,3,7,14],\"steps\":[{\"k\":0,\"a\":[0,3,7,14],\"d\":[3,4,7,2],"
                   "\"width\":5}",
                   0) == 0);
  CHECK(json.find("\"distance_to_cycle\":4,\"terminal_class\":\"FixedWidth0\",\"period\":1,\"cap_hit\":false}") !=
        std::string::npos);
  CHECK(render_json(make_trace_document(parse_rhythm("i:3,4,7,2"))) == json);
  CHECK(parse_trace_json(json) == doc);
  CHECK_THROWS_AS(parse_trace_json("{\"pulses\":16}"), UsageError);

  const std::string csv = render_csv(doc);
  CHECK(csv.rfind("k,a,d,width\n0,0;3;7;14,3;4;7;2,5\n", 0) == 0);

  const std::string text = render_text(doc);
  CHECK(text.find("(7,11,15,3)") != std::string::npos);
  CHECK(text.find("distance_to_cycle=4") != std::string::npos);
}

TEST_CASE("trace lengths") {
  CHECK(make_trace_document(corpus_entry("Soukous").rhythm()).distance_to_cycle == 3);
  const auto regular = make_trace_document(parse_rhythm("1000100010001000"));
  CHECK(regular.steps.size() == 1);
  CHECK(regular.terminal_class == "FixedWidth0");
  // Bossa is already on its cycle; the table shows its five rotations.
  const auto bossa = make_trace_document(corpus_entry("Bossa").rhythm());
  CHECK(bossa.distance_to_cycle == 0);
  CHECK(bossa.steps.size() == 5);
}

TEST_CASE("corpus table") {
  REQUIRE(corpus().size() == 6);
  CHECK(corpus_entry("Shiko").onsets == V{0, 4, 6, 10, 12});
  CHECK_THROWS_AS(corpus_entry("Clave"), UsageError);
  const auto r = run({"corpus"});
  CHECK(r.code == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find("Gahu") != std::string::npos);
  const auto j = run({"corpus", "--format", "json"});
  CHECK(j.out.find("\"name\":\"Soukous\"") != std::string::npos);
}

TEST_CASE("even") {
  auto r = run({"even", "--pulses", "16", "0,4,6,10,12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("onsets     2,5,8,11,14") != std::string::npos);
  CHECK(r.out.find("i:3,3,3,3,4@2") != std::string::npos);

  r = run({"even", "--pulses", "16", "0,3,6,10,14", "--format", "json"});
  CHECK(r.out.find("\"onsets\":[1,4,8,11,14]") != std::string::npos);

  r = run({"even", "1001001000100100", "--format", "csv"});
  CHECK(r.out.find("1001001000100100") != std::string::npos);
  CHECK(r.out.find(",0\n") != std::string::npos);

  for (const auto& e : corpus()) {
    std::ostringstream out, err;
    REQUIRE(cmd_even(e.rhythm(), std::nullopt, Format::Text, out, err) == kExitOk);
    std::istringstream lines(out.str());
    std::string label, binary, onsets, intervals;
    lines >> label >> binary >> label >> onsets >> label >> intervals;
    const OnsetRhythm from_binary = parse_rhythm(binary);
    CHECK(parse_rhythm(onsets, 16) == from_binary);
    CHECK(parse_rhythm(intervals) == from_binary);
  }
}

TEST_CASE("classify") {
  auto r = run({"classify", "3,3,4,3,3"});
  CHECK(r.out == "PeriodicWidth1OddMin  width=1  min=3 (odd)  period=5\n");
  r = run({"classify", "4,4,4,4"});
  CHECK(r.out.rfind("FixedWidth0", 0) == 0);
  r = run({"classify", "i:2,3,2,3", "--format", "json"});
  CHECK(r.out == "{\"d\":[2,3,2,3],\"class\":\"FixedWidth1EvenMin\",\"width\":1,\"min\":2,\"min_parity\":\"even\","
                 "\"period\":1}\n");
  r = run({"classify", "3,3,4,1,5", "--format", "csv"});
  CHECK(r.out == "class,width,min,min_parity,period\nTransient,4,1,odd,\n");
}

TEST_CASE("verify and graph") {
  auto r = run({"verify", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all identities hold for N <= 3") != std::string::npos);
  CHECK(run({"verify", "13"}).code == kExitUsage);
  CHECK(run({"verify", "2"}).code == kExitUsage);

  r = run({"graph", "4", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(run({"graph", "8", "3"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"dance"}).code == kExitUsage);
  CHECK(run({"trace", "1001x01000100100"}).code == kExitUsage);
  CHECK(run({"trace", "0,3,3", "--pulses", "16"}).code == kExitUsage);
  CHECK(run({"trace", "i:3,4,7,2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"trace", "--help"}).code == kExitOk);

  const auto capped = run({"trace", "i:3,3,4,1,5", "--max-steps", "2", "--format", "json"});
  CHECK(capped.code == kExitFailure);
  CHECK(capped.out.find("\"cap_hit\":true") != std::string::npos);
  CHECK(capped.out.find("\"period\":0") != std::string::npos);

  CHECK(run({"trace", "i:3,4,7,2"}).code == kExitOk);
}

TEST_CASE("--out writes to a file") {
  const std::string path = "evenrhythm_test_out.json";
  const auto r = run({"trace", "i:3,4,7,2", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(parse_trace_json(buf.str()).distance_to_cycle == 4);
  std::remove(path.c_str());
}
