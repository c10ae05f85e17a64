#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"

using namespace evenrhythm;
using namespace evenrhythm::oracle;

using V = std::vector<int>;

namespace {

std::vector<V> entries_of(const std::vector<DifferenceVector>& vs) {
  std::vector<V> out;
  for (const auto& v : vs) out.push_back(v.entries());
  return out;
}

}  // namespace

TEST_CASE("CD enumeration") {
  CHECK(entries_of(enumerate_cd(4, 2)) == std::vector<V>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(entries_of(enumerate_cd(3, 3)) ==
        std::vector<V>{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
  CHECK(cd_count(16, 5) == 4840);
  CHECK(cd_count(10, 4) == 282);
  CHECK(diff_image_count(10, 4) == 84);
  CHECK(enumerate_diff_image(10, 4).size() == 84);
  CHECK_THROWS_AS(enumerate_cd(16, 5, 100), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_cd(2, 1), UsageError);
}

TEST_CASE("CD counts match enumeration for N <= 12") {
  for (int pulses = 3; pulses <= 12; ++pulses) {
    for (int n = 1; n <= pulses; ++n) {
      std::uint64_t seen = 0;
      for_each_cd(pulses, n, [&](const DifferenceVector&) { ++seen; });
      CHECK(seen == cd_count(pulses, n));
    }
  }
}

TEST_CASE("CA enumeration") {
  const auto four = enumerate_ca(4, 4);
  REQUIRE(four.size() == 4);
  CHECK(four[0].entries() == V{0, 1, 2, 3});
  CHECK(four[3].entries() == V{3, 0, 1, 2});

  std::vector<V> three;
  for (const auto& a : enumerate_ca(3, 2)) three.push_back(a.entries());
  CHECK(three == std::vector<V>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});

  for (int pulses = 3; pulses <= 8; ++pulses) {
    for (int n = 2; n <= pulses; ++n) {
      const auto listed = enumerate_ca(pulses, n);
      std::vector<V> flat;
      for (const auto& a : listed) flat.push_back(a.entries());
      CHECK(flat == brute_force_ca(pulses, n));
      CHECK(listed.size() == ca_count(pulses, n));
    }
  }
  CHECK(ca_count(8, 3) == 168);
}

TEST_CASE("naive predicates") {
  CHECK(naive_width({3, 3, 4, 1, 5}) == 4);
  CHECK(naive_min_count({2, 1, 1, 2, 1}) == 3);
  CHECK(naive_property_a({13, 1, 5, 9}));
  CHECK_FALSE(naive_property_a({0, 5, 3, 7}));
  CHECK(naive_in_half_open(14, 2, 15, 16));
  CHECK_FALSE(naive_in_half_open(14, 2, 2, 16));
  CHECK(naive_av_z(14, 0, 16) == 15);
  const auto step = [](const V& v) { return V{v[1], v[0]}; };
  CHECK(naive_cycle_length({1, 2}, step, 10) == 2);
}

TEST_CASE("identity suite passes at small scale and reports the literal deviation") {
  const auto report = verify_identities(6);
  for (const auto& r : report.results) {
    INFO(r.name << ": " << r.first_witness);
    CHECK(r.passed());
  }
  CHECK(report.all_passed());
  REQUIRE(report.deviations.size() == 1);
  CHECK(report.deviations[0].failures > 0);
  CHECK(report.find("property (A) check agrees with brute force") != nullptr);
  std::ostringstream os;
  print_report(report, os);
  CHECK(os.str().find("all identities hold for N <= 6") != std::string::npos);
}

TEST_CASE("transition graphs") {
  SUBCASE("N=4, n=2") {
    const auto g = build_graph(4, 2);
    CHECK(g.nodes.size() == 3);
    CHECK(graph_disagreements(g).empty());
  }
  SUBCASE("N=8, n=3") {
    const auto g = build_graph(8, 3);
    CHECK(g.nodes.size() == 42);
    CHECK(graph_disagreements(g).empty());
    const auto cycle_nodes = std::count_if(g.nodes.begin(), g.nodes.end(), [](const GraphNode& v) { return v.on_cycle; });
    CHECK(cycle_nodes == 3);
    for (const auto& v : g.nodes) {
      if (v.on_cycle) CHECK(v.width <= 1);
    }
  }
  SUBCASE("N=16, n=4 holds the Example path") {
    const auto g = build_graph(16, 4);
    const auto i = g.index_of({3, 4, 7, 2});
    REQUIRE(i < g.nodes.size());
    CHECK(g.nodes[i].distance_to_cycle == 4);
    CHECK(g.nodes[i].graph_distance == 4);
    std::size_t u = i;
    for (int k = 0; k < 4; ++k) u = g.nodes[u].successor;
    CHECK(g.nodes[u].entries == V{4, 4, 4, 4});
    CHECK(g.index_of({99}) == g.nodes.size());
  }
  SUBCASE("odd-min cycles have lengths dividing n") {
    const auto g = build_graph(14, 4);
    CHECK(graph_disagreements(g).empty());
    bool short_cycle = false;
    for (const auto& v : g.nodes) {
      if (!v.on_cycle || v.terminal_class != TerminalClass::PeriodicWidth1OddMin) continue;
      CHECK(4 % v.cycle_length == 0);
      short_cycle = short_cycle || v.cycle_length == 2;
    }
    CHECK(short_cycle);
  }
}

TEST_CASE("DOT export") {
  std::ostringstream os;
  write_dot(build_graph(4, 2), os);
  const std::string dot = os.str();
  CHECK(dot.rfind("digraph \"CD_4_2\" {", 0) == 0);
  CHECK(dot.find("label=\"2,2\"") != std::string::npos);
  CHECK(dot.find("class=\"FixedWidth0\"") != std::string::npos);
  CHECK(dot.find("shape=doublecircle") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("classification census") {
  const auto c = classification_census(14, 4);
  CHECK(c.consistent());
  CHECK(c.vectors == 676);
  CHECK(c.periodic_class == 6);
  CHECK(c.period_below_n == 2);
  CHECK(c.max_distance == 8);
  CHECK(c.example_short_period == "(3,4,3,4) has period 2");

  const auto d = classification_census(12, 8);
  CHECK(d.consistent());
  CHECK(d.periodic_class == 70);
}

TEST_CASE("erosion census") {
  const auto c = erosion_census(9, 4);
  CHECK(c.failures == 0);
  CHECK(c.vectors_checked > 0);
  CHECK(c.blocks_checked >= c.vectors_checked);
}

TEST_CASE("hamming distance") {
  const OnsetRhythm bossa(16, {0, 3, 6, 10, 13});
  const OnsetRhythm son(16, {0, 3, 6, 10, 12});
  CHECK(hamming_distance(bossa, bossa) == 0);
  CHECK(hamming_distance(bossa, son) == 2);
  CHECK(hamming_distance(bossa.binary(), std::string(16, '0')) == 5);
  CHECK_THROWS_AS(hamming_distance("101", "10"), UsageError);
}
