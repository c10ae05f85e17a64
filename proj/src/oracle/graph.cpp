#include <ostream>
#include <string>
#include <unordered_map>

#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"

namespace evenrhythm::oracle {

namespace {

struct EntriesHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::string joined(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// Walks the functional graph from every node; a walk that meets its own
// stamp has closed a new cycle, one that meets an older stamp joins a
// component already measured.
void detect_cycles(std::vector<GraphNode>& nodes) {
  constexpr std::size_t kUnseen = 0;
  std::vector<std::size_t> stamp(nodes.size(), kUnseen);
  std::vector<std::size_t> path;

  for (std::size_t start = 0; start < nodes.size(); ++start) {
    if (stamp[start] != kUnseen) continue;
    const std::size_t run = start + 1;
    path.clear();
    std::size_t u = start;
    while (stamp[u] == kUnseen) {
      stamp[u] = run;
      path.push_back(u);
      u = nodes[u].successor;
    }

    std::size_t tail = path.size();  // path[0, tail) is off the cycle
    if (stamp[u] == run) {
      std::size_t pos = 0;
      while (path[pos] != u) ++pos;
      const std::size_t len = path.size() - pos;
      for (std::size_t i = pos; i < path.size(); ++i) {
        nodes[path[i]].on_cycle = true;
        nodes[path[i]].cycle_length = len;
        nodes[path[i]].graph_distance = 0;
      }
      tail = pos;
    }
    for (std::size_t i = tail; i-- > 0;) {
      const GraphNode& next = nodes[nodes[path[i]].successor];
      nodes[path[i]].cycle_length = next.cycle_length;
      nodes[path[i]].graph_distance = next.graph_distance + 1;
    }
  }
}

}  // namespace

std::size_t TransitionGraph::index_of(const std::vector<int>& entries) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].entries == entries) return i;
  }
  return nodes.size();
}

TransitionGraph build_graph(int pulses, int n, std::size_t budget) {
  if (n < 2) throw UnsupportedSize("transition graphs need vectors of length >= 2");
  const std::vector<DifferenceVector> space = enumerate_cd(pulses, n, budget);

  TransitionGraph graph;
  graph.pulses = pulses;
  graph.n = n;
  graph.nodes.resize(space.size());

  std::unordered_map<std::vector<int>, std::size_t, EntriesHash> index;
  index.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) index.emplace(space[i].entries(), i);

  for (std::size_t i = 0; i < space.size(); ++i) {
    const DifferenceVector& d = space[i];
    GraphNode& node = graph.nodes[i];
    node.entries = d.entries();
    const DifferenceVector next = dav_fc(d);
    const auto it = index.find(next.entries());
    if (it == index.end()) {
      throw InvariantViolation("successor " + next.to_string() + " of " + d.to_string() + " is not in the space");
    }
    node.successor = it->second;
    node.width = width(d);

    node.terminal_class = classify(d);
    node.distance_to_cycle = distance_to_cycle(d);
    const DifferenceVector terminal = iterate(d, node.distance_to_cycle);
    node.period = classify(terminal) == TerminalClass::PeriodicWidth1OddMin ? rotation_period(terminal) : 1;
  }

  detect_cycles(graph.nodes);
  return graph;
}

std::vector<std::string> graph_disagreements(const TransitionGraph& graph) {
  std::vector<std::string> out;
  for (const GraphNode& node : graph.nodes) {
    const std::string label = "(" + joined(node.entries) + ")";
    const bool terminal = node.terminal_class != TerminalClass::Transient;
    if (node.on_cycle != terminal) {
      out.push_back(label + ": on_cycle=" + (node.on_cycle ? "true" : "false") + " but class " +
                    std::string(to_string(node.terminal_class)));
    }
    if (node.on_cycle && node.width > 1) out.push_back(label + ": cycle node of width " + std::to_string(node.width));
    const bool fixed = node.terminal_class == TerminalClass::FixedWidth0 ||
                       node.terminal_class == TerminalClass::FixedWidth1EvenMin;
    if (fixed && node.cycle_length != 1) {
      out.push_back(label + ": fixed class but cycle length " + std::to_string(node.cycle_length));
    }
    if (node.cycle_length != static_cast<std::size_t>(node.period)) {
      out.push_back(label + ": graph cycle length " + std::to_string(node.cycle_length) + " vs period " +
                    std::to_string(node.period));
    }
    if (node.graph_distance != static_cast<std::size_t>(node.distance_to_cycle)) {
      out.push_back(label + ": graph distance " + std::to_string(node.graph_distance) + " vs distance_to_cycle " +
                    std::to_string(node.distance_to_cycle));
    }
  }
  return out;
}

void write_dot(const TransitionGraph& graph, std::ostream& out) {
  out << "digraph \"CD_" << graph.pulses << '_' << graph.n << "\" {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& node = graph.nodes[i];
    out << "  n" << i << " [label=\"" << joined(node.entries) << "\", class=\"" << to_string(node.terminal_class)
        << "\", width=" << node.width << ", distance=" << node.distance_to_cycle;
    if (node.on_cycle) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    out << "  n" << i << " -> n" << graph.nodes[i].successor << ";\n";
  }
  out << "}\n";
}

}  // namespace evenrhythm::oracle
