#pragma once

// Brute-force ground truth at desk scale: exhaustive enumeration of the
// cycle and difference spaces, naive re-implementations of the key
// predicates, the identity suite, and the full transition graph of dav_fc.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "evenrhythm/core.hpp"
#include "evenrhythm/dynamics.hpp"
#include "evenrhythm/transforms.hpp"

namespace evenrhythm::oracle {

inline constexpr std::size_t kDefaultBudget = 5'000'000;

// ---------------------------------------------------------------------------
// Enumeration

/// |CD_N^(n)| by inclusion-exclusion over entries capped at N - 1.
std::uint64_t cd_count(int pulses, int n);
/// |{d in CD_N^(n) : every entry >= 1}| = C(N-1, n-1), the image of diff.
std::uint64_t diff_image_count(int pulses, int n);
/// |CA_N^(n)| = n * C(N, n).
std::uint64_t ca_count(int pulses, int n);

/// Visits CD_N^(n) in lexicographic order. With `positive_only` only vectors
/// whose entries are all >= 1 are visited.
void for_each_cd(int pulses, int n, const std::function<void(const DifferenceVector&)>& visit,
                 bool positive_only = false);

/// Throws BudgetExceeded when the space is larger than `budget`.
std::vector<DifferenceVector> enumerate_cd(int pulses, int n, std::size_t budget = kDefaultBudget);
std::vector<DifferenceVector> enumerate_diff_image(int pulses, int n, std::size_t budget = kDefaultBudget);

/// Every rotation of every sorted n-subset of Z_N, in lexicographic order.
std::vector<AscendingCycle> enumerate_ca(int pulses, int n, std::size_t budget = kDefaultBudget);

/// All N^n tuples filtered by naive_property_a; lexicographic. For small N only.
std::vector<std::vector<int>> brute_force_ca(int pulses, int n);

// ---------------------------------------------------------------------------
// Naive predicates, written without reference to the library code paths.

int naive_width(const std::vector<int>& d);
std::size_t naive_min_count(const std::vector<int>& d);
/// True iff the tuple is a rotation of a strictly increasing sequence.
bool naive_property_a(const std::vector<int>& a);
/// x in the cyclic half-open interval [a, b) of Z_N, by walking from a.
bool naive_in_half_open(int a, int b, int x, int pulses);
/// Z-average by the two-case floor rule (no negation, no +_N).
int naive_av_z(int a, int b, int pulses);
/// Least p >= 1 at which the orbit of `start` under `step` revisits a state,
/// found by hashing visited states; 0 if not found within `limit` steps.
std::size_t naive_cycle_length(const std::vector<int>& start,
                               const std::function<std::vector<int>(const std::vector<int>&)>& step,
                               std::size_t limit);

// ---------------------------------------------------------------------------
// Identity suite

struct IdentityResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_witness;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

struct IdentityReport {
  int max_pulses = 0;
  std::vector<IdentityResult> results;
  /// Statements checked word for word that are known not to hold in general.
  /// Reported for the record; they do not affect all_passed().
  std::vector<IdentityResult> deviations;

  bool all_passed() const noexcept;
  const IdentityResult* find(std::string_view name) const noexcept;
};

struct VerifyOptions {
  std::uint32_t seed = 20240607;
  int random_trials = 400;  // per vector length, for the Z^n checks
  int random_max_length = 8;
  int random_bound = 8;     // entries drawn from [-bound, bound]
  int max_iterations = 5;   // k range for the iterated intertwining check
  int small_int_bound = 8;  // p, q range for the scalar checks
};

/// Runs every identity exhaustively for 3 <= N <= max_pulses. Failures
/// (including exceptions thrown by the checked code) are recorded as data.
IdentityReport verify_identities(int max_pulses, const VerifyOptions& options = {});

void print_report(const IdentityReport& report, std::ostream& out);

// ---------------------------------------------------------------------------
// Transition graph

struct GraphNode {
  std::vector<int> entries;
  std::size_t successor = 0;
  int width = 0;
  // From dynamics.
  TerminalClass terminal_class = TerminalClass::Transient;
  int distance_to_cycle = 0;
  int period = 1;
  // From generic cycle detection on the graph.
  bool on_cycle = false;
  std::size_t cycle_length = 0;
  std::size_t graph_distance = 0;
};

struct TransitionGraph {
  int pulses = 0;
  int n = 0;
  std::vector<GraphNode> nodes;

  std::size_t index_of(const std::vector<int>& entries) const;  // npos-style: nodes.size() if absent
};

/// All of CD_N^(n) with edges u -> dav_fc(u). Cycles are found by walking the
/// functional graph with visit stamps, independently of the closed-form
/// classification; both annotations are stored per node.
TransitionGraph build_graph(int pulses, int n, std::size_t budget = kDefaultBudget);

/// Nodes where the graph's cycle structure disagrees with dynamics
/// (class, period, or distance). Empty when consistent.
std::vector<std::string> graph_disagreements(const TransitionGraph& graph);

/// DOT: label = comma-joined entries, cycle nodes double-circled, class as an attribute.
void write_dot(const TransitionGraph& graph, std::ostream& out);

// ---------------------------------------------------------------------------
// Exhaustive classification census over CD_N^(n)

struct ClassificationCensus {
  int pulses = 0;
  int n = 0;
  std::uint64_t vectors = 0;
  std::uint64_t cap_hits = 0;
  int max_distance = 0;
  std::uint64_t fixed_points = 0;        // dav_fc(d) == d
  std::uint64_t fixed_class = 0;         // classify() says fixed
  std::uint64_t fixed_mismatches = 0;    // one without the other
  std::uint64_t periodic_class = 0;
  std::uint64_t rotation_mismatches = 0; // dav_fc(d) != cyc-(d) for the periodic class
  std::uint64_t period_not_dividing_n = 0;
  std::uint64_t period_equals_n = 0;
  std::uint64_t period_below_n = 0;           // rotationally symmetric cases
  std::uint64_t period_below_n_asymmetric = 0;  // would contradict the symmetry account
  std::uint64_t period_n_symmetric = 0;         // likewise
  std::string first_problem;
  std::string example_short_period;

  bool consistent() const noexcept;
};

ClassificationCensus classification_census(int pulses, int n);

struct ErosionCensus {
  int pulses = 0;
  int n = 0;
  std::uint64_t vectors_checked = 0;
  std::uint64_t blocks_checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

/// block_erosion_check over every d in CD_N^(n) with even min and width >= 2.
ErosionCensus erosion_census(int pulses, int n);

// ---------------------------------------------------------------------------

/// Number of differing positions between two equal-length {0,1} words.
/// Throws UsageError on a length mismatch.
int hamming_distance(std::string_view a, std::string_view b);
int hamming_distance(const OnsetRhythm& a, const OnsetRhythm& b);

}  // namespace evenrhythm::oracle
