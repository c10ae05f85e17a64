#include <algorithm>
#include <string>

#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"

namespace evenrhythm::oracle {

namespace {

// Some shift 0 < s < n maps the vector onto itself.
bool has_rotational_symmetry(const std::vector<int>& v) {
  std::vector<int> r = v;
  for (std::size_t s = 1; s < v.size(); ++s) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r == v) return true;
  }
  return false;
}

void note(std::string& slot, const std::string& text) {
  if (slot.empty()) slot = text;
}

}  // namespace

bool ClassificationCensus::consistent() const noexcept {
  return vectors > 0 && cap_hits == 0 && fixed_mismatches == 0 && rotation_mismatches == 0 &&
         period_not_dividing_n == 0 && period_below_n_asymmetric == 0 && period_n_symmetric == 0;
}

ClassificationCensus classification_census(int pulses, int n) {
  if (n < 2) throw UnsupportedSize("the census needs vectors of length >= 2");
  ClassificationCensus c;
  c.pulses = pulses;
  c.n = n;
  const int cap = pulses * n;
  const auto step = [](const std::vector<int>& v) { return dav_fc(DifferenceVector(v)).entries(); };

  for_each_cd(pulses, n, [&](const DifferenceVector& d) {
    ++c.vectors;
    try {
      c.max_distance = std::max(c.max_distance, distance_to_cycle(d, cap));
    } catch (const CapExceeded&) {
      ++c.cap_hits;
      note(c.first_problem, d.to_string() + " still wider than 1 after " + std::to_string(cap) + " steps");
    }

    const TerminalClass cls = classify(d);
    const DifferenceVector next = dav_fc(d);
    const bool fixed_point = next == d;
    const bool fixed_class = cls == TerminalClass::FixedWidth0 || cls == TerminalClass::FixedWidth1EvenMin;
    c.fixed_points += fixed_point;
    c.fixed_class += fixed_class;
    if (fixed_point != fixed_class) {
      ++c.fixed_mismatches;
      note(c.first_problem, d.to_string() + (fixed_point ? " is fixed but classed " : " moves but classed ") +
                                std::string(to_string(cls)));
    }

    if (cls != TerminalClass::PeriodicWidth1OddMin) return;
    ++c.periodic_class;
    if (!(next == rotate_left(d))) {
      ++c.rotation_mismatches;
      note(c.first_problem, d.to_string() + " maps to " + next.to_string() + ", not its left rotation");
    }
    const std::size_t period = naive_cycle_length(d.entries(), step, static_cast<std::size_t>(n) + 1);
    const bool symmetric = has_rotational_symmetry(d.entries());
    if (period == 0 || static_cast<std::size_t>(n) % period != 0) {
      ++c.period_not_dividing_n;
      note(c.first_problem, d.to_string() + " has period " + std::to_string(period));
      return;
    }
    if (period == static_cast<std::size_t>(n)) {
      ++c.period_equals_n;
      if (symmetric) {
        ++c.period_n_symmetric;
        note(c.first_problem, d.to_string() + " is rotation-symmetric yet has period n");
      }
    } else {
      ++c.period_below_n;
      note(c.example_short_period, d.to_string() + " has period " + std::to_string(period));
      if (!symmetric) {
        ++c.period_below_n_asymmetric;
        note(c.first_problem, d.to_string() + " has period " + std::to_string(period) + " without symmetry");
      }
    }
  });
  return c;
}

ErosionCensus erosion_census(int pulses, int n) {
  if (n < 2) throw UnsupportedSize("the erosion census needs vectors of length >= 2");
  ErosionCensus c;
  c.pulses = pulses;
  c.n = n;
  for_each_cd(pulses, n, [&](const DifferenceVector& d) {
    if (d.min() % 2 != 0 || width(d) < 2) return;
    ++c.vectors_checked;
    const ErosionResult r = block_erosion_check(d);
    c.blocks_checked += r.blocks.size();
    for (const auto& b : r.blocks) {
      if (b.held) continue;
      ++c.failures;
      note(c.first_failure, d.to_string() + ": " + b.detail);
    }
  });
  return c;
}

}  // namespace evenrhythm::oracle
