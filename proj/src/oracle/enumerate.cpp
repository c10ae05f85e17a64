#include <algorithm>
#include <numeric>
#include <string>

#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"

namespace evenrhythm::oracle {

namespace {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void require_space(int pulses, int n) {
  if (pulses < 3) throw UsageError("need at least 3 pulses, got " + std::to_string(pulses));
  if (n < 1 || n > pulses) {
    throw UsageError("vector length " + std::to_string(n) + " outside [1, " + std::to_string(pulses) + "]");
  }
}

void check_budget(std::uint64_t size, std::size_t budget, const char* what) {
  if (size > budget) {
    throw BudgetExceeded(std::string(what) + " has " + std::to_string(size) + " elements, budget is " +
                         std::to_string(budget));
  }
}

void fill_cd(int pulses, int lo, std::vector<int>& prefix, std::size_t n, int remaining,
             const std::function<void(const DifferenceVector&)>& visit) {
  if (prefix.size() + 1 == n) {
    if (remaining >= lo && remaining <= pulses - 1) {
      prefix.push_back(remaining);
      visit(DifferenceVector::in_cd(prefix, pulses));
      prefix.pop_back();
    }
    return;
  }
  for (int x = lo; x <= std::min(remaining, pulses - 1); ++x) {
    prefix.push_back(x);
    fill_cd(pulses, lo, prefix, n, remaining - x, visit);
    prefix.pop_back();
  }
}

}  // namespace

std::uint64_t cd_count(int pulses, int n) {
  // Solutions of x_1 + ... + x_n = N with 0 <= x_i <= N - 1: subtract, with
  // alternating signs, the solutions forcing j chosen entries to be >= N.
  std::int64_t total = 0;
  for (int j = 0; j <= n && j * pulses <= pulses; ++j) {
    const auto term = static_cast<std::int64_t>(binomial(n, j) * binomial(pulses - j * pulses + n - 1, n - 1));
    total += (j % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t diff_image_count(int pulses, int n) { return binomial(pulses - 1, n - 1); }

std::uint64_t ca_count(int pulses, int n) { return static_cast<std::uint64_t>(n) * binomial(pulses, n); }

void for_each_cd(int pulses, int n, const std::function<void(const DifferenceVector&)>& visit,
                 bool positive_only) {
  require_space(pulses, n);
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  fill_cd(pulses, positive_only ? 1 : 0, prefix, static_cast<std::size_t>(n), pulses, visit);
}

std::vector<DifferenceVector> enumerate_cd(int pulses, int n, std::size_t budget) {
  require_space(pulses, n);
  check_budget(cd_count(pulses, n), budget, "CD space");
  std::vector<DifferenceVector> out;
  out.reserve(cd_count(pulses, n));
  for_each_cd(pulses, n, [&](const DifferenceVector& d) { out.push_back(d); });
  return out;
}

std::vector<DifferenceVector> enumerate_diff_image(int pulses, int n, std::size_t budget) {
  require_space(pulses, n);
  check_budget(diff_image_count(pulses, n), budget, "difference image");
  std::vector<DifferenceVector> out;
  for_each_cd(pulses, n, [&](const DifferenceVector& d) { out.push_back(d); }, true);
  return out;
}

std::vector<AscendingCycle> enumerate_ca(int pulses, int n, std::size_t budget) {
  require_space(pulses, n);
  if (n < 2) throw UnsupportedSize("ascending cycles need at least 2 entries");
  check_budget(ca_count(pulses, n), budget, "CA space");

  std::vector<std::vector<int>> tuples;
  // Sorted n-subsets via a selection mask, then all their rotations.
  std::vector<bool> mask(static_cast<std::size_t>(pulses), false);
  std::fill(mask.begin(), mask.begin() + n, true);
  do {
    std::vector<int> subset;
    for (int i = 0; i < pulses; ++i) {
      if (mask[static_cast<std::size_t>(i)]) subset.push_back(i);
    }
    for (int r = 0; r < n; ++r) {
      std::vector<int> rotated = subset;
      std::rotate(rotated.begin(), rotated.begin() + r, rotated.end());
      tuples.push_back(std::move(rotated));
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));

  std::sort(tuples.begin(), tuples.end());
  std::vector<AscendingCycle> out;
  out.reserve(tuples.size());
  for (auto& t : tuples) out.emplace_back(pulses, std::move(t));
  return out;
}

std::vector<std::vector<int>> brute_force_ca(int pulses, int n) {
  require_space(pulses, n);
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  while (true) {
    if (naive_property_a(t)) out.push_back(t);
    std::size_t i = t.size();
    while (i > 0 && t[i - 1] == pulses - 1) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

}  // namespace evenrhythm::oracle
