#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"

namespace evenrhythm::oracle {

int naive_width(const std::vector<int>& d) {
  if (d.empty()) throw UsageError("width of an empty vector");
  std::vector<int> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  return sorted.back() - sorted.front();
}

std::size_t naive_min_count(const std::vector<int>& d) {
  if (d.empty()) return 0;
  std::vector<int> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  std::size_t count = 0;
  while (count < sorted.size() && sorted[count] == sorted.front()) ++count;
  return count;
}

bool naive_property_a(const std::vector<int>& a) {
  if (a.size() < 2) return false;
  const auto start = static_cast<std::size_t>(std::min_element(a.begin(), a.end()) - a.begin());
  for (std::size_t t = 1; t < a.size(); ++t) {
    if (a[(start + t) % a.size()] <= a[(start + t - 1) % a.size()]) return false;
  }
  return true;
}

bool naive_in_half_open(int a, int b, int x, int pulses) {
  for (int y = a; y != b; y = (y + 1) % pulses) {
    if (y == x) return true;
  }
  return false;
}

int naive_av_z(int a, int b, int pulses) {
  if (a <= b) return static_cast<int>(std::floor((a + b) / 2.0));
  return static_cast<int>(std::floor((a + b + pulses) / 2.0)) % pulses;
}

std::size_t naive_cycle_length(const std::vector<int>& start,
                               const std::function<std::vector<int>(const std::vector<int>&)>& step,
                               std::size_t limit) {
  std::map<std::vector<int>, std::size_t> seen;
  std::vector<int> cur = start;
  for (std::size_t t = 0; t <= limit; ++t) {
    auto [it, inserted] = seen.emplace(cur, t);
    if (!inserted) return t - it->second;
    cur = step(cur);
  }
  return 0;
}

int hamming_distance(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw UsageError("hamming distance of words with lengths " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  }
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += a[i] != b[i];
  return count;
}

int hamming_distance(const OnsetRhythm& a, const OnsetRhythm& b) {
  return hamming_distance(a.binary(), b.binary());
}

}  // namespace evenrhythm::oracle
