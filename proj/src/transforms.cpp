#include "evenrhythm/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "evenrhythm/averages.hpp"
#include "evenrhythm/error.hpp"

namespace evenrhythm {

DifferenceVector DifferenceVector::in_cd(std::vector<int> entries, int modulus) {
  DifferenceVector d(std::move(entries));
  for (int x : d.entries_) {
    if (x < 0 || x >= modulus) {
      throw UsageError("entry " + std::to_string(x) + " of " + d.to_string() + " outside [0, " +
                       std::to_string(modulus - 1) + "]");
    }
  }
  if (d.sum() != modulus) {
    throw UsageError("entries of " + d.to_string() + " sum to " + std::to_string(d.sum()) +
                     ", expected " + std::to_string(modulus));
  }
  d.modulus_ = modulus;
  return d;
}

int DifferenceVector::cyclic(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(entries_.size());
  return entries_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::int64_t DifferenceVector::sum() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

int DifferenceVector::min() const {
  if (entries_.empty()) throw UsageError("min of an empty vector");
  return *std::min_element(entries_.begin(), entries_.end());
}

int DifferenceVector::max() const {
  if (entries_.empty()) throw UsageError("max of an empty vector");
  return *std::max_element(entries_.begin(), entries_.end());
}

std::string DifferenceVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

namespace {

// For results that must stay in CD by construction; failure is a bug.
DifferenceVector checked_cd(std::vector<int> entries, int modulus) {
  try {
    return DifferenceVector::in_cd(std::move(entries), modulus);
  } catch (const UsageError& e) {
    throw InvariantViolation(std::string("result left CD: ") + e.what());
  }
}

// Applies `f` to every cyclically consecutive pair, keeping the CD tag.
template <typename Pairwise>
DifferenceVector pairwise(const DifferenceVector& d, Pairwise f) {
  const std::size_t n = d.size();
  std::vector<int> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = f(d[k], d[(k + 1) % n]);
  if (auto modulus = d.context_modulus()) return checked_cd(std::move(out), *modulus);
  return DifferenceVector(std::move(out));
}

DifferenceVector retag(std::vector<int> entries, const DifferenceVector& like) {
  if (auto modulus = like.context_modulus()) {
    return checked_cd(std::move(entries), *modulus);
  }
  return DifferenceVector(std::move(entries));
}

}  // namespace

DifferenceVector diff(const AscendingCycle& a) {
  const std::size_t n = a.size();
  std::vector<int> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = residue_sub(a.at(k + 1), a.at(k)).value();
  return checked_cd(std::move(out), a.modulus());
}

AscendingCycle dav_A(const AscendingCycle& a) {
  const std::size_t n = a.size();
  std::vector<int> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = av_z(a.at(k), a.at(k + 1)).value();
  // The constructor re-checks property (A) on every call.
  return AscendingCycle(a.modulus(), std::move(out));
}

PolygonView dav_P(const PolygonView& p) {
  const std::size_t n = p.size();
  std::vector<RootOfUnity> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(av_mu(p.vertex(k), p.vertex(k + 1)));
  return PolygonView(std::move(out));
}

DifferenceVector dav_fc(const DifferenceVector& d) { return pairwise(d, av_fc); }

DifferenceVector dav_cf(const DifferenceVector& d) { return pairwise(d, av_cf); }

DifferenceVector rotate_right(const DifferenceVector& d) {
  std::vector<int> out = d.entries();
  if (!out.empty()) std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
  return retag(std::move(out), d);
}

DifferenceVector rotate_left(const DifferenceVector& d) {
  std::vector<int> out = d.entries();
  if (!out.empty()) std::rotate(out.begin(), out.begin() + 1, out.end());
  return retag(std::move(out), d);
}

DifferenceVector reverse(const DifferenceVector& d) {
  std::vector<int> out(d.entries().rbegin(), d.entries().rend());
  return retag(std::move(out), d);
}

DifferenceVector shift_up(const DifferenceVector& d) {
  std::vector<int> out = d.entries();
  for (int& x : out) ++x;
  return DifferenceVector(std::move(out));
}

DifferenceVector shift_down(const DifferenceVector& d) {
  std::vector<int> out = d.entries();
  for (int& x : out) --x;
  return DifferenceVector(std::move(out));
}

DifferenceVector f_plus(const DifferenceVector& d) { return shift_up(reverse(d)); }

DifferenceVector g_plus(const DifferenceVector& d) { return shift_up(reverse(rotate_right(d))); }

OnsetRhythm rhythm_step(const OnsetRhythm& r) { return cycle_to_rhythm(dav_A(rhythm_to_cycle(r))); }

}  // namespace evenrhythm
