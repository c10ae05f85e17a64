#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "evenrhythm/averages.hpp"
#include "evenrhythm/oracle.hpp"

namespace evenrhythm::oracle {

namespace {

using Witness = std::optional<std::string>;

template <typename Body>
void probe(IdentityResult& r, const std::string& where, Body&& body) {
  ++r.cases;
  Witness witness;
  try {
    witness = body();
  } catch (const std::exception& e) {
    witness = where + ": threw " + e.what();
  }
  if (witness && r.failures++ == 0) r.first_witness = *witness;
}

std::string show(const std::vector<int>& v) { return DifferenceVector(v).to_string(); }

Witness mismatch(const std::string& where, const DifferenceVector& lhs, const DifferenceVector& rhs) {
  if (lhs == rhs) return std::nullopt;
  return where + ": lhs " + lhs.to_string() + " rhs " + rhs.to_string();
}

std::string at(int pulses, const std::string& what) { return "N=" + std::to_string(pulses) + " " + what; }

// Named identity results, in report order.
struct Suite {
  IdentityResult z_in_arc{"z-average lies in the half-open interval [a,b)", 0, 0, {}};
  IdentityResult mu_in_arc{"mu-average lies on the half-open arc [P,Q)", 0, 0, {}};
  IdentityResult character_averages{"character map intertwines z- and mu-averages", 0, 0, {}};
  IdentityResult z_case_split{"z-average matches the two-case floor rule", 0, 0, {}};
  IdentityResult dav_a_closed{"dav_A keeps property (A)", 0, 0, {}};
  IdentityResult diff_in_cd{"A-difference lands in CD with positive entries", 0, 0, {}};
  IdentityResult diff_commutes{"diff after dav_A equals dav_fc after diff", 0, 0, {}};
  IdentityResult polygon_commutes{"character map intertwines dav_A and dav_P", 0, 0, {}};
  IdentityResult views_round_trip{"rhythm, cycle and polygon views round-trip", 0, 0, {}};
  IdentityResult between_args{"fc- and cf-averages lie between their arguments", 0, 0, {}};
  IdentityResult shifted_average{"fc-average of (p+1,q+1) equals cf-average of (p,q) plus one", 0, 0, {}};
  IdentityResult sum_conserved{"dav_fc conserves the entry sum", 0, 0, {}};
  IdentityResult cd_closed{"dav_fc maps CD into CD", 0, 0, {}};
  IdentityResult never_widens{"dav_fc never lowers the min nor raises the max", 0, 0, {}};
  IdentityResult reverse_rotate{"reverse after cyc+ after dav_fc equals dav_cf after reverse", 0, 0, {}};
  IdentityResult unit_shift{"add+ after dav_cf equals dav_fc after add+", 0, 0, {}};
  IdentityResult fg_invariants{"f+ and g+ keep width and min-block length and raise the min by one", 0, 0, {}};
  IdentityResult fg_intertwine{"dav_fc after f+ equals g+ after dav_fc", 0, 0, {}};
  IdentityResult fg_iterated{"dav_fc^k after f+ equals g+ after cyc+^(k-1) after dav_fc^k", 0, 0, {}};
  IdentityResult property_a_agrees{"property (A) check agrees with brute force", 0, 0, {}};
  IdentityResult counts{"enumeration sizes match closed forms", 0, 0, {}};
  // Not counted: the iterated form without the rotation, which only holds for k = 1.
  IdentityResult literal_iterated{"dav_fc^k after f+ equals g+ after dav_fc^k, for every k <= 5", 0, 0, {}};

  std::vector<IdentityResult> take() {
    return {z_in_arc,       mu_in_arc,    character_averages, z_case_split, dav_a_closed,
            diff_in_cd,     diff_commutes, polygon_commutes,  views_round_trip, between_args,
            shifted_average, sum_conserved, cd_closed,         never_widens, reverse_rotate,
            unit_shift,     fg_invariants, fg_intertwine,      fg_iterated,  property_a_agrees,
            counts};
  }
};

// Checks that only need an integer vector; shared by the CD sweep and the
// random Z^n sample.
void check_vector(Suite& s, const std::string& where, const DifferenceVector& d, int max_iterations) {
  probe(s.sum_conserved, where, [&]() -> Witness {
    const auto next = dav_fc(d);
    if (next.sum() == d.sum()) return std::nullopt;
    return where + ": sum " + std::to_string(d.sum()) + " became " + std::to_string(next.sum());
  });
  probe(s.never_widens, where, [&]() -> Witness {
    const auto next = dav_fc(d).entries();
    const auto [lo0, hi0] = std::minmax_element(d.entries().begin(), d.entries().end());
    const auto [lo1, hi1] = std::minmax_element(next.begin(), next.end());
    if (*lo1 >= *lo0 && *hi1 <= *hi0) return std::nullopt;
    return where + ": became " + show(next);
  });
  probe(s.reverse_rotate, where, [&] {
    return mismatch(where, reverse(rotate_right(dav_fc(d))), dav_cf(reverse(d)));
  });
  probe(s.unit_shift, where, [&] { return mismatch(where, shift_up(dav_cf(d)), dav_fc(shift_up(d))); });
  probe(s.fg_invariants, where, [&]() -> Witness {
    for (const auto& image : {f_plus(d), g_plus(d)}) {
      const auto& e = image.entries();
      const int lo = *std::min_element(e.begin(), e.end());
      const int lo0 = *std::min_element(d.entries().begin(), d.entries().end());
      if (naive_width(e) != naive_width(d.entries()) || naive_min_count(e) != naive_min_count(d.entries()) ||
          lo != lo0 + 1) {
        return where + ": image " + image.to_string();
      }
    }
    return std::nullopt;
  });
  probe(s.fg_intertwine, where, [&] { return mismatch(where, dav_fc(f_plus(d)), g_plus(dav_fc(d))); });
  // dav_fc commutes with cyc+, so each extra step contributes one rotation.
  probe(s.fg_iterated, where, [&]() -> Witness {
    DifferenceVector lhs = f_plus(d);
    DifferenceVector plain = d;
    for (int k = 1; k <= max_iterations; ++k) {
      lhs = dav_fc(lhs);
      plain = dav_fc(plain);
      DifferenceVector turned = plain;
      for (int t = 1; t < k; ++t) turned = rotate_right(turned);
      if (auto w = mismatch(where + " k=" + std::to_string(k), lhs, g_plus(turned))) return w;
    }
    return std::nullopt;
  });
  probe(s.literal_iterated, where, [&]() -> Witness {
    DifferenceVector lhs = f_plus(d);
    DifferenceVector plain = d;
    for (int k = 1; k <= max_iterations; ++k) {
      lhs = dav_fc(lhs);
      plain = dav_fc(plain);
      if (auto w = mismatch(where + " k=" + std::to_string(k), lhs, g_plus(plain))) return w;
    }
    return std::nullopt;
  });
}

void check_residues(Suite& s, int pulses) {
  for (int a = 0; a < pulses; ++a) {
    for (int b = 0; b < pulses; ++b) {
      const std::string where = at(pulses, "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
      const Residue ra(a, pulses);
      const Residue rb(b, pulses);
      probe(s.z_in_arc, where, [&]() -> Witness {
        const int z = av_z(ra, rb).value();
        const bool ok = a == b ? z == a : naive_in_half_open(a, b, z, pulses);
        if (ok) return std::nullopt;
        return where + ": got " + std::to_string(z);
      });
      probe(s.mu_in_arc, where, [&]() -> Witness {
        const auto p = RootOfUnity::character(ra);
        const auto q = RootOfUnity::character(rb);
        const int e = av_mu(p, q).exponent().value();
        const bool ok = a == b ? e == a : naive_in_half_open(a, b, e, pulses);
        if (ok) return std::nullopt;
        return where + ": exponent " + std::to_string(e);
      });
      probe(s.character_averages, where, [&]() -> Witness {
        const auto lhs = RootOfUnity::character(av_z(ra, rb));
        const auto rhs = av_mu(RootOfUnity::character(ra), RootOfUnity::character(rb));
        if (lhs == rhs) return std::nullopt;
        return where + ": exponents " + std::to_string(lhs.exponent().value()) + " vs " +
               std::to_string(rhs.exponent().value());
      });
      probe(s.z_case_split, where, [&]() -> Witness {
        const int z = av_z(ra, rb).value();
        const int expect = naive_av_z(a, b, pulses);
        if (z == expect) return std::nullopt;
        return where + ": got " + std::to_string(z) + " expected " + std::to_string(expect);
      });
    }
  }
}

void check_cycles(Suite& s, int pulses) {
  for (int n = 2; n <= pulses; ++n) {
    std::vector<AscendingCycle> cycles;
    probe(s.counts, at(pulses, "CA n=" + std::to_string(n)), [&]() -> Witness {
      cycles = enumerate_ca(pulses, n);
      if (cycles.size() == ca_count(pulses, n)) return std::nullopt;
      return at(pulses, "n=" + std::to_string(n) + ": " + std::to_string(cycles.size()) + " cycles, expected " +
                            std::to_string(ca_count(pulses, n)));
    });
    for (const auto& a : cycles) {
      const std::string where = at(pulses, "a=" + show(a.entries()));
      probe(s.dav_a_closed, where, [&]() -> Witness {
        const auto next = dav_A(a);
        if (naive_property_a(next.entries())) return std::nullopt;
        return where + ": got " + show(next.entries());
      });
      probe(s.diff_in_cd, where, [&]() -> Witness {
        const auto e = diff(a).entries();
        std::int64_t total = 0;
        for (int x : e) {
          if (x < 1 || x > pulses - 1) return where + ": entry " + std::to_string(x);
          total += x;
        }
        if (total == pulses) return std::nullopt;
        return where + ": sum " + std::to_string(total);
      });
      probe(s.diff_commutes, where, [&] { return mismatch(where, diff(dav_A(a)), dav_fc(diff(a))); });
      probe(s.polygon_commutes, where, [&]() -> Witness {
        const auto lhs = to_polygon(dav_A(a));
        const auto rhs = dav_P(to_polygon(a));
        if (lhs == rhs) return std::nullopt;
        return where + ": " + show(lhs.exponents()) + " vs " + show(rhs.exponents());
      });
      probe(s.views_round_trip, where, [&]() -> Witness {
        if (!(from_polygon(to_polygon(a)) == a)) return where + ": polygon round trip";
        if (n == pulses) return std::nullopt;  // a rhythm needs a silent pulse
        const auto r = cycle_to_rhythm(a);
        if (!(cycle_to_rhythm(rhythm_to_cycle(r)) == r)) return where + ": rhythm round trip";
        if (!(OnsetRhythm::from_binary(r.binary()) == r)) return where + ": binary round trip";
        return std::nullopt;
      });
    }
  }
}

void check_difference_space(Suite& s, int pulses, int max_iterations) {
  for (int n = 2; n < pulses; ++n) {
    std::uint64_t seen = 0;
    std::uint64_t positive = 0;
    for_each_cd(pulses, n, [&](const DifferenceVector& tagged) {
      ++seen;
      if (std::all_of(tagged.entries().begin(), tagged.entries().end(), [](int x) { return x >= 1; })) ++positive;
      const DifferenceVector d = tagged.without_modulus();
      const std::string where = at(pulses, "d=" + d.to_string());
      probe(s.cd_closed, where, [&]() -> Witness {
        const auto e = dav_fc(d).entries();
        std::int64_t total = 0;
        for (int x : e) {
          if (x < 0 || x > pulses - 1) return where + ": entry " + std::to_string(x);
          total += x;
        }
        if (total == pulses) return std::nullopt;
        return where + ": sum " + std::to_string(total);
      });
      check_vector(s, where, d, max_iterations);
    });
    probe(s.counts, at(pulses, "CD n=" + std::to_string(n)), [&]() -> Witness {
      if (seen == cd_count(pulses, n) && positive == diff_image_count(pulses, n)) return std::nullopt;
      return at(pulses, "n=" + std::to_string(n) + ": CD size " + std::to_string(seen) + " (formula " +
                            std::to_string(cd_count(pulses, n)) + "), positive " + std::to_string(positive));
    });
  }
}

void check_property_a(Suite& s, int pulses) {
  for (int n = 2; n <= pulses; ++n) {
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    while (true) {
      probe(s.property_a_agrees, at(pulses, show(t)), [&]() -> Witness {
        if (has_property_a(t) == naive_property_a(t)) return std::nullopt;
        return at(pulses, show(t) + ": library says " + (has_property_a(t) ? "yes" : "no"));
      });
      std::size_t i = t.size();
      while (i > 0 && t[i - 1] == pulses - 1) t[--i] = 0;
      if (i == 0) break;
      ++t[i - 1];
    }
  }
}

}  // namespace

bool IdentityReport::all_passed() const noexcept {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed(); });
}

const IdentityResult* IdentityReport::find(std::string_view name) const noexcept {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

IdentityReport verify_identities(int max_pulses, const VerifyOptions& options) {
  Suite s;
  const int brute_force_limit = std::min(max_pulses, 7);

  for (int pulses = 3; pulses <= max_pulses; ++pulses) {
    check_residues(s, pulses);
    check_cycles(s, pulses);
    check_difference_space(s, pulses, options.max_iterations);
    if (pulses <= brute_force_limit) check_property_a(s, pulses);
  }

  const int bound = std::max(options.small_int_bound, max_pulses);
  for (int p = -bound; p <= bound; ++p) {
    for (int q = -bound; q <= bound; ++q) {
      const std::string where = "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
      probe(s.between_args, where, [&]() -> Witness {
        const int lo = std::min(p, q);
        const int hi = std::max(p, q);
        const int fc = av_fc(p, q);
        const int cf = av_cf(p, q);
        if (lo <= fc && fc <= hi && lo <= cf && cf <= hi) return std::nullopt;
        return where + ": fc " + std::to_string(fc) + " cf " + std::to_string(cf);
      });
      if (std::abs(p) <= options.small_int_bound && std::abs(q) <= options.small_int_bound) {
        probe(s.shifted_average, where, [&]() -> Witness {
          if (av_fc(p + 1, q + 1) == av_cf(p, q) + 1) return std::nullopt;
          return where + ": " + std::to_string(av_fc(p + 1, q + 1)) + " vs " + std::to_string(av_cf(p, q) + 1);
        });
      }
    }
  }

  std::mt19937 rng(options.seed);
  std::uniform_int_distribution<int> entry(-options.random_bound, options.random_bound);
  for (int n = 1; n <= options.random_max_length; ++n) {
    for (int trial = 0; trial < options.random_trials; ++trial) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (int& x : e) x = entry(rng);
      const DifferenceVector d(std::move(e));
      check_vector(s, "random d=" + d.to_string(), d, options.max_iterations);
    }
  }

  IdentityReport report;
  report.max_pulses = max_pulses;
  report.results = s.take();
  report.deviations = {s.literal_iterated};
  return report;
}

void print_report(const IdentityReport& report, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& r : report.results) width = std::max(width, r.name.size());
  for (const auto& r : report.results) {
    out << (r.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
        << "  " << r.cases << " cases";
    if (!r.passed()) out << ", " << r.failures << " failures; first: " << r.first_witness;
    out << '\n';
  }
  for (const auto& r : report.deviations) {
    out << "NOTE  " << r.name << "  " << r.cases << " cases, " << r.failures << " failures";
    if (r.failures) out << "; first: " << r.first_witness;
    out << '\n';
  }
  out << (report.all_passed() ? "all identities hold" : "identity suite FAILED") << " for N <= "
      << report.max_pulses << '\n';
}

}  // namespace evenrhythm::oracle
