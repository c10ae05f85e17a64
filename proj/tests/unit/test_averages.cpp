#include <doctest.h>

#include <cmath>

#include "evenrhythm/averages.hpp"
#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"

using namespace evenrhythm;

TEST_CASE("floor average") {
  CHECK(av_floor(3, 4) == 3);
  CHECK(av_floor(7, 14) == 10);
  CHECK(av_floor(-3, 2) == -1);
  CHECK(floor_half(-1) == -1);
  CHECK(ceil_half(-1) == 0);
  CHECK(is_odd(-3));
  CHECK_FALSE(is_odd(-4));
}

TEST_CASE("fc-average") {
  CHECK(av_fc(3, 4) == 4);
  CHECK(av_fc(4, 7) == 5);
  CHECK(av_fc(7, 2) == 5);
  CHECK(av_fc(2, 3) == 2);
  CHECK(av_fc(1, 2) == 2);
  CHECK(av_fc(2, 1) == 1);
  for (int m = -5; m <= 5; ++m) CHECK(av_fc(m, m) == m);
}

TEST_CASE("cf-average") {
  CHECK(av_cf(2, 5) == 4);
  CHECK(av_cf(3, 3) == 3);
  CHECK(av_fc(4, 5) == 4);
  CHECK(av_cf(3, 4) == 3);
  CHECK(av_fc(4, 5) == av_cf(3, 4) + 1);
}

TEST_CASE("both averages agree with exact midpoints and stay between the arguments") {
  for (int p = -12; p <= 12; ++p) {
    for (int q = -12; q <= 12; ++q) {
      const double mid = (p + q) / 2.0;
      const int fc = av_fc(p, q);
      const int cf = av_cf(p, q);
      CHECK(std::abs(fc - mid) < 1.0);
      CHECK(std::abs(cf - mid) < 1.0);
      if ((p + q) % 2 == 0) {
        CHECK(fc == (p + q) / 2);
        CHECK(cf == (p + q) / 2);
      }
      CHECK(std::min(p, q) <= fc);
      CHECK(fc <= std::max(p, q));
      CHECK(av_fc(p + 1, q + 1) == av_cf(p, q) + 1);
    }
  }
}

TEST_CASE("discrete square root") {
  const auto sq = [](int e) { return discrete_sqrt(RootOfUnity::character(Residue(e, 16))).exponent().value(); };
  CHECK(sq(7) == 3);
  CHECK(sq(0) == 0);
  CHECK(sq(15) == 7);
}

TEST_CASE("mu-average") {
  const auto mu = [](int a, int b) {
    return av_mu(RootOfUnity::character(Residue(a, 16)), RootOfUnity::character(Residue(b, 16)))
        .exponent()
        .value();
  };
  CHECK(mu(14, 0) == 15);
  CHECK(mu(12, 4) == 0);
  CHECK(oracle::naive_in_half_open(12, 4, 0, 16));
  for (int a = 0; a < 16; ++a) CHECK(mu(a, a) == a);
  CHECK_THROWS_AS(av_mu(RootOfUnity::character(Residue(1, 16)), RootOfUnity::character(Residue(1, 12))),
                  UsageError);
}

TEST_CASE("z-average") {
  const auto z = [](int a, int b) { return av_z(Residue(a, 16), Residue(b, 16)).value(); };
  CHECK(z(0, 3) == 1);
  CHECK(z(3, 7) == 5);
  CHECK(z(7, 14) == 10);
  CHECK(z(14, 0) == 15);
  CHECK_THROWS_AS(av_z(Residue(1, 16), Residue(1, 12)), UsageError);
}

TEST_CASE("z-average against the arc, the character map and the case split, N <= 12") {
  for (int pulses = 3; pulses <= 12; ++pulses) {
    for (int a = 0; a < pulses; ++a) {
      for (int b = 0; b < pulses; ++b) {
        const Residue ra(a, pulses), rb(b, pulses);
        const int z = av_z(ra, rb).value();
        if (a == b) {
          CHECK(z == a);
        } else {
          CHECK(oracle::naive_in_half_open(a, b, z, pulses));
        }
        CHECK(av_mu(RootOfUnity::character(ra), RootOfUnity::character(rb)).exponent().value() == z);
        CHECK(oracle::naive_av_z(a, b, pulses) == z);
      }
    }
  }
}
