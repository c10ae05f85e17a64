#include <doctest.h>

#include <algorithm>

#include "evenrhythm/core.hpp"
#include "evenrhythm/error.hpp"
#include "evenrhythm/oracle.hpp"

using namespace evenrhythm;

TEST_CASE("reduce follows mathematical mod") {
  CHECK(reduce(-1, 16) == 15);
  CHECK(reduce(16, 16) == 0);
  CHECK(reduce(-33, 16) == 15);
  CHECK(reduce(35, 16) == 3);
}

TEST_CASE("residue addition wraps") {
  CHECK(residue_add(Residue(14, 16), Residue(2, 16)).value() == 0);
  CHECK(residue_add(Residue(7, 16), Residue(4, 16)).value() == 11);
  CHECK(residue_add(Residue(13, 16), Residue(4, 16)).value() == 1);
  CHECK(residue_sub(Residue(1, 16), Residue(13, 16)).value() == 4);
  CHECK(residue_negate(Residue(0, 16)).value() == 0);
  CHECK(residue_negate(Residue(3, 16)).value() == 13);
}

TEST_CASE("residue contract errors") {
  CHECK_THROWS_AS(Residue(16, 16), UsageError);
  CHECK_THROWS_AS(Residue(-1, 16), UsageError);
  CHECK_THROWS_AS(Residue(0, 1), UsageError);
  CHECK_THROWS_AS(residue_add(Residue(1, 16), Residue(1, 12)), UsageError);
  CHECK(Residue::reduced(-5, 16).value() == 11);
}

TEST_CASE("roots of unity multiply by adding exponents") {
  const auto p = RootOfUnity::character(Residue(14, 16));
  const auto q = RootOfUnity::character(Residue(5, 16));
  CHECK((p * q).exponent().value() == 3);
  CHECK((p * p.inverse()).exponent().value() == 0);
}

TEST_CASE("onset rhythms") {
  const OnsetRhythm bossa(16, {0, 3, 6, 10, 13});
  CHECK(bossa.binary() == "1001001000100100");
  CHECK(OnsetRhythm::from_binary("1001001000100100") == bossa);
  CHECK(OnsetRhythm(16, {12, 0, 6, 4, 10}).onsets() == std::vector<int>{0, 4, 6, 10, 12});
  CHECK(bossa.is_onset(13));
  CHECK_FALSE(bossa.is_onset(12));

  CHECK_THROWS_AS(OnsetRhythm(16, {0, 16}), UsageError);
  CHECK_THROWS_AS(OnsetRhythm(16, {3, 3}), UsageError);
  CHECK_THROWS_AS(OnsetRhythm(16, {}), UsageError);
  CHECK_THROWS_AS(OnsetRhythm(2, {0}), UsageError);
  CHECK_THROWS_AS(OnsetRhythm::from_binary("10a1"), UsageError);
}

TEST_CASE("rhythm to cycle sorts the onsets") {
  CHECK(rhythm_to_cycle(OnsetRhythm(16, {0, 3, 6, 10, 13})).entries() == std::vector<int>{0, 3, 6, 10, 13});
  CHECK(rhythm_to_cycle(OnsetRhythm(16, {12, 0, 6, 4, 10})).entries() == std::vector<int>{0, 4, 6, 10, 12});
  CHECK(rhythm_to_cycle(OnsetRhythm(8, {7, 1})).entries() == std::vector<int>{1, 7});
  CHECK_THROWS_AS(rhythm_to_cycle(OnsetRhythm(8, {5})), UnsupportedSize);
}

TEST_CASE("cycle to rhythm forgets the start") {
  CHECK(cycle_to_rhythm(AscendingCycle(16, {13, 1, 5, 9})).onsets() == std::vector<int>{1, 5, 9, 13});
  CHECK(cycle_to_rhythm(AscendingCycle(16, {0, 3, 6, 10, 13})).binary() == "1001001000100100");
  CHECK(cycle_to_rhythm(AscendingCycle(16, {5, 9, 12, 15, 2})).onsets() == std::vector<int>{2, 5, 9, 12, 15});
}

TEST_CASE("jumping number") {
  CHECK(jumping_number(AscendingCycle(16, {0, 3, 7, 14})) == 3);
  CHECK(jumping_number(AscendingCycle(16, {13, 1, 5, 9})) == 0);
  CHECK(jumping_number(AscendingCycle(16, {9, 13, 1, 5})) == 1);
}

TEST_CASE("ascending cycle validation") {
  CHECK_THROWS_AS(AscendingCycle(16, {3}), UnsupportedSize);
  CHECK_THROWS_AS(AscendingCycle(16, {0, 16}), UsageError);
  CHECK_THROWS_AS(AscendingCycle(16, {0, 5, 3, 7}), InvariantViolation);  // two descents
  CHECK_THROWS_AS(AscendingCycle(16, {2, 2}), InvariantViolation);
  CHECK(has_property_a(std::vector<int>{3, 0}));
  CHECK_FALSE(has_property_a(std::vector<int>{0, 5, 3, 7}));
}

TEST_CASE("polygon view") {
  const AscendingCycle a(16, {1, 5, 10, 15});
  CHECK(to_polygon(a).exponents() == std::vector<int>{1, 5, 10, 15});
  CHECK(to_polygon(AscendingCycle(16, {0, 4, 8, 12})).exponents() == std::vector<int>{0, 4, 8, 12});
  CHECK(from_polygon(to_polygon(a)) == a);
  const std::vector<int> repeated{0, 3, 3};
  CHECK_THROWS_AS(PolygonView(16, repeated), UsageError);
  // A star polygon is a valid polygon but not an ascending cycle.
  const std::vector<int> star{0, 6, 12, 2};
  CHECK_THROWS_AS(from_polygon(PolygonView(16, star)), InvariantViolation);
}

TEST_CASE("views round-trip exhaustively for N <= 10") {
  for (int pulses = 3; pulses <= 10; ++pulses) {
    for (int n = 2; n <= pulses; ++n) {
      for (const auto& a : oracle::enumerate_ca(pulses, n)) {
        REQUIRE(from_polygon(to_polygon(a)) == a);
        const auto descents = jumping_number(a);
        REQUIRE(a.entries()[descents] > a.entries()[(descents + 1) % a.size()]);
        if (n == pulses) continue;
        const OnsetRhythm r = cycle_to_rhythm(a);
        REQUIRE(cycle_to_rhythm(rhythm_to_cycle(r)) == r);
        REQUIRE(r.onset_count() == static_cast<std::size_t>(n));
      }
    }
  }
}
