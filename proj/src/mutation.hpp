#pragma once

// Compile-time fault injection. Normal builds leave EVENRHYTHM_MUTANT at 0;
// the mutant libraries built for the test suite set it to break exactly one
// arithmetic rule so the identity checks can be shown to detect it.

#ifndef EVENRHYTHM_MUTANT
#define EVENRHYTHM_MUTANT 0
#endif

namespace evenrhythm::detail {

enum class Mutant {
  none = 0,
  fc_parity_flip = 1,        // av_fc takes floor for odd first argument
  no_wraparound = 2,         // +_N skips the reduction R_N
  skip_jump_uniqueness = 3,  // property (A) accepts any number of descents
};

inline constexpr Mutant active_mutant = static_cast<Mutant>(EVENRHYTHM_MUTANT);

}  // namespace evenrhythm::detail
