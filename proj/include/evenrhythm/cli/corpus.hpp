#pragma once

// Six 16-pulse, 5-onset rhythms and their distances to the final cycle.

#include <string>
#include <vector>

#include "evenrhythm/core.hpp"

namespace evenrhythm::cli {

struct CorpusEntry {
  std::string name;
  int pulses = 16;
  std::vector<int> onsets;
  int expected_distance = 0;

  OnsetRhythm rhythm() const { return OnsetRhythm(pulses, onsets); }
};

/// Bossa, Shiko, Son, Rumba, Soukous, Gahu, in increasing distance.
const std::vector<CorpusEntry>& corpus();

/// Lookup by name, case-sensitive. Throws UsageError when absent.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace evenrhythm::cli
