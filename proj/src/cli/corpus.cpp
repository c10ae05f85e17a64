#include "evenrhythm/cli/corpus.hpp"

#include "evenrhythm/error.hpp"

namespace evenrhythm::cli {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"Bossa", 16, {0, 3, 6, 10, 13}, 0},
      {"Shiko", 16, {0, 4, 6, 10, 12}, 1},
      {"Son", 16, {0, 3, 6, 10, 12}, 1},
      {"Rumba", 16, {0, 3, 7, 10, 12}, 1},
      {"Soukous", 16, {0, 3, 6, 10, 11}, 3},
      {"Gahu", 16, {0, 3, 6, 10, 14}, 3},
  };
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw UsageError("no corpus rhythm named '" + name + "'");
}

}  // namespace evenrhythm::cli
