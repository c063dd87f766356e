#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsq/latin_square.hpp"

namespace lsq {

// A named built-in table in the text format of LatinSquare::parse.
struct CorpusEntry {
  std::string name;
  std::string description;
  std::string text;
  // distinguished (row, col) cells, when the table has any (fig3's transversal)
  std::vector<std::pair<int, int>> marked_cells;

  LatinSquare square() const { return LatinSquare::parse(text); }
};

const std::vector<CorpusEntry>& corpus();

// Throws UnknownCorpusName.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace lsq
