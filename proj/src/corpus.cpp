#include "lsq/corpus.hpp"

namespace lsq {

namespace {

std::string cyclic_text(int n) {
  std::string out;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c > 0) out.push_back(' ');
      out += std::to_string((r + c) % n + 1);
    }
    out.push_back('\n');
  }
  return out;
}

std::string xor_group_text(int bits) {
  const int n = 1 << bits;
  std::string out;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c > 0) out.push_back(' ');
      out += std::to_string((r ^ c) + 1);
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> entries;
  entries.push_back({"fig1", "cyclic group of order 3",
                     "1 2 3\n"
                     "2 3 1\n"
                     "3 1 2\n",
                     {}});
  entries.push_back({"fig2", "right Bol loop of order 8",
                     "1 2 3 4 5 6 7 8\n"
                     "2 8 6 1 7 3 5 4\n"
                     "3 7 8 6 1 4 2 5\n"
                     "4 1 7 8 6 5 3 2\n"
                     "5 6 1 7 8 2 4 3\n"
                     "6 3 4 5 2 8 1 7\n"
                     "7 5 2 3 4 1 8 6\n"
                     "8 4 5 2 3 7 6 1\n",
                     {}});
  entries.push_back({"fig3",
                     "order-7 loop whose pi is an involution everywhere yet is "
                     "not main-class equivalent to a Bol loop",
                     "1 2 3 4 5 6 7\n"
                     "2 1 4 3 7 5 6\n"
                     "3 7 5 6 1 4 2\n"
                     "4 3 2 1 6 7 5\n"
                     "5 6 1 7 3 2 4\n"
                     "6 5 7 2 4 1 3\n"
                     "7 4 6 5 2 3 1\n",
                     {{1, 5}, {2, 7}, {3, 1}, {4, 6}, {5, 3}, {6, 4}, {7, 2}}});
  for (int n = 4; n <= 8; ++n)
    entries.push_back(
        {"c" + std::to_string(n), "cyclic group of order " + std::to_string(n),
         cyclic_text(n),
         {}});
  entries.push_back(
      {"z2^3", "elementary abelian 2-group of order 8", xor_group_text(3), {}});
  return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const CorpusEntry& entry : corpus())
    if (entry.name == name) return entry;
  throw Error(errc::unknown_corpus_name, "no built-in table named '" + name + "'");
}

}  // namespace lsq
