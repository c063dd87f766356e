#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lsq/transforms.hpp"

namespace lsq {

// mt19937_64 with modulo draws: the stream is fixed by the seed on every
// platform, so seeds recorded in reports reproduce runs exactly.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  int below(int n) { return static_cast<int>(engine_() % static_cast<uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

Permutation random_permutation(int degree, Rng& rng);
Isotopy random_isotopy(int degree, Rng& rng);

// Uniformly scrambled Latin square by randomized cell-by-cell backtracking.
LatinSquare random_latin_square(int order, Rng& rng);

// Row/column relabeling isotopy that turns any Latin square into a loop
// table with identity 1.
LatinSquare normalize_to_loop(const LatinSquare& square);

// Randomized hunt for loops with the right inverse property whose pi fails
// to be an involution somewhere; also records whether the two-sided
// criterion identity agreed with the pi^2 test at every base point and
// column of every RIP loop examined.
struct RipSearchResult {
  uint64_t seed = 0;
  int squares_examined = 0;
  int rip_loops_tested = 0;
  bool criterion_agreed_everywhere = true;
  std::vector<std::string> involution_violations;  // table text of each find
};

RipSearchResult rip_pi_search(const std::vector<int>& orders, int count_per_order,
                              uint64_t seed);

}  // namespace lsq
