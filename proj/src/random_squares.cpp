#include "lsq/random_squares.hpp"

#include <stdexcept>

#include "lsq/loops.hpp"
#include "lsq/subconstituent.hpp"

namespace lsq {

namespace {

// depth-first fill in row-major order with randomized symbol order
bool fill_cell(int order, int cell, std::vector<int>& grid, std::vector<uint32_t>& row_used,
               std::vector<uint32_t>& col_used, Rng& rng) {
  if (cell == order * order) return true;
  const int r = cell / order;
  const int c = cell % order;
  std::vector<int> candidates;
  for (int s = 1; s <= order; ++s) {
    uint32_t bit = uint32_t{1} << s;
    if (!(row_used[static_cast<size_t>(r)] & bit) && !(col_used[static_cast<size_t>(c)] & bit))
      candidates.push_back(s);
  }
  for (int i = static_cast<int>(candidates.size()) - 1; i > 0; --i)
    std::swap(candidates[static_cast<size_t>(i)],
              candidates[static_cast<size_t>(rng.below(i + 1))]);
  for (int s : candidates) {
    uint32_t bit = uint32_t{1} << s;
    grid[static_cast<size_t>(cell)] = s;
    row_used[static_cast<size_t>(r)] |= bit;
    col_used[static_cast<size_t>(c)] |= bit;
    if (fill_cell(order, cell + 1, grid, row_used, col_used, rng)) return true;
    row_used[static_cast<size_t>(r)] &= ~bit;
    col_used[static_cast<size_t>(c)] &= ~bit;
  }
  return false;
}

}  // namespace

Permutation random_permutation(int degree, Rng& rng) {
  std::vector<int> images(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = i + 1;
  for (int i = degree - 1; i > 0; --i)
    std::swap(images[static_cast<size_t>(i)], images[static_cast<size_t>(rng.below(i + 1))]);
  return Permutation(std::move(images));
}

Isotopy random_isotopy(int degree, Rng& rng) {
  return Isotopy{random_permutation(degree, rng), random_permutation(degree, rng),
                 random_permutation(degree, rng)};
}

LatinSquare random_latin_square(int order, Rng& rng) {
  if (order < 1 || order > 31)
    throw std::invalid_argument("random squares support orders 1..31");
  std::vector<int> grid(static_cast<size_t>(order) * order, 0);
  std::vector<uint32_t> row_used(static_cast<size_t>(order), 0);
  std::vector<uint32_t> col_used(static_cast<size_t>(order), 0);
  if (!fill_cell(order, 0, grid, row_used, col_used, rng))
    throw std::logic_error("Latin square backtracking failed");
  std::vector<std::vector<int>> rows(static_cast<size_t>(order));
  for (int r = 0; r < order; ++r)
    rows[static_cast<size_t>(r)].assign(grid.begin() + static_cast<long>(r) * order,
                                        grid.begin() + static_cast<long>(r + 1) * order);
  return LatinSquare::from_rows(rows);
}

LatinSquare normalize_to_loop(const LatinSquare& square) {
  const int n = square.order();
  // relabel columns so row 1 reads 1..n, then rows so column 1 does too
  std::vector<int> col_images(static_cast<size_t>(n));
  for (int c = 1; c <= n; ++c) col_images[static_cast<size_t>(c - 1)] = square.product(1, c);
  Isotopy columns{Permutation::identity(n), Permutation(std::move(col_images)),
                  Permutation::identity(n)};
  LatinSquare step = apply_isotopy(square, columns);

  std::vector<int> row_images(static_cast<size_t>(n));
  for (int r = 1; r <= n; ++r) row_images[static_cast<size_t>(r - 1)] = step.product(r, 1);
  Isotopy rows{Permutation(std::move(row_images)), Permutation::identity(n),
               Permutation::identity(n)};
  return apply_isotopy(step, rows);
}

RipSearchResult rip_pi_search(const std::vector<int>& orders, int count_per_order,
                              uint64_t seed) {
  Rng rng(seed);
  RipSearchResult result;
  result.seed = seed;
  for (int order : orders) {
    for (int i = 0; i < count_per_order; ++i) {
      LatinSquare loop_table = normalize_to_loop(random_latin_square(order, rng));
      ++result.squares_examined;
      auto record = loop_properties(loop_table);
      if (!record.has_rip) continue;
      ++result.rip_loops_tested;
      bool involution_everywhere = true;
      for (int r = 1; r <= order; ++r) {
        for (int c = 1; c <= order; ++c) {
          const Point p = base_point(loop_table, r, c);
          for (int col = 1; col <= order; ++col) {
            if (col == c) continue;
            auto check = pi_square_criterion(loop_table, p, col);
            if (check.identity_holds != check.pi_square_fixed)
              result.criterion_agreed_everywhere = false;
            if (!check.pi_square_fixed) involution_everywhere = false;
          }
        }
      }
      if (!involution_everywhere)
        result.involution_violations.push_back(loop_table.to_text());
    }
  }
  return result;
}

}  // namespace lsq
