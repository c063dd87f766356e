#pragma once

#include <optional>
#include <vector>

#include "lsq/exact_matrix.hpp"
#include "lsq/subconstituent.hpp"

namespace lsq {

// A multiplication-closed span of integer matrices over the rationals, held
// as a fraction-free row-reduced basis (vectorized row-major).
class MatrixSpan {
 public:
  MatrixSpan() = default;

  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  bool closed() const noexcept { return closed_; }
  int matrix_size() const noexcept { return matrix_size_; }
  const std::vector<ExactMatrix>& basis() const noexcept { return basis_; }
  const std::vector<ExactMatrix>& generators() const noexcept { return generators_; }

  // A raw span that has not been closed under multiplication; basis vectors
  // are row-reduced but center_dimension will refuse it.
  static MatrixSpan from_basis(std::vector<ExactMatrix> matrices);

 private:
  friend MatrixSpan span_closure(std::vector<ExactMatrix> generators,
                                 const std::vector<ExactMatrix>& seed_hints);

  int matrix_size_ = 0;
  bool closed_ = false;
  std::vector<ExactMatrix> basis_;       // echelon order by pivot position
  std::vector<ExactMatrix> generators_;  // the seed, kept for the center system
};

// Smallest multiplication-closed rational span containing the generators.
// Worklist closure: every new basis element is multiplied against the
// existing ones on both sides and the products adjoined by exact row
// reduction until nothing new appears.  No floating point anywhere.
// seed_hints must be elements of the generated algebra (e.g. products of
// generators); they are adjoined first as a localization aid and do not
// change the result.
MatrixSpan span_closure(std::vector<ExactMatrix> generators,
                        const std::vector<ExactMatrix>& seed_hints = {});

int span_closure_dimension(const std::vector<ExactMatrix>& generators);

// Dimension of {B in span : BG = GB for every basis element G}, the number
// of Wedderburn summands of a closed span.
int center_dimension(const MatrixSpan& span);

// Formula prediction vs. span-closure oracle at one base point.
struct WedderburnReport {
  int order = 0;
  Point base;
  std::optional<int> predicted_n;               // N, absent when order <= 4
  std::optional<long long> predicted_dimension;  // 25 + 36N + 1
  long long oracle_dimension = 0;
  std::optional<bool> dimension_match;
  std::optional<int> center_dim;        // only when requested
  std::optional<int> predicted_center;  // N + 2
  std::optional<bool> center_match;
};

WedderburnReport verify_wedderburn(const LatinSquare& square, const Point& p,
                                   bool with_center = false);

}  // namespace lsq
