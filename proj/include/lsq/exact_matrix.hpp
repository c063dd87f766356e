#pragma once

#include <array>
#include <vector>

#include "lsq/bigint.hpp"
#include "lsq/scheme.hpp"

namespace lsq {

// A square matrix over the integers, indexed by the orthogonal array in
// row-major point order.  Entries live in machine words while they fit and
// promote to BigInt transparently; all arithmetic is exact.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int size) : n_(size), small_(static_cast<size_t>(size) * size, 0) {}

  static ExactMatrix identity_matrix(int size);

  int size() const noexcept { return n_; }
  bool uses_bigint() const noexcept { return big_; }

  BigInt at(int r, int c) const;
  long long at_small(int r, int c) const;  // valid only when !uses_bigint()
  void set(int r, int c, long long v);
  void set(int r, int c, const BigInt& v);

  BigInt trace() const;
  bool is_zero() const;
  bool is_zero_one() const;  // every entry 0 or 1

  ExactMatrix& operator-=(const ExactMatrix& rhs);
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  // Row-major flat access for the span machinery.
  const std::vector<long long>* small_data() const { return big_ ? nullptr : &small_; }
  const std::vector<BigInt>* big_data() const { return big_ ? &big_vals_ : nullptr; }
  static ExactMatrix from_flat_small(int size, std::vector<long long> flat);
  static ExactMatrix from_flat_big(int size, std::vector<BigInt> flat);

 private:
  void promote();

  int n_ = 0;
  bool big_ = false;
  std::vector<long long> small_;
  std::vector<BigInt> big_vals_;
};

// The 0/1 relation matrices A_0..A_4 of the scheme; A_0 is the identity and
// they sum to the all-ones matrix.
std::array<ExactMatrix, 5> relation_matrices(const LatinSquare& square);

// The diagonal dual idempotents E*_0..E*_4 at p: the (x,x)-entry of E*_i is
// the (p,x)-entry of A_i.
std::array<ExactMatrix, 5> dual_idempotent_matrices(const LatinSquare& square,
                                                    const Point& p);

// Checks A_i A_j = sum_h p^h_{ij} A_h entrywise in exact arithmetic for all
// 25 pairs.
bool verify_intersection_identity(const LatinSquare& square);

}  // namespace lsq
