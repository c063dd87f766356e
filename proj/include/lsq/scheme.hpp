#pragma once

#include <array>
#include <vector>

#include "lsq/latin_square.hpp"

namespace lsq {

// A point (row, column, entry) of the orthogonal array X(L).
// Any two components determine the third.
struct Point {
  int row = 0;
  int col = 0;
  int entry = 0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.row == b.row && a.col == b.col && a.entry == b.entry;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// The point of X(L) at (row, col); throws PointNotInArray on a bad triple
// and SymbolOutOfRange on bad coordinates.
Point base_point(const LatinSquare& square, int row, int col);

// Throws PointNotInArray unless p lies in X(L).
void check_point(const LatinSquare& square, const Point& p);

// All n^2 points in row-major order (row ascending, then column).
std::vector<Point> orthogonal_array(const LatinSquare& square);

// Which relation of the 4-class scheme joins x and y:
//   0 all three components agree, 1/2/3 exactly the row/column/entry agrees,
//   4 none agree.  Agreement in exactly two components cannot happen over a
//   valid Latin square and throws TwoComponentAgreement.
int relation_of(const Point& x, const Point& y);

// Structure constants p^h_{ij} of the scheme together with the valencies.
struct IntersectionTensor {
  int order = 0;
  // p[h][i][j] = #{z : (x,z) in relation i, (z,y) in relation j} for any
  // (x,y) in relation h
  std::array<std::array<std::array<long long, 5>, 5>, 5> p{};

  long long valency(int i) const;

  friend bool operator==(const IntersectionTensor& a, const IntersectionTensor& b) {
    return a.order == b.order && a.p == b.p;
  }
};

// Brute-forced from one representative pair per class, then validated
// against every pair; a pair-dependent count throws NotWellDefined.
// Requires order >= 2.
IntersectionTensor intersection_numbers(const LatinSquare& square);

// The five subconstituents of X(L) relative to p: cell i holds the points in
// relation i to p.  Sizes are (1, n-1, n-1, n-1, (n-1)(n-2)).
std::array<std::vector<Point>, 5> subconstituent_partition(const LatinSquare& square,
                                                           const Point& p);

}  // namespace lsq
