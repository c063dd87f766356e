#pragma once

#include <array>
#include <string>

#include "lsq/permutation.hpp"
#include "lsq/scheme.hpp"

namespace lsq {

// Row, column and entry permutations applied together.
struct Isotopy {
  Permutation rows;
  Permutation cols;
  Permutation entries;

  static Isotopy identity(int n) {
    return Isotopy{Permutation::identity(n), Permutation::identity(n),
                   Permutation::identity(n)};
  }

  // apply(apply(L, inner), outer) == apply(L, inner.then(outer))
  Isotopy then(const Isotopy& outer) const {
    return Isotopy{rows.then(outer.rows), cols.then(outer.cols),
                   entries.then(outer.entries)};
  }
};

// A permutation of the three coordinate positions of X(L): the component in
// position i moves to position to[i-1] (1-based positions).
struct Conjugacy {
  std::array<int, 3> to{1, 2, 3};

  static Conjugacy identity() { return Conjugacy{}; }
  static Conjugacy transpose() { return Conjugacy{{2, 1, 3}}; }

  // Word over {r,c,e} in one-line notation: position k of the image reads
  // component word[k].  "rce" is the identity; "cre" (or the two-letter
  // transposition shorthand "rc") is the matrix transpose.
  static Conjugacy parse(const std::string& word);
  std::string to_word() const;
};

// L'(rows(r), cols(c)) = entries(L(r,c)).  Always a valid Latin square.
LatinSquare apply_isotopy(const LatinSquare& square, const Isotopy& iso);

// The square whose orthogonal array is the coordinate-permuted X(L).
LatinSquare apply_conjugacy(const LatinSquare& square, const Conjugacy& conj);

// Componentwise image of a base point; the result lies in X(L').
Point map_base_point(const LatinSquare& square, const Point& p, const Isotopy& iso);
Point map_base_point(const LatinSquare& square, const Point& p, const Conjugacy& conj);

// Isotopy file syntax: three non-comment lines, each a one-line permutation
// image list for rows, columns, entries in that order.
Isotopy parse_isotopy(std::istream& in, int degree);

}  // namespace lsq
