#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lsq/error.hpp"

namespace lsq {

// An n-by-n array over symbols 1..n with every symbol exactly once per row
// and column; read as the Cayley table of a quasigroup whose (a,b)-entry is
// the product a*b.  Immutable after construction, so freely shareable.
class LatinSquare {
 public:
  // Rows of symbols already normalized to 1..n.  Validates the Latin property.
  static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

  // Text format: '#' comment lines, then n whitespace-separated rows of n
  // tokens; n is inferred from the first row.  Symbols are normalized to
  // 1..n; non-numeric tokens keep their spelling in a side table.
  static LatinSquare parse(std::istream& in);
  static LatinSquare parse(const std::string& text);

  int order() const noexcept { return n_; }

  // a*b, the (a,b)-entry.
  int product(int a, int b) const {
    check_symbol(a);
    check_symbol(b);
    return grid_[static_cast<size_t>(a - 1) * n_ + (b - 1)];
  }

  // The unique c with a*c = b.
  int left_divide(int a, int b) const {
    check_symbol(a);
    check_symbol(b);
    return left_div_[static_cast<size_t>(a - 1) * n_ + (b - 1)];
  }

  // The unique d with d*a = b.
  int right_divide(int a, int b) const {
    check_symbol(a);
    check_symbol(b);
    return right_div_[static_cast<size_t>(a - 1) * n_ + (b - 1)];
  }

  // Display text for a symbol: the original token when the source was
  // non-numeric, the decimal value otherwise.
  std::string symbol_name(int s) const;

  bool has_symbol_names() const noexcept { return !names_.empty(); }

  // Canonical text form: n rows of single-space-separated symbols, each row
  // terminated by '\n'.  parse(to_text()) reproduces the square.
  std::string to_text() const;

  friend bool operator==(const LatinSquare& a, const LatinSquare& b) {
    return a.n_ == b.n_ && a.grid_ == b.grid_;
  }
  friend bool operator!=(const LatinSquare& a, const LatinSquare& b) { return !(a == b); }

 private:
  LatinSquare(int n, std::vector<int> grid, std::vector<std::string> names);

  void check_symbol(int s) const {
    if (s < 1 || s > n_)
      throw Error(errc::symbol_out_of_range,
                  "symbol " + std::to_string(s) + " not in 1.." + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<int> grid_;        // row-major, values 1..n
  std::vector<int> left_div_;    // left_div_[a][b] = c with a*c = b
  std::vector<int> right_div_;   // right_div_[a][b] = d with d*a = b
  std::vector<std::string> names_;  // empty for numeric sources
};

}  // namespace lsq
