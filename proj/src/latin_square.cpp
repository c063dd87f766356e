#include "lsq/latin_square.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace lsq {

namespace {

bool parse_int(const std::string& token, long long& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

LatinSquare::LatinSquare(int n, std::vector<int> grid, std::vector<std::string> names)
    : n_(n), grid_(std::move(grid)), names_(std::move(names)) {
  // Latin property: every row and column a permutation of 1..n.
  std::vector<char> seen(static_cast<size_t>(n_) + 1);
  for (int r = 0; r < n_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n_; ++c) {
      int v = grid_[static_cast<size_t>(r) * n_ + c];
      if (seen[static_cast<size_t>(v)])
        throw Error(errc::row_repeat, "row " + std::to_string(r + 1) +
                                          " repeats symbol " + std::to_string(v));
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  for (int c = 0; c < n_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n_; ++r) {
      int v = grid_[static_cast<size_t>(r) * n_ + c];
      if (seen[static_cast<size_t>(v)])
        throw Error(errc::column_repeat, "column " + std::to_string(c + 1) +
                                             " repeats symbol " + std::to_string(v));
      seen[static_cast<size_t>(v)] = 1;
    }
  }
  left_div_.assign(grid_.size(), 0);
  right_div_.assign(grid_.size(), 0);
  for (int a = 1; a <= n_; ++a) {
    for (int b = 1; b <= n_; ++b) {
      int p = grid_[static_cast<size_t>(a - 1) * n_ + (b - 1)];
      left_div_[static_cast<size_t>(a - 1) * n_ + (p - 1)] = b;   // a*b = p
      right_div_[static_cast<size_t>(b - 1) * n_ + (p - 1)] = a;  // a*b = p
    }
  }
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(errc::ragged_grid, "empty grid");
  std::vector<int> grid;
  grid.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error(errc::ragged_grid, "expected " + std::to_string(n) + " columns, got " +
                                         std::to_string(row.size()));
    for (int v : row) {
      if (v < 1 || v > n)
        throw Error(errc::symbol_out_of_range,
                    "symbol " + std::to_string(v) + " not in 1.." + std::to_string(n));
      grid.push_back(v);
    }
  }
  return LatinSquare(n, std::move(grid), {});
}

LatinSquare LatinSquare::parse(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv(line);
    size_t start = sv.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    if (sv[start] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string token;
    while (ls >> token) row.push_back(token);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(errc::ragged_grid, "no rows in input");
  size_t n = rows.front().size();
  if (rows.size() != n)
    throw Error(errc::ragged_grid, "expected " + std::to_string(n) + " rows, got " +
                                       std::to_string(rows.size()));
  for (const auto& row : rows) {
    if (row.size() != n)
      throw Error(errc::ragged_grid, "expected " + std::to_string(n) + " columns, got " +
                                         std::to_string(row.size()));
  }

  bool all_numeric = true;
  for (const auto& row : rows) {
    for (const auto& token : row) {
      long long v;
      if (!parse_int(token, v)) {
        all_numeric = false;
        break;
      }
    }
    if (!all_numeric) break;
  }

  std::vector<int> grid;
  grid.reserve(n * n);
  std::vector<std::string> names;
  if (all_numeric) {
    for (const auto& row : rows) {
      for (const auto& token : row) {
        long long v = 0;
        parse_int(token, v);
        if (v < 1 || v > static_cast<long long>(n))
          throw Error(errc::symbol_out_of_range,
                      "symbol " + token + " not in 1.." + std::to_string(n));
        grid.push_back(static_cast<int>(v));
      }
    }
  } else {
    // symbolic tokens: number them 1..n in order of first appearance
    std::unordered_map<std::string, int> index;
    for (const auto& row : rows) {
      for (const auto& token : row) {
        auto [it, inserted] = index.try_emplace(token, static_cast<int>(names.size()) + 1);
        if (inserted) {
          if (names.size() == n)
            throw Error(errc::symbol_out_of_range,
                        "more than " + std::to_string(n) + " distinct symbols ('" + token + "')");
          names.push_back(token);
        }
        grid.push_back(it->second);
      }
    }
  }
  return LatinSquare(static_cast<int>(n), std::move(grid), std::move(names));
}

LatinSquare LatinSquare::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string LatinSquare::symbol_name(int s) const {
  check_symbol(s);
  if (names_.empty()) return std::to_string(s);
  return names_[static_cast<size_t>(s - 1)];
}

std::string LatinSquare::to_text() const {
  std::string out;
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) {
      if (c > 1) out.push_back(' ');
      out += symbol_name(grid_[static_cast<size_t>(r - 1) * n_ + (c - 1)]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace lsq
