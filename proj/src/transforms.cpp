#include "lsq/transforms.hpp"

#include <istream>

namespace lsq {

namespace {

int component_index(char letter) {
  switch (letter) {
    case 'r': return 1;
    case 'c': return 2;
    case 'e': return 3;
    default:
      throw Error(errc::bad_conjugacy_word, std::string("unknown letter '") + letter + "'");
  }
}

std::array<int, 3> permute(const std::array<int, 3>& to, int r, int c, int e) {
  std::array<int, 3> out{};
  out[static_cast<size_t>(to[0] - 1)] = r;
  out[static_cast<size_t>(to[1] - 1)] = c;
  out[static_cast<size_t>(to[2] - 1)] = e;
  return out;
}

}  // namespace

Conjugacy Conjugacy::parse(const std::string& word) {
  if (word.size() == 2) {
    // transposition shorthand: swap the two named positions
    int a = component_index(word[0]);
    int b = component_index(word[1]);
    if (a == b) throw Error(errc::bad_conjugacy_word, "repeated letter in '" + word + "'");
    Conjugacy conj;
    std::swap(conj.to[static_cast<size_t>(a - 1)], conj.to[static_cast<size_t>(b - 1)]);
    return conj;
  }
  if (word.size() != 3)
    throw Error(errc::bad_conjugacy_word, "expected 2 or 3 letters, got '" + word + "'");
  // one-line notation: position k reads component word[k], so component
  // word[k] moves to position k
  Conjugacy conj;
  std::array<bool, 3> used{};
  for (int k = 0; k < 3; ++k) {
    int comp = component_index(word[static_cast<size_t>(k)]);
    if (used[static_cast<size_t>(comp - 1)])
      throw Error(errc::bad_conjugacy_word, "repeated letter in '" + word + "'");
    used[static_cast<size_t>(comp - 1)] = true;
    conj.to[static_cast<size_t>(comp - 1)] = k + 1;
  }
  return conj;
}

std::string Conjugacy::to_word() const {
  const char letters[3] = {'r', 'c', 'e'};
  std::string word(3, '?');
  for (int i = 0; i < 3; ++i) word[static_cast<size_t>(to[static_cast<size_t>(i)] - 1)] = letters[i];
  return word;
}

LatinSquare apply_isotopy(const LatinSquare& square, const Isotopy& iso) {
  const int n = square.order();
  if (iso.rows.degree() != n || iso.cols.degree() != n || iso.entries.degree() != n)
    throw Error(errc::bad_permutation, "isotopy degree does not match the square order");
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      rows[static_cast<size_t>(iso.rows(r) - 1)][static_cast<size_t>(iso.cols(c) - 1)] =
          iso.entries(square.product(r, c));
  return LatinSquare::from_rows(rows);
}

LatinSquare apply_conjugacy(const LatinSquare& square, const Conjugacy& conj) {
  const int n = square.order();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (const Point& p : orthogonal_array(square)) {
    auto t = permute(conj.to, p.row, p.col, p.entry);
    rows[static_cast<size_t>(t[0] - 1)][static_cast<size_t>(t[1] - 1)] = t[2];
  }
  return LatinSquare::from_rows(rows);
}

Point map_base_point(const LatinSquare& square, const Point& p, const Isotopy& iso) {
  check_point(square, p);
  return Point{iso.rows(p.row), iso.cols(p.col), iso.entries(p.entry)};
}

Point map_base_point(const LatinSquare& square, const Point& p, const Conjugacy& conj) {
  check_point(square, p);
  auto t = permute(conj.to, p.row, p.col, p.entry);
  return Point{t[0], t[1], t[2]};
}

Isotopy parse_isotopy(std::istream& in, int degree) {
  std::array<std::string, 3> lines;
  int have = 0;
  std::string line;
  while (have < 3 && std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    lines[static_cast<size_t>(have++)] = line;
  }
  if (have < 3)
    throw Error(errc::bad_permutation, "isotopy file needs three permutation lines");
  return Isotopy{Permutation::parse(lines[0], degree), Permutation::parse(lines[1], degree),
                 Permutation::parse(lines[2], degree)};
}

}  // namespace lsq
