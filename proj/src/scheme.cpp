#include "lsq/scheme.hpp"

#include <string>

namespace lsq {

Point base_point(const LatinSquare& square, int row, int col) {
  return Point{row, col, square.product(row, col)};
}

void check_point(const LatinSquare& square, const Point& p) {
  const int n = square.order();
  if (p.row < 1 || p.row > n || p.col < 1 || p.col > n || p.entry < 1 || p.entry > n ||
      square.product(p.row, p.col) != p.entry)
    throw Error(errc::point_not_in_array,
                "(" + std::to_string(p.row) + "," + std::to_string(p.col) + "," +
                    std::to_string(p.entry) + ") is not a point of the array");
}

std::vector<Point> orthogonal_array(const LatinSquare& square) {
  const int n = square.order();
  std::vector<Point> points;
  points.reserve(static_cast<size_t>(n) * n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) points.push_back(Point{r, c, square.product(r, c)});
  return points;
}

int relation_of(const Point& x, const Point& y) {
  int agree = (x.row == y.row) + (x.col == y.col) + (x.entry == y.entry);
  switch (agree) {
    case 3: return 0;
    case 0: return 4;
    case 1:
      if (x.row == y.row) return 1;
      if (x.col == y.col) return 2;
      return 3;
    default:
      throw Error(errc::two_component_agreement,
                  "points agree in exactly two components; the array is corrupted");
  }
}

long long IntersectionTensor::valency(int i) const {
  const long long n = order;
  switch (i) {
    case 0: return 1;
    case 4: return (n - 1) * (n - 2);
    default: return n - 1;
  }
}

IntersectionTensor intersection_numbers(const LatinSquare& square) {
  const int n = square.order();
  if (n < 2) throw Error(errc::order_too_small, "intersection numbers need order >= 2");
  const auto points = orthogonal_array(square);
  const size_t count = points.size();

  IntersectionTensor tensor;
  tensor.order = n;

  auto counts_for = [&](size_t xi, size_t yi) {
    std::array<std::array<long long, 5>, 5> counts{};
    for (size_t zi = 0; zi < count; ++zi) {
      int i = relation_of(points[xi], points[zi]);
      int j = relation_of(points[zi], points[yi]);
      ++counts[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return counts;
  };

  // one representative pair per class, row-major scan order
  std::array<bool, 5> seen{};
  int remaining = 5;
  for (size_t xi = 0; xi < count && remaining > 0; ++xi) {
    for (size_t yi = 0; yi < count && remaining > 0; ++yi) {
      int h = relation_of(points[xi], points[yi]);
      if (seen[static_cast<size_t>(h)]) continue;
      seen[static_cast<size_t>(h)] = true;
      --remaining;
      auto counts = counts_for(xi, yi);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          tensor.p[static_cast<size_t>(h)][static_cast<size_t>(i)][static_cast<size_t>(j)] =
              counts[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }

  // well-definedness: every pair must reproduce its class's counts
  for (size_t xi = 0; xi < count; ++xi) {
    for (size_t yi = 0; yi < count; ++yi) {
      int h = relation_of(points[xi], points[yi]);
      auto counts = counts_for(xi, yi);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          if (counts[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
              tensor.p[static_cast<size_t>(h)][static_cast<size_t>(i)][static_cast<size_t>(j)])
            throw Error(errc::not_well_defined,
                        "pair-dependent intersection count in class " + std::to_string(h));
    }
  }
  return tensor;
}

std::array<std::vector<Point>, 5> subconstituent_partition(const LatinSquare& square,
                                                           const Point& p) {
  check_point(square, p);
  std::array<std::vector<Point>, 5> cells;
  for (const Point& x : orthogonal_array(square))
    cells[static_cast<size_t>(relation_of(p, x))].push_back(x);
  return cells;
}

}  // namespace lsq
