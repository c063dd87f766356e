#include "lsq/subconstituent.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lsq/parallel.hpp"

namespace lsq {

namespace {

SubPermutation from_image(const LatinSquare& square, const Point& p, std::vector<int> image) {
  SubPermutation perm;
  perm.order = square.order();
  perm.excluded_column = p.col;
  perm.image = std::move(image);
  const int n = perm.order;
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  for (int c = 1; c <= n; ++c) {
    if (c == p.col || visited[static_cast<size_t>(c)]) continue;
    std::vector<int> cycle;
    int cur = c;
    do {
      visited[static_cast<size_t>(cur)] = 1;
      cycle.push_back(cur);
      cur = perm.image[static_cast<size_t>(cur - 1)];
    } while (cur != c);
    perm.cycles.push_back(std::move(cycle));
  }
  return perm;
}

}  // namespace

int SubPermutation::apply(int c) const {
  if (c < 1 || c > order || c == excluded_column)
    throw Error(errc::symbol_out_of_range,
                "column " + std::to_string(c) + " is not in the domain of pi");
  return image[static_cast<size_t>(c - 1)];
}

bool SubPermutation::is_identity() const {
  for (const auto& cycle : cycles)
    if (cycle.size() != 1) return false;
  return true;
}

bool SubPermutation::is_involution() const {
  for (const auto& cycle : cycles)
    if (cycle.size() > 2) return false;
  return true;
}

int SubPermutation::fixed_point_count() const {
  int count = 0;
  for (const auto& cycle : cycles)
    if (cycle.size() == 1) ++count;
  return count;
}

std::string SubPermutation::cycle_notation() const {
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out.push_back('(');
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += std::to_string(cycle[i]);
    }
    out.push_back(')');
  }
  return out;
}

int CycleStructure::weighted_sum() const {
  int total = 0;
  for (auto [len, count] : count_by_length) total += len * count;
  return total;
}

int CycleStructure::cycle_count() const {
  int total = 0;
  for (auto [len, count] : count_by_length) total += count;
  return total;
}

std::string CycleStructure::to_string() const {
  if (count_by_length.empty()) return "-";
  std::string out;
  for (auto [len, count] : count_by_length) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(len);
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out;
}

CycleStructure cycle_structure(const SubPermutation& perm) {
  CycleStructure cs;
  for (const auto& cycle : perm.cycles) ++cs.count_by_length[static_cast<int>(cycle.size())];
  return cs;
}

SubPermutation pi_of(const LatinSquare& square, const Point& p) {
  check_point(square, p);
  const int n = square.order();
  std::vector<int> image(static_cast<size_t>(n), 0);
  for (int c = 1; c <= n; ++c) {
    if (c == p.col) continue;
    int x_entry = square.product(p.row, c);
    // y: the point in column c_p carrying the entry of x
    int r = 0;
    for (int row = 1; row <= n; ++row) {
      if (square.product(row, p.col) == x_entry) {
        r = row;
        break;
      }
    }
    // z: the point in row r carrying the base entry
    int c_prime = 0;
    for (int col = 1; col <= n; ++col) {
      if (square.product(r, col) == p.entry) {
        c_prime = col;
        break;
      }
    }
    image[static_cast<size_t>(c - 1)] = c_prime;
  }
  return from_image(square, p, std::move(image));
}

SubPermutation pi_via_division(const LatinSquare& square, const Point& p) {
  check_point(square, p);
  const int n = square.order();
  std::vector<int> image(static_cast<size_t>(n), 0);
  for (int c = 1; c <= n; ++c) {
    if (c == p.col) continue;
    int r = square.right_divide(p.col, square.product(p.row, c));
    image[static_cast<size_t>(c - 1)] = square.left_divide(r, p.entry);
  }
  return from_image(square, p, std::move(image));
}

SubPermutation bol_pi_formula(const LatinSquare& square, const Point& p) {
  check_point(square, p);
  auto rec = loop_properties(square);
  if (!rec.is_right_bol)
    throw Error(errc::not_right_bol, "the table is not a right Bol loop");
  auto loop = loop_structure(square);
  const int n = square.order();
  std::vector<int> image(static_cast<size_t>(n), 0);
  for (int c = 1; c <= n; ++c) {
    if (c == p.col) continue;
    image[static_cast<size_t>(c - 1)] =
        square.product(square.product(p.col, loop->inverse(c)), p.col);
  }
  return from_image(square, p, std::move(image));
}

RootOfUnity RootOfUnity::of(int j, int m) {
  if (m <= 0) throw std::invalid_argument("root of unity needs a positive order");
  j %= m;
  if (j < 0) j += m;
  int g = std::gcd(j, m);
  if (j == 0) return RootOfUnity{0, 1};
  return RootOfUnity{j / g, m / g};
}

std::string RootOfUnity::to_string() const {
  if (num == 0) return "1";
  if (den == 2) return "-1";
  return "e(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

long long ModuleTable::balance() const {
  long long total = 0;
  for (const auto& entry : entries) total += entry.dimension * entry.multiplicity;
  return total;
}

ModuleTable module_table(int order, const CycleStructure& cycles) {
  if (order <= 4)
    throw Error(errc::order_too_small,
                "module table needs order >= 5, got " + std::to_string(order));
  if (cycles.weighted_sum() != order - 1)
    throw std::invalid_argument("cycle lengths must sum to order - 1");

  ModuleTable table;
  table.order = order;
  table.cycle_count = cycles.cycle_count();

  // U = all |C_i|-th roots of unity over the cycles, as reduced fractions
  std::set<RootOfUnity> roots;
  for (auto [len, count] : cycles.count_by_length) {
    (void)count;
    for (int j = 0; j < len; ++j) roots.insert(RootOfUnity::of(j, len));
  }
  table.roots.assign(roots.begin(), roots.end());

  table.entries.push_back({5, 1, module_label::primary, {}});
  table.entries.push_back(
      {1, static_cast<long long>(order) * order - 6 * order + 7, module_label::one_dim, {}});
  for (const RootOfUnity& root : table.roots) {
    if (root.is_one()) continue;
    // multiplicity: cycles whose length the root's order divides
    long long mult = 0;
    for (auto [len, count] : cycles.count_by_length)
      if (len % root.den == 0) mult += count;
    table.entries.push_back({6, mult, module_label::eigenvalue, root});
  }
  if (table.cycle_count > 1)
    table.entries.push_back({6, table.cycle_count - 1, module_label::class_iv, {}});
  return table;
}

std::vector<int> WedderburnSignature::summands() const {
  std::vector<int> out;
  out.push_back(5);
  out.insert(out.end(), static_cast<size_t>(six_count), 6);
  out.push_back(1);
  return out;
}

WedderburnSignature wedderburn_signature(const ModuleTable& table, int cycle_count,
                                         int u_size) {
  if (cycle_count != table.cycle_count ||
      u_size != static_cast<int>(table.roots.size()))
    throw std::invalid_argument("cycle count / |U| do not match the module table");
  WedderburnSignature sig;
  sig.six_count = cycle_count == 1 ? u_size - 1 : u_size;
  // cross-check: the table must contain exactly N six-dimensional classes
  int six_classes = 0;
  for (const auto& entry : table.entries)
    if (entry.dimension == 6) ++six_classes;
  if (six_classes != sig.six_count)
    throw std::logic_error("module table disagrees with the Wedderburn count");
  return sig;
}

FixedPointProfile fixed_point_profile(const LatinSquare& square, int jobs) {
  const int n = square.order();
  if (n < 2) throw Error(errc::order_too_small, "profile needs order >= 2");
  FixedPointProfile profile;
  profile.order = n;
  profile.fixed_counts.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  profile.structures.assign(static_cast<size_t>(n),
                            std::vector<CycleStructure>(static_cast<size_t>(n)));
  parallel_for(n * n, jobs, [&](int cell) {
    const int r = cell / n + 1;
    const int c = cell % n + 1;
    auto perm = pi_of(square, base_point(square, r, c));
    profile.fixed_counts[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] =
        perm.fixed_point_count();
    profile.structures[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] =
        cycle_structure(perm);
  });
  profile.column_constant.assign(static_cast<size_t>(n), true);
  for (int c = 0; c < n; ++c)
    for (int r = 1; r < n; ++r)
      if (profile.structures[static_cast<size_t>(r)][static_cast<size_t>(c)] !=
          profile.structures[0][static_cast<size_t>(c)]) {
        profile.column_constant[static_cast<size_t>(c)] = false;
        break;
      }
  profile.row_constant = std::all_of(profile.column_constant.begin(),
                                     profile.column_constant.end(), [](bool b) { return b; });
  return profile;
}

int moufang_fixed_prediction(const LatinSquare& square) {
  auto rec = loop_properties(square);
  if (!rec.is_moufang) throw Error(errc::not_moufang, "the table is not a Moufang loop");
  auto loop = loop_structure(square);
  return loop->self_inverse_count - 1;
}

IdentityBaseReport identity_base_cycles(const LatinSquare& square) {
  auto loop = loop_structure(square);
  if (!loop) throw Error(errc::not_a_loop, "no two-sided identity element");
  const int n = square.order();
  const int iota = loop->identity;
  auto perm = pi_of(square, base_point(square, iota, iota));

  IdentityBaseReport report;
  report.identity = iota;
  for (int c = 1; c <= n; ++c) {
    if (c == iota) continue;
    IdentityCycleEntry entry;
    entry.element = c;
    for (const auto& cycle : perm.cycles)
      if (std::find(cycle.begin(), cycle.end(), c) != cycle.end())
        entry.cycle_length = static_cast<int>(cycle.size());
    // least k with the (k-1)-fold right inverse of c equal to c^lambda
    int iterate = c;
    int k = 1;
    const int lambda = loop->left_inverse[static_cast<size_t>(c - 1)];
    while (iterate != lambda) {
      iterate = loop->right_inverse[static_cast<size_t>(iterate - 1)];
      ++k;
      if (k > n + 1) throw std::logic_error("right-inverse iteration failed to close");
    }
    entry.rho_iteration_count = k;
    entry.pi_value = perm.apply(c);
    entry.pi_square_fixed = perm.apply(entry.pi_value) == c;
    entry.two_sided = loop->has_two_sided(c);
    report.entries.push_back(entry);
  }
  return report;
}

PiSquareCheck pi_square_criterion(const LatinSquare& square, const Point& p, int c) {
  check_point(square, p);
  if (c == p.col)
    throw Error(errc::symbol_out_of_range, "c must differ from the base column");
  auto rec = loop_properties(square);
  if (!rec.has_rip)
    throw Error(errc::no_rip, std::string("right inverse property unavailable (") +
                                  flag_reason_name(rec.has_rip.reason) + ")");
  auto loop = loop_structure(square);
  auto perm = pi_of(square, p);
  const int pi_c = perm.apply(c);
  const int cp_inv = loop->inverse(p.col);
  PiSquareCheck check;
  check.identity_holds =
      square.product(square.product(square.product(p.row, c), cp_inv), pi_c) ==
      square.product(square.product(square.product(p.row, pi_c), cp_inv), c);
  check.pi_square_fixed = perm.apply(pi_c) == c;
  return check;
}

const char* bol_failure_name(bol_failure failure) {
  switch (failure) {
    case bol_failure::none: return "None";
    case bol_failure::not_a_loop: return "NotALoop";
    case bol_failure::no_rip: return "NoRIP";
    case bol_failure::pi_square_broken: return "PiSquareNotIdentity";
    case bol_failure::pi_formula_broken: return "PiFormulaMismatch";
  }
  return "Unknown";
}

BolCertificate right_bol_certificate(const LatinSquare& square) {
  const int n = square.order();
  auto loop = loop_structure(square);
  if (!loop) return {false, bol_failure::not_a_loop, "no two-sided identity element"};
  if (!loop->all_two_sided())
    return {false, bol_failure::no_rip, "an element lacks a two-sided inverse"};
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (!rip_holds_at(square, *loop, a, b))
        return {false, bol_failure::no_rip,
                "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                    std::to_string(b) + "^-1 != " + std::to_string(a)};
  for (int r = 1; r <= n; ++r) {
    for (int col = 1; col <= n; ++col) {
      const Point p = base_point(square, r, col);
      auto perm = pi_of(square, p);
      for (int c = 1; c <= n; ++c) {
        if (c == col) continue;
        int pi_c = perm.apply(c);
        if (perm.apply(pi_c) != c)
          return {false, bol_failure::pi_square_broken,
                  "pi^2 moves " + std::to_string(c) + " at base (" + std::to_string(r) +
                      "," + std::to_string(col) + ")"};
        int predicted = square.product(square.product(col, loop->inverse(c)), col);
        if (pi_c != predicted)
          return {false, bol_failure::pi_formula_broken,
                  "pi(" + std::to_string(c) + ") != (c_p c^-1) c_p at base (" +
                      std::to_string(r) + "," + std::to_string(col) + ")"};
      }
    }
  }
  // the certificate implies the exhaustive right Bol axiom
  if (!loop_properties(square).is_right_bol)
    throw std::logic_error("certificate contradicts the exhaustive right Bol check");
  return {true, bol_failure::none, ""};
}

}  // namespace lsq
