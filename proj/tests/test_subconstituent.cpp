#include <doctest.h>

#include <algorithm>
#include <utility>

#include "lsq/corpus.hpp"
#include "lsq/random_squares.hpp"
#include "lsq/subconstituent.hpp"

using namespace lsq;

namespace {

CycleStructure cycles_of(std::initializer_list<std::pair<int, int>> pairs) {
  CycleStructure cs;
  for (auto [len, count] : pairs) cs.count_by_length[len] = count;
  return cs;
}

}  // namespace

TEST_SUITE("subconstituent") {

TEST_CASE("figure 1 walk gives the transposition (2 3)") {
  auto square = corpus_entry("fig1").square();
  auto perm = pi_of(square, Point{1, 1, 1});
  CHECK(perm.cycle_notation() == "(2 3)");
  CHECK(perm.apply(2) == 3);
  CHECK(perm.apply(3) == 2);
  CHECK(pi_via_division(square, Point{1, 1, 1}) == perm);
}

TEST_CASE("figure 2 walk values") {
  auto square = corpus_entry("fig2").square();
  auto perm = pi_of(square, base_point(square, 1, 2));  // (1, 2, 2)
  CHECK(perm.apply(3) == 5);
  auto at_identity = pi_of(square, Point{1, 1, 1});
  CHECK(at_identity.cycle_notation() == "(2 4)(3 5)(6 7)(8)");
  CHECK(cycle_structure(at_identity).to_string() == "1 2^3");
}

TEST_CASE("pi equals pi-by-division on every corpus base point") {
  for (const auto& entry : corpus()) {
    auto square = entry.square();
    for (const Point& p : orthogonal_array(square))
      CHECK(pi_of(square, p) == pi_via_division(square, p));
  }
}

TEST_CASE("order 1 leaves an empty permutation") {
  auto square = LatinSquare::parse("1");
  auto perm = pi_via_division(square, Point{1, 1, 1});
  CHECK(perm.cycles.empty());
  CHECK(cycle_structure(perm).weighted_sum() == 0);
  CHECK(perm.cycle_notation() == "()");
}

TEST_CASE("cycle ordering starts each cycle at its smallest element") {
  auto square = corpus_entry("fig3").square();
  auto perm = pi_of(square, base_point(square, 3, 1));
  CHECK(perm.cycle_notation() == "(2 6)(3 5)(4 7)");
  CHECK(cycle_structure(perm).to_string() == "2^3");
}

TEST_CASE("cycle structure rendering") {
  CHECK(cycles_of({{1, 7}}).to_string() == "1^7");
  CHECK(cycles_of({{1, 1}, {2, 3}}).to_string() == "1 2^3");
  CHECK(cycles_of({{1, 3}, {2, 2}}).to_string() == "1^3 2^2");
  CHECK(cycles_of({{2, 3}}).to_string() == "2^3");
}

TEST_CASE("roots of unity reduce exactly") {
  CHECK(RootOfUnity::of(0, 4) == RootOfUnity{0, 1});
  CHECK(RootOfUnity::of(2, 4) == RootOfUnity{1, 2});
  CHECK(RootOfUnity::of(2, 6) == RootOfUnity{1, 3});
  CHECK(RootOfUnity::of(3, 6) == RootOfUnity{1, 2});
  CHECK(RootOfUnity::of(1, 2).to_string() == "-1");
  CHECK(RootOfUnity::of(0, 5).to_string() == "1");
  CHECK(RootOfUnity::of(5, 6).to_string() == "e(5/6)");
}

TEST_CASE("module table for order 8 with cycles 1 2^3") {
  auto table = module_table(8, cycles_of({{1, 1}, {2, 3}}));
  CHECK(table.cycle_count == 4);
  REQUIRE(table.roots.size() == 2);  // U = {1, -1}
  REQUIRE(table.entries.size() == 4);
  CHECK(table.entries[0].dimension == 5);
  CHECK(table.entries[0].multiplicity == 1);
  CHECK(table.entries[0].label == module_label::primary);
  CHECK(table.entries[1].dimension == 1);
  CHECK(table.entries[1].multiplicity == 23);  // 64 - 48 + 7
  CHECK(table.entries[2].dimension == 6);
  CHECK(table.entries[2].multiplicity == 3);
  CHECK(table.entries[2].eigenvalue == RootOfUnity{1, 2});
  CHECK(table.entries[3].dimension == 6);
  CHECK(table.entries[3].multiplicity == 3);
  CHECK(table.entries[3].label == module_label::class_iv);
  CHECK(table.balance() == 64);
}

TEST_CASE("module tables for order 7") {
  auto boxed = module_table(7, cycles_of({{2, 3}}));
  CHECK(boxed.balance() == 49);
  REQUIRE(boxed.entries.size() == 4);
  CHECK(boxed.entries[1].multiplicity == 14);
  CHECK(boxed.entries[2].multiplicity == 3);  // eigenvalue -1
  CHECK(boxed.entries[3].multiplicity == 2);  // class (iv), k - 1

  auto other = module_table(7, cycles_of({{1, 4}, {2, 1}}));
  CHECK(other.balance() == 49);
  REQUIRE(other.entries.size() == 4);
  CHECK(other.entries[2].multiplicity == 1);
  CHECK(other.entries[3].multiplicity == 4);
}

TEST_CASE("module table refuses order 4 and below") {
  for (int order : {2, 3, 4}) {
    try {
      module_table(order, cycles_of({{1, order - 1}}));
      FAIL("expected OrderTooSmall");
    } catch (const Error& e) {
      CHECK(e.kind() == errc::order_too_small);
    }
  }
}

TEST_CASE("eigenvalue multiplicities count cycles whose length the order divides") {
  // lengths 2 and 3: U = 1, -1, e(1/3), e(2/3)
  auto table = module_table(6, cycles_of({{2, 1}, {3, 1}}));
  REQUIRE(table.roots.size() == 4);
  long long six_total = 0;
  for (const auto& entry : table.entries)
    if (entry.dimension == 6) six_total += entry.multiplicity;
  // each root other than 1 has multiplicity 1, class (iv) adds k-1 = 1
  CHECK(six_total == 4);
  CHECK(table.balance() == 36);
}

TEST_CASE("wedderburn signatures") {
  auto single_six_cycle = module_table(7, cycles_of({{6, 1}}));
  auto sig = wedderburn_signature(single_six_cycle, 1, 6);
  CHECK(sig.six_count == 5);
  CHECK(sig.algebra_dimension() == 206);

  auto fig2_table = module_table(8, cycles_of({{1, 1}, {2, 3}}));
  auto fig2_sig = wedderburn_signature(fig2_table, 4, 2);
  CHECK(fig2_sig.six_count == 2);
  CHECK(fig2_sig.summands() == std::vector<int>{5, 6, 6, 1});
  CHECK(fig2_sig.algebra_dimension() == 98);

  auto identity_table = module_table(8, cycles_of({{1, 7}}));
  auto identity_sig = wedderburn_signature(identity_table, 7, 1);
  CHECK(identity_sig.six_count == 1);
  CHECK(identity_sig.algebra_dimension() == 62);
}

TEST_CASE("balance identity over every corpus base point of order at least 5") {
  for (const auto& entry : corpus()) {
    auto square = entry.square();
    if (square.order() < 5) continue;
    for (const Point& p : orthogonal_array(square)) {
      auto table = module_table(square.order(), cycle_structure(pi_of(square, p)));
      CHECK(table.balance() == static_cast<long long>(square.order()) * square.order());
    }
  }
}

TEST_CASE("bol formula matches the walk on figure 2 and is an involution") {
  auto square = corpus_entry("fig2").square();
  for (const Point& p : orthogonal_array(square)) {
    auto formula = bol_pi_formula(square, p);
    CHECK(formula == pi_of(square, p));
    CHECK(formula.is_involution());
  }
  // column 8: 1 fixed, (2 4)(3 5)(6 7)
  auto col8 = bol_pi_formula(square, base_point(square, 1, 8));
  CHECK(col8.cycle_notation() == "(1)(2 4)(3 5)(6 7)");
  CHECK(cycle_structure(col8).to_string() == "1 2^3");
  // column 2: fixed 4, 6, 7 and cycles (1 8)(3 5)
  auto col2 = bol_pi_formula(square, base_point(square, 3, 2));
  CHECK(col2.cycle_notation() == "(1 8)(3 5)(4)(6)(7)");
  CHECK(cycle_structure(col2).to_string() == "1^3 2^2");
}

TEST_CASE("bol formula refuses non right Bol tables") {
  auto square = corpus_entry("fig3").square();
  try {
    bol_pi_formula(square, Point{1, 1, 1});
    FAIL("expected NotRightBol");
  } catch (const Error& e) {
    CHECK(e.kind() == errc::not_right_bol);
  }
}

TEST_CASE("figure 2 fixed-point profile") {
  auto square = corpus_entry("fig2").square();
  auto profile = fixed_point_profile(square, 2);
  CHECK(profile.row_constant);
  const std::vector<int> expected{1, 3, 3, 3, 3, 5, 5, 1};
  for (const auto& row : profile.fixed_counts) CHECK(row == expected);
  const std::vector<std::string> structures{"1 2^3", "1^3 2^2", "1^3 2^2", "1^3 2^2",
                                            "1^3 2^2", "1^5 2",   "1^5 2",   "1 2^3"};
  for (int c = 0; c < 8; ++c) {
    CHECK(profile.column_constant[static_cast<size_t>(c)]);
    CHECK(profile.structures[0][static_cast<size_t>(c)].to_string() ==
          structures[static_cast<size_t>(c)]);
  }
}

TEST_CASE("figure 3 profile: zero fixed points exactly on the transversal") {
  const auto& entry = corpus_entry("fig3");
  auto square = entry.square();
  auto profile = fixed_point_profile(square);
  CHECK(!profile.row_constant);
  for (int r = 1; r <= 7; ++r) {
    for (int c = 1; c <= 7; ++c) {
      bool boxed = std::find(entry.marked_cells.begin(), entry.marked_cells.end(),
                             std::make_pair(r, c)) != entry.marked_cells.end();
      int count = profile.fixed_counts[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
      CHECK(count == (boxed ? 0 : 4));
      auto text =
          profile.structures[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)].to_string();
      CHECK(text == (boxed ? "2^3" : "1^4 2"));
    }
  }
  // the boxed cells form a transversal: each row has both values
  for (int c = 0; c < 7; ++c) CHECK(!profile.column_constant[static_cast<size_t>(c)]);
}

TEST_CASE("group tables have constant fixed count s-1") {
  for (const char* name : {"c4", "c5", "c6", "c7", "c8", "z2^3"}) {
    auto square = corpus_entry(name).square();
    int predicted = moufang_fixed_prediction(square);
    auto profile = fixed_point_profile(square);
    for (const auto& row : profile.fixed_counts)
      for (int count : row) CHECK(count == predicted);
  }
  CHECK(moufang_fixed_prediction(corpus_entry("c5").square()) == 0);
  CHECK(moufang_fixed_prediction(corpus_entry("c4").square()) == 1);
  CHECK(moufang_fixed_prediction(corpus_entry("z2^3").square()) == 7);
}

TEST_CASE("moufang prediction refuses non-Moufang tables") {
  try {
    moufang_fixed_prediction(corpus_entry("fig2").square());
    FAIL("expected NotMoufang");
  } catch (const Error& e) {
    CHECK(e.kind() == errc::not_moufang);
  }
}

TEST_CASE("the 2-group's pi is the identity at every base point") {
  auto square = corpus_entry("z2^3").square();
  for (const Point& p : orthogonal_array(square)) {
    auto perm = pi_of(square, p);
    CHECK(perm.is_identity());
    CHECK(cycle_structure(perm).to_string() == "1^7");
  }
}

TEST_CASE("identity-base cycle lengths match the inverse-iteration count") {
  for (const char* name : {"fig1", "fig2", "fig3", "c6", "c8"}) {
    auto square = corpus_entry(name).square();
    auto loop = loop_structure(square);
    auto report = identity_base_cycles(square);
    for (const auto& entry : report.entries) {
      CHECK(entry.cycle_length == entry.rho_iteration_count);
      CHECK(entry.pi_square_fixed == entry.two_sided);
      if (entry.two_sided) CHECK(entry.pi_value == loop->inverse(entry.element));
    }
  }
}

TEST_CASE("identity-base report on figure 2: pi is inversion") {
  auto square = corpus_entry("fig2").square();
  auto loop = loop_structure(square);
  auto report = identity_base_cycles(square);
  CHECK(report.identity == 1);
  REQUIRE(report.entries.size() == 7);
  for (const auto& entry : report.entries) {
    CHECK(entry.two_sided);
    CHECK(entry.cycle_length <= 2);
    CHECK(entry.pi_value == loop->inverse(entry.element));
  }
}

TEST_CASE("identity-base report on figure 3: four fixed and one swap") {
  auto report = identity_base_cycles(corpus_entry("fig3").square());
  int fixed = 0;
  for (const auto& entry : report.entries) {
    CHECK(entry.two_sided);
    if (entry.cycle_length == 1) {
      ++fixed;
      CHECK((entry.element == 2 || entry.element == 4 || entry.element == 6 ||
             entry.element == 7));
    } else {
      CHECK(entry.cycle_length == 2);
      CHECK((entry.element == 3 || entry.element == 5));
      CHECK(entry.pi_value == (entry.element == 3 ? 5 : 3));
    }
  }
  CHECK(fixed == 4);
}

TEST_CASE("identity-base report requires a loop") {
  auto square = LatinSquare::parse("2 3 4 1\n1 2 3 4\n3 4 1 2\n4 1 2 3\n");
  try {
    identity_base_cycles(square);
    FAIL("expected NotALoop");
  } catch (const Error& e) {
    CHECK(e.kind() == errc::not_a_loop);
  }
}

TEST_CASE("pi-square criterion on figure 2") {
  auto square = corpus_entry("fig2").square();
  auto check = pi_square_criterion(square, base_point(square, 1, 2), 3);
  CHECK(check.identity_holds);
  CHECK(check.pi_square_fixed);
  for (const Point& p : orthogonal_array(square)) {
    for (int c = 1; c <= 8; ++c) {
      if (c == p.col) continue;
      auto result = pi_square_criterion(square, p, c);
      CHECK(result.identity_holds);
      CHECK(result.pi_square_fixed);
    }
  }
}

TEST_CASE("pi-square criterion needs the right inverse property") {
  auto square = corpus_entry("fig3").square();
  try {
    pi_square_criterion(square, Point{1, 1, 1}, 2);
    FAIL("expected NoRIP");
  } catch (const Error& e) {
    CHECK(e.kind() == errc::no_rip);
  }
}

TEST_CASE("randomized RIP search: the criterion booleans always agree") {
  auto result = rip_pi_search({5, 6}, 40, 12345);
  CHECK(result.squares_examined == 80);
  CHECK(result.criterion_agreed_everywhere);
  // determinism: the same seed reproduces the same tallies
  auto again = rip_pi_search({5, 6}, 40, 12345);
  CHECK(again.rip_loops_tested == result.rip_loops_tested);
  CHECK(again.involution_violations == result.involution_violations);
}

TEST_CASE("a RIP loop whose pi is not an involution turns both booleans false") {
  // found by rip_pi_search over orders 5..8 with seed 1; frozen here
  auto square = LatinSquare::parse(
      "1 2 3 4 5 6\n"
      "2 3 5 6 1 4\n"
      "3 6 4 5 2 1\n"
      "4 5 2 1 6 3\n"
      "5 1 6 3 4 2\n"
      "6 4 1 2 3 5\n");
  auto record = loop_properties(square);
  REQUIRE(record.has_rip);
  CHECK(!record.is_right_bol);
  int both_false = 0;
  for (const Point& p : orthogonal_array(square)) {
    for (int c = 1; c <= 6; ++c) {
      if (c == p.col) continue;
      auto check = pi_square_criterion(square, p, c);
      CHECK(check.identity_holds == check.pi_square_fixed);
      if (!check.identity_holds && !check.pi_square_fixed) ++both_false;
    }
  }
  CHECK(both_false > 0);
}

TEST_CASE("right Bol certificates") {
  CHECK(right_bol_certificate(corpus_entry("fig2").square()).certified);
  for (const char* name : {"fig1", "c4", "c5", "c6", "c7", "c8", "z2^3"})
    CHECK(right_bol_certificate(corpus_entry(name).square()).certified);

  auto fig3 = right_bol_certificate(corpus_entry("fig3").square());
  CHECK(!fig3.certified);
  CHECK(fig3.failure == bol_failure::no_rip);

  auto no_identity = right_bol_certificate(
      LatinSquare::parse("2 3 4 1\n1 2 3 4\n3 4 1 2\n4 1 2 3\n"));
  CHECK(!no_identity.certified);
  CHECK(no_identity.failure == bol_failure::not_a_loop);
}

TEST_CASE("certificates imply the exhaustive right Bol axiom") {
  for (const auto& entry : corpus()) {
    auto square = entry.square();
    auto certificate = right_bol_certificate(square);
    if (certificate.certified) CHECK(loop_properties(square).is_right_bol);
  }
}

TEST_CASE("Bol tables of order at least 5 only reach N = 1 or 2") {
  auto right_bol = corpus_entry("fig2").square();
  auto left_bol = apply_conjugacy(right_bol, Conjugacy::transpose());
  REQUIRE(loop_properties(left_bol).is_left_bol);
  for (const LatinSquare* square : {&right_bol, &left_bol}) {
    for (const Point& p : orthogonal_array(*square)) {
      auto table = module_table(8, cycle_structure(pi_of(*square, p)));
      auto signature =
          wedderburn_signature(table, table.cycle_count, static_cast<int>(table.roots.size()));
      CHECK((signature.six_count == 1 || signature.six_count == 2));
    }
  }
}

TEST_CASE("random squares: dual-route pi, partition sizes, balance") {
  Rng rng(404);
  for (int order : {5, 6, 7, 8}) {
    auto square = random_latin_square(order, rng);
    auto points = orthogonal_array(square);
    CHECK(static_cast<int>(points.size()) == order * order);
    for (const Point& p : points) {
      auto walk = pi_of(square, p);
      CHECK(walk == pi_via_division(square, p));
      auto cells = subconstituent_partition(square, p);
      CHECK(cells[0].size() == 1);
      CHECK(cells[1].size() == static_cast<size_t>(order - 1));
      CHECK(cells[4].size() == static_cast<size_t>((order - 1) * (order - 2)));
      auto table = module_table(order, cycle_structure(walk));
      CHECK(table.balance() == static_cast<long long>(order) * order);
    }
  }
}

TEST_CASE("right Bol fixed points obey the two-sided comparison") {
  // pi(c) = c exactly when c * c_p^-1 = c_p * c^-1
  auto square = corpus_entry("fig2").square();
  auto loop = loop_structure(square);
  for (const Point& p : orthogonal_array(square)) {
    auto perm = pi_of(square, p);
    for (int c = 1; c <= 8; ++c) {
      if (c == p.col) continue;
      bool fixed = perm.apply(c) == c;
      bool balanced = square.product(c, loop->inverse(p.col)) ==
                      square.product(p.col, loop->inverse(c));
      CHECK(fixed == balanced);
    }
  }
}

}  // TEST_SUITE
