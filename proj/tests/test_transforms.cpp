#include <doctest.h>

#include <sstream>

#include "lsq/corpus.hpp"
#include "lsq/random_squares.hpp"
#include "lsq/subconstituent.hpp"
#include "lsq/transforms.hpp"

using namespace lsq;

TEST_SUITE("transforms") {

TEST_CASE("identity isotopy leaves the square unchanged") {
  auto square = corpus_entry("fig1").square();
  CHECK(apply_isotopy(square, Isotopy::identity(3)) == square);
}

TEST_CASE("entry rotation of the 3x3 square") {
  auto square = corpus_entry("fig1").square();
  // entries cycled 1 -> 2 -> 3 -> 1
  Isotopy iso{Permutation::identity(3), Permutation::identity(3), Permutation({2, 3, 1})};
  CHECK(apply_isotopy(square, iso) == LatinSquare::parse("2 3 1\n3 1 2\n1 2 3\n"));
}

TEST_CASE("isotopies compose componentwise") {
  auto square = corpus_entry("fig1").square();
  Rng rng(99);
  Isotopy first = random_isotopy(3, rng);
  Isotopy second = random_isotopy(3, rng);
  CHECK(apply_isotopy(apply_isotopy(square, first), second) ==
        apply_isotopy(square, first.then(second)));
}

TEST_CASE("identity conjugacy leaves the square unchanged") {
  auto square = corpus_entry("fig2").square();
  CHECK(apply_conjugacy(square, Conjugacy::identity()) == square);
  CHECK(apply_conjugacy(square, Conjugacy::parse("rce")) == square);
}

TEST_CASE("swapping the first two coordinates transposes the table") {
  auto square = corpus_entry("fig2").square();
  auto transposed = apply_conjugacy(square, Conjugacy::parse("cre"));
  for (int r = 1; r <= 8; ++r)
    for (int c = 1; c <= 8; ++c) CHECK(transposed.product(c, r) == square.product(r, c));
  CHECK(apply_conjugacy(square, Conjugacy::parse("rc")) == transposed);
  CHECK(apply_conjugacy(square, Conjugacy::transpose()) == transposed);
}

TEST_CASE("the transpose of a right Bol table is left Bol") {
  auto square = corpus_entry("fig2").square();
  auto record = loop_properties(square);
  CHECK(record.is_right_bol);
  CHECK(!record.is_left_bol);
  auto transposed = apply_conjugacy(square, Conjugacy::transpose());
  auto flipped = loop_properties(transposed);
  CHECK(flipped.is_left_bol);
  CHECK(!flipped.is_right_bol);
  CHECK(flipped.has_lip);
}

TEST_CASE("conjugacy words round trip") {
  for (const char* word : {"rce", "cre", "rec", "ecr", "cer", "erc"}) {
    Conjugacy conj = Conjugacy::parse(word);
    CHECK(conj.to_word() == word);
  }
  CHECK(Conjugacy::parse("rc").to_word() == "cre");
  CHECK(Conjugacy::parse("re").to_word() == "ecr");
  CHECK_THROWS_AS(Conjugacy::parse("rr"), Error);
  CHECK_THROWS_AS(Conjugacy::parse("rcx"), Error);
  CHECK_THROWS_AS(Conjugacy::parse("r"), Error);
}

TEST_CASE("all six conjugates are valid Latin squares of the same order") {
  auto square = corpus_entry("fig3").square();
  for (const char* word : {"rce", "cre", "rec", "ecr", "cer", "erc"}) {
    auto image = apply_conjugacy(square, Conjugacy::parse(word));
    CHECK(image.order() == square.order());
    CHECK(orthogonal_array(image).size() == 49);
  }
}

TEST_CASE("random isotopies preserve the Latin property and array size") {
  Rng rng(2024);
  for (const char* name : {"fig2", "fig3"}) {
    auto square = corpus_entry(name).square();
    for (int trial = 0; trial < 10; ++trial) {
      auto image = apply_isotopy(square, random_isotopy(square.order(), rng));
      CHECK(image.order() == square.order());
      CHECK(orthogonal_array(image).size() == orthogonal_array(square).size());
    }
  }
}

TEST_CASE("base points map componentwise under isotopies") {
  auto square = corpus_entry("fig1").square();
  Point p = base_point(square, 1, 1);
  CHECK(map_base_point(square, p, Isotopy::identity(3)) == p);
  Isotopy iso{Permutation::identity(3), Permutation::identity(3), Permutation({2, 3, 1})};
  CHECK(map_base_point(square, p, iso) == Point{1, 1, 2});
  CHECK_THROWS_AS(map_base_point(square, Point{1, 1, 3}, iso), Error);
}

TEST_CASE("base points map by coordinate permutation under conjugacies") {
  auto square = corpus_entry("fig2").square();
  Point p = base_point(square, 2, 3);  // (2, 3, 6)
  CHECK(map_base_point(square, p, Conjugacy::transpose()) == Point{3, 2, 6});
  CHECK(map_base_point(square, p, Conjugacy::parse("rec")) == Point{2, 6, 3});
}

TEST_CASE("mapped base points land in the transformed array") {
  Rng rng(5);
  auto square = corpus_entry("fig2").square();
  for (int trial = 0; trial < 5; ++trial) {
    Isotopy iso = random_isotopy(8, rng);
    auto image = apply_isotopy(square, iso);
    for (const Point& p : orthogonal_array(square))
      CHECK_NOTHROW(check_point(image, map_base_point(square, p, iso)));
  }
  for (const char* word : {"rce", "cre", "rec", "ecr", "cer", "erc"}) {
    Conjugacy conj = Conjugacy::parse(word);
    auto image = apply_conjugacy(square, conj);
    for (const Point& p : orthogonal_array(square))
      CHECK_NOTHROW(check_point(image, map_base_point(square, p, conj)));
  }
}

TEST_CASE("cycle structure is invariant at mapped base points") {
  Rng rng(31);
  for (const char* name : {"fig2", "fig3"}) {
    auto square = corpus_entry(name).square();
    const int n = square.order();
    Isotopy iso = random_isotopy(n, rng);
    auto image = apply_isotopy(square, iso);
    for (const Point& p : orthogonal_array(square)) {
      CHECK(cycle_structure(pi_of(square, p)) ==
            cycle_structure(pi_of(image, map_base_point(square, p, iso))));
    }
    for (const char* word : {"cre", "rec", "ecr", "cer", "erc"}) {
      Conjugacy conj = Conjugacy::parse(word);
      auto conjugate = apply_conjugacy(square, conj);
      for (const Point& p : orthogonal_array(square)) {
        CHECK(cycle_structure(pi_of(square, p)) ==
              cycle_structure(pi_of(conjugate, map_base_point(square, p, conj))));
      }
    }
  }
}

TEST_CASE("isotopy files parse as three permutation lines") {
  std::istringstream file("# rows\n2 1 3\n1 2 3\n3 2 1\n");
  Isotopy iso = parse_isotopy(file, 3);
  CHECK(iso.rows(1) == 2);
  CHECK(iso.cols(2) == 2);
  CHECK(iso.entries(1) == 3);
  std::istringstream missing("1 2 3\n1 2 3\n");
  CHECK_THROWS_AS(parse_isotopy(missing, 3), Error);
}

TEST_CASE("loop normalization produces identity 1") {
  Rng rng(77);
  for (int order : {4, 5, 6, 7, 8}) {
    for (int trial = 0; trial < 3; ++trial) {
      auto loop_table = normalize_to_loop(random_latin_square(order, rng));
      auto loop = loop_structure(loop_table);
      REQUIRE(loop.has_value());
      CHECK(loop->identity == 1);
    }
  }
}

}  // TEST_SUITE
