#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alexdeg/foxcalc/fox.hpp"
#include "properties.hpp"
#include "test_support.hpp"

using namespace alexdeg;
using namespace alexdeg::fox;
using groups::Word;
using alexdeg::testing::poly;

namespace {

Word x(std::size_t i, int k = 1) { return Word::generator(i, k); }

GroupRingElement el(const Word& w, long c = 1) { return GroupRingElement::word(w, c); }

}  // namespace

TEST_CASE("fox derivative axioms") {
  CHECK(fox_derivative(Word{}, 0, 2).is_zero());
  CHECK(fox_derivative(x(0), 0, 2) == GroupRingElement::one());
  CHECK(fox_derivative(x(1), 0, 2).is_zero());
  CHECK(fox_derivative(x(0) * x(1), 1, 2) == el(x(0)));
  CHECK_THROWS_AS(fox_derivative(x(0), 2, 2), std::out_of_range);
  CHECK_THROWS_AS(fox_derivative(x(3), 0, 2), std::out_of_range);
}

TEST_CASE("fox derivative of a commutator") {
  Word c = groups::commutator(x(0), x(1));
  CHECK(fox_derivative(c, 0, 2) == GroupRingElement::one() - el(x(0) * x(1) * x(0, -1)));
  CHECK(fox_derivative(c, 1, 2) == el(x(0)) - el(c));
  CHECK(fox_derivative(x(0, -1), 0, 1) == -el(x(0, -1)));
  CHECK(fox_derivative(x(0, 3), 0, 1) == GroupRingElement::one() + el(x(0)) + el(x(0, 2)));
}

TEST_CASE("leibniz and inverse rules") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Word u = testing::random_word(rng, 3, 10), v = testing::random_word(rng, 3, 10);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(fox_derivative(u * v, j, 3) == fox_derivative(u, j, 3) + el(u) * fox_derivative(v, j, 3));
      CHECK(fox_derivative(u.inverse(), j, 3) == -(el(u.inverse()) * fox_derivative(u, j, 3)));
    }
  }
}

TEST_CASE("fundamental identity") {
  CHECK(check_fundamental_identity(Word{}));
  CHECK(check_fundamental_identity(x(0)));
  CHECK(testing::fox_identity_failures(300, 23) == 0);
}

TEST_CASE("alexander matrix of the hopf link") {
  auto p = groups::parse_presentation("gens: a b\nrel: a b a^-1 b^-1");
  auto ab = groups::abelianize(p);
  auto a = alexander_matrix(p, ab);
  REQUIRE(a.entries.rows() == 2);
  REQUIRE(a.entries.cols() == 1);
  CHECK(a.entries(0, 0) == poly("1 - t2", 2));
  CHECK(a.entries(1, 0) == poly("t1 - 1", 2));
  CHECK(columns_annihilate_generators(a, ab));
}

TEST_CASE("alexander matrix of the near pencil of three lines") {
  auto p = groups::make_presentation(3, {groups::commutator(x(0), x(2)), groups::commutator(x(1), x(2))});
  auto ab = groups::abelianize(p);
  auto a = alexander_matrix(p, ab);
  REQUIRE(a.entries.rows() == 3);
  REQUIRE(a.entries.cols() == 2);
  CHECK(a.entries(0, 0) == poly("1 - t3", 3));
  CHECK(a.entries(0, 1).is_zero());
  CHECK(a.entries(1, 0).is_zero());
  CHECK(a.entries(1, 1) == poly("1 - t3", 3));
  CHECK(a.entries(2, 0) == poly("t1 - 1", 3));
  CHECK(a.entries(2, 1) == poly("t2 - 1", 3));
}

TEST_CASE("alexander matrix of a free group is empty") {
  auto p = groups::make_presentation(3, {});
  auto a = alexander_matrix(p, groups::abelianize(p));
  CHECK(a.entries.rows() == 3);
  CHECK(a.entries.cols() == 0);
}

TEST_CASE("scan agrees with abelianized fox derivatives") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    std::vector<Word> rels;
    for (int k = 0; k < 3; ++k) rels.push_back(testing::random_word(rng, 3, 12));
    auto p = groups::make_presentation(3, rels);
    auto ab = groups::abelianize(p);
    auto a = alexander_matrix(p, ab);
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t g = 0; g < 3; ++g)
        CHECK(a.entries(g, c) == abelianize_element(fox_derivative(rels[c], g, 3), ab));
    CHECK(columns_annihilate_generators(a, ab));
  }
}

TEST_CASE("trefoil alexander matrix") {
  auto p = groups::parse_presentation("gens: a b\nrel: a b a b^-1 a^-1 b^-1");
  auto ab = groups::abelianize(p);
  auto a = alexander_matrix(p, ab);
  CHECK(a.entries(0, 0) == poly("1 - t1 + t1^2", 1));
  CHECK(a.entries(1, 0) == poly("t1 - 1 - t1^2", 1));
  CHECK(columns_annihilate_generators(a, ab));
}
