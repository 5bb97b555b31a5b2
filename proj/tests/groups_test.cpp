#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alexdeg/groups/presentation.hpp"

using namespace alexdeg::groups;

namespace {

Word w(std::initializer_list<std::pair<std::size_t, int>> ls) {
  std::vector<Letter> v;
  for (auto [g, s] : ls) v.push_back({g, s});
  return Word(v);
}

Word random_word(std::mt19937_64& rng, std::size_t gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, gens - 1);
  std::bernoulli_distribution sign;
  std::vector<Letter> ls;
  for (std::size_t i = len(rng); i > 0; --i) ls.push_back({gen(rng), sign(rng) ? 1 : -1});
  return Word(ls);
}

Presentation pencil(std::size_t m) {
  Word twist;
  for (std::size_t i = m; i > 0; --i) twist = twist * Word::generator(i - 1);
  std::vector<Word> rels;
  for (std::size_t i = 0; i + 1 < m; ++i) rels.push_back(commutator(Word::generator(i), twist));
  return make_presentation(m, rels);
}

}  // namespace

TEST_CASE("parse commutator presentation") {
  auto p = parse_presentation("gens: a b\nrel: a b a^-1 b^-1");
  REQUIRE(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == commutator(Word::generator(0), Word::generator(1)));
  CHECK(p.meridians == std::vector<bool>{true, true});
}

TEST_CASE("parse free group and trefoil") {
  auto f1 = parse_presentation("gens: a\n");
  CHECK(f1.num_generators() == 1);
  CHECK(f1.relators.empty());

  auto t = parse_presentation("# trefoil\ngens: a b\nrel: a b a b^-1 a^-1 b^-1\n");
  CHECK(t.relators[0] == w({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}));
}

TEST_CASE("parse exponents, comments and meridians") {
  auto p = parse_presentation("gens: x y z  # three\nrel: x^3 y^-2 y^2 x^+1\nmeridians: x z\n");
  CHECK(p.relators[0] == Word::generator(0, 4));
  CHECK(p.meridians == std::vector<bool>{true, false, true});
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a^"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a^x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a^1.5"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens:"), ParseError);
  CHECK_THROWS_AS(parse_presentation("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rel: a\ngens: a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nfoo: a"), ParseError);
  try {
    parse_presentation("gens: a\n\nrel: a c\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce({{0, 1}, {0, -1}}).empty());
  CHECK(free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, 1}}) == std::vector<Letter>{{0, 1}, {0, 1}});
  std::vector<Letter> reduced{{0, 1}, {1, -1}, {0, 1}};
  CHECK(free_reduce(reduced) == reduced);
  CHECK(free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());
}

TEST_CASE("free_reduce is idempotent and length-nonincreasing") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> gen(0, 2);
  std::bernoulli_distribution sign;
  for (int i = 0; i < 300; ++i) {
    std::vector<Letter> ls;
    for (int k = 0; k < 15; ++k) ls.push_back({gen(rng), sign(rng) ? 1 : -1});
    auto r = free_reduce(ls);
    CHECK(r.size() <= ls.size());
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("word algebra") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Word a = random_word(rng, 3, 8), b = random_word(rng, 3, 8), c = random_word(rng, 3, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == a.inverse() * a.inverse());
  }
}

TEST_CASE("abelianize commutator group") {
  auto ab = abelianize(parse_presentation("gens: a b\nrel: a b a^-1 b^-1"));
  CHECK(ab.rank == 2);
  CHECK_FALSE(ab.torsion_detected);
  CHECK(ab.meridian_basis);
  CHECK(ab.quotient_map == alexdeg::ring::int_identity(2));
  CHECK(ab.psi == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("abelianize free groups") {
  for (std::size_t m = 1; m <= 5; ++m) {
    auto ab = abelianize(make_presentation(m, {}));
    CHECK(ab.rank == m);
    CHECK(ab.quotient_map == alexdeg::ring::int_identity(m));
    CHECK(ab.psi == std::vector<std::int64_t>(m, 1));
  }
}

TEST_CASE("abelianize trefoil") {
  auto ab = abelianize(parse_presentation("gens: a b\nrel: a b a b^-1 a^-1 b^-1"));
  CHECK(ab.rank == 1);
  CHECK_FALSE(ab.torsion_detected);
  CHECK(ab.meridian_basis);
  CHECK(ab.quotient_map(0, 0) == 1);
  CHECK(ab.quotient_map(0, 1) == 1);
  CHECK(ab.psi == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("abelianize flags torsion") {
  auto ab = abelianize(parse_presentation("gens: a b\nrel: a^2\nrel: a b a^-1 b^-1"));
  CHECK(ab.torsion_detected);
  CHECK(ab.rank == 1);
  CHECK(ab.quotient_map(0, 0) == 0);
}

TEST_CASE("relators map to zero") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> rels;
    for (int k = 0; k < 2; ++k) rels.push_back(random_word(rng, 3, 10));
    auto p = make_presentation(3, rels);
    auto ab = abelianize(p);
    for (const auto& r : p.relators) CHECK(ab.image(r) == std::vector<std::int64_t>(ab.rank, 0));
  }
  for (std::size_t m = 3; m <= 6; ++m) {
    auto p = pencil(m);
    auto ab = abelianize(p);
    CHECK(ab.rank == m);
    for (const auto& r : p.relators) CHECK(ab.image(r) == std::vector<std::int64_t>(m, 0));
  }
}

TEST_CASE("parse round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> rels;
    for (int k = 0; k < 3; ++k) rels.push_back(random_word(rng, 4, 12));
    auto p = make_presentation(4, rels, "g");
    p.meridians[i % 4] = false;
    auto text = serialize_presentation(p);
    CHECK(parse_presentation(text) == p);
  }
  auto p = parse_presentation("gens: a b\nrel: a a a b^-1 b^-1");
  CHECK(serialize_presentation(p) == "gens: a b\nrel: a^3 b^-2\n");
}

TEST_CASE("linking vector") {
  auto p = pencil(4);
  auto ab = abelianize(p);
  auto psi = linking_vector(ab);
  for (auto v : psi) CHECK(v == 1);
  Word twist;
  for (std::size_t i = 4; i > 0; --i) twist = twist * Word::generator(i - 1);
  CHECK(linking_number(ab, twist) == 4);
  CHECK(linking_number(ab, Word{}) == 0);
  CHECK(linking_number(ab, Word::generator(2)) == 1);
  CHECK(linking_number(ab, commutator(Word::generator(0), Word::generator(1))) == 0);
}
