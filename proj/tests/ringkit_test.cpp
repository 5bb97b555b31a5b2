#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alexdeg/ringkit/int_matrix.hpp"
#include "alexdeg/ringkit/laurent.hpp"
#include "alexdeg/ringkit/laurent_matrix.hpp"
#include "alexdeg/ringkit/rational_function.hpp"
#include "alexdeg/ringkit/unipoly.hpp"
#include "properties.hpp"
#include "test_support.hpp"

using namespace alexdeg::ring;
using alexdeg::testing::poly;

TEST_CASE("lp_mul") {
  CHECK(lp_mul(poly("t1 - 1", 1), poly("t1 + 1", 1)) == poly("t1^2 - 1", 1));
  CHECK(lp_mul(poly("t1 - 1", 2), LaurentPolynomial(2)).is_zero());
  CHECK(lp_mul(poly("t1 - 1", 2), poly("t2 - 1", 2)) == poly("t1*t2 - t1 - t2 + 1", 2));
  CHECK_THROWS_AS(lp_mul(poly("t1", 1), poly("t1", 2)), std::invalid_argument);
}

TEST_CASE("zero coefficients are pruned") {
  auto p = poly("t1 + t2", 2) - poly("t2", 2);
  CHECK(p.size() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
}

TEST_CASE("degree_spread") {
  CHECK(degree_spread(poly("t1*t2*t3 - 1", 3)) == 3);
  CHECK(degree_spread(poly("5*t1^2*t2^-1", 2)) == 0);
  CHECK(degree_spread(poly("t1*t2 - t1 - t2 + 1", 2)) == 2);
  CHECK_THROWS_AS(degree_spread(LaurentPolynomial(2)), std::domain_error);
}

TEST_CASE("rendering is graded lex descending") {
  CHECK(poly("1 - t3 + t2*t3*t1", 3).to_string() == "t1*t2*t3 - t3 + 1");
  CHECK(poly("-1 + t1*t2*t3", 3).to_string() == "t1*t2*t3 - 1");
  CHECK(poly("t1^2 - t1 + 1", 1).to_string() == "t1^2 - t1 + 1");
  CHECK(poly("-3*t1^-1*t2", 2).to_string() == "-3*t1^-1*t2");
  CHECK(LaurentPolynomial(2).to_string() == "0");
}

TEST_CASE("laurent_gcd examples") {
  const LaurentPolynomial a[] = {poly("1 - t2", 2), poly("t1 - 1", 2)};
  CHECK(laurent_gcd(a) == poly("1", 2));

  const auto p = poly("t1^3*t2^-1 - 2*t1*t2^-1", 2);
  const LaurentPolynomial b[] = {LaurentPolynomial(2), p};
  CHECK(laurent_gcd(b) == normalize_unit(p));
  CHECK(laurent_gcd(b) == poly("t1^2 - 2", 2));

  const auto x = poly("t1 - 1", 2), y = poly("t2 - 1", 2);
  const LaurentPolynomial c[] = {x * x * y, x * y * y};
  CHECK(laurent_gcd(c) == normalize_unit(x * y));

  const LaurentPolynomial zeros[] = {LaurentPolynomial(2), LaurentPolynomial(2)};
  CHECK(laurent_gcd(zeros).is_zero());
  CHECK_THROWS_AS(laurent_gcd(std::span<const LaurentPolynomial>{}), std::invalid_argument);
}

TEST_CASE("laurent_gcd keeps integer content and strips units") {
  CHECK(laurent_gcd(poly("6*t1 - 6", 1), poly("4*t1^2 - 4", 1)) == poly("2*t1 - 2", 1));
  CHECK(laurent_gcd(poly("t1^-3 - t1^-2", 1), poly("t1^5", 1)) == poly("1", 1));
  CHECK(normalize_unit(poly("-t1^2*t2 + t1^3*t2", 2)) == poly("t1 - 1", 2));
}

// Brute-force oracle: every polynomial with support in {0,1}^2 and
// coefficients in {-1,0,1} that divides both inputs must divide the gcd.
TEST_CASE("laurent_gcd against brute-force small divisors") {
  std::mt19937 rng(7);
  std::vector<LaurentPolynomial> candidates;
  for (int code = 1; code < 81; ++code) {
    LaurentPolynomial c(2);
    int k = code;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        c.add_term({a, b}, (k % 3) - 1);
        k /= 3;
      }
    if (!c.is_zero() && !c.is_constant()) candidates.push_back(c);
  }
  for (int s = 0; s < 40; ++s) {
    auto f = alexdeg::testing::random_poly(rng, 2, 2, 0, 1, 1);
    auto p = alexdeg::testing::random_poly(rng, 2, 3, 0, 2, 2);
    auto q = alexdeg::testing::random_poly(rng, 2, 3, 0, 2, 2);
    if (f.is_zero() || p.is_zero() || q.is_zero()) continue;
    auto a = f * p, b = f * q;
    auto g = laurent_gcd(a, b);
    REQUIRE(exact_divide(a, g));
    REQUIRE(exact_divide(b, g));
    for (const auto& c : candidates)
      if (exact_divide(a, c) && exact_divide(b, c)) CHECK(exact_divide(g, c));
  }
}

TEST_CASE("polynomial pair properties (small sample)") {
  CHECK(alexdeg::testing::polynomial_pair_failures(120, 11) == 0);
}

TEST_CASE("exact_divide") {
  auto q = exact_divide(poly("t1^2 - 1", 1), poly("t1 - 1", 1));
  REQUIRE(q);
  CHECK(*q == poly("t1 + 1", 1));
  CHECK_FALSE(exact_divide(poly("t1^2 + 1", 1), poly("t1 - 1", 1)));
  CHECK_FALSE(exact_divide(poly("t1 + 1", 1), poly("2", 1)));
  auto r = exact_divide(poly("t1^-1*t2 - t1^-2", 2), poly("t1*t2 - 1", 2));
  REQUIRE(r);
  CHECK(*r == poly("t1^-2", 2));
  CHECK_THROWS_AS(exact_divide(poly("t1", 1), LaurentPolynomial(1)), std::domain_error);
}

TEST_CASE("minors") {
  const std::size_t n = 3;
  auto col = laurent_zero_matrix(2, 1, 2);
  col(0, 0) = poly("1 - t2", 2);
  col(1, 0) = poly("t1 - 1", 2);
  auto m1 = minors(col, 1);
  REQUIRE(m1.size() == 2);
  CHECK(m1[0] == poly("1 - t2", 2));
  CHECK(m1[1] == poly("t1 - 1", 2));

  auto diag = laurent_zero_matrix(2, 2, 2);
  diag(0, 0) = poly("t1 + 2", 2);
  diag(1, 1) = poly("t2 - 3", 2);
  auto m2 = minors(diag, 2);
  REQUIRE(m2.size() == 1);
  CHECK(m2[0] == diag(0, 0) * diag(1, 1));

  // near-pencil of three lines; hand cofactor expansion of each 2x2 minor
  auto np = laurent_zero_matrix(3, 2, n);
  np(0, 0) = poly("1 - t3", n);
  np(1, 1) = poly("1 - t3", n);
  np(2, 0) = poly("t1 - 1", n);
  np(2, 1) = poly("t2 - 1", n);
  auto m3 = minors(np, 2);
  REQUIRE(m3.size() == 3);
  CHECK(m3[0] == poly("1 - t3", n) * poly("1 - t3", n));
  CHECK(m3[1] == poly("1 - t3", n) * poly("t2 - 1", n));
  CHECK(m3[2] == -(poly("1 - t3", n) * poly("t1 - 1", n)));

  CHECK_THROWS_AS(minors(np, 3), std::out_of_range);
  CHECK_THROWS_AS(minors(np, 0), std::out_of_range);
}

TEST_CASE("determinant: Laplace and Bareiss agree") {
  std::mt19937 rng(3);
  for (int s = 0; s < 5; ++s) {
    const std::size_t k = 4;
    auto m = laurent_zero_matrix(k, k, 2);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = alexdeg::testing::random_poly(rng, 2, 2, -1, 1, 2);
    // embed into a 13x13 block matrix with an identity block to force Bareiss
    auto big = laurent_zero_matrix(13, 13, 2);
    for (std::size_t i = 0; i < 13; ++i) big(i, i) = poly("1", 2);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) big(i, j) = m(i, j);
    CHECK(determinant(big) == determinant(m));
  }
}

TEST_CASE("smith_normal_form_int examples") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(1, 1) = 3;
  auto snf = smith_normal_form_int(m);
  CHECK(snf.diagonal(0, 0) == 1);
  CHECK(snf.diagonal(1, 1) == 6);
  CHECK(snf.left * m * snf.right == snf.diagonal);

  IntMatrix z(3, 2);
  auto zs = smith_normal_form_int(z);
  CHECK(zs.diagonal == z);
  CHECK(zs.rank == 0);

  auto id = int_identity(4);
  CHECK(smith_normal_form_int(id).diagonal == id);
}

TEST_CASE("smith_normal_form_int properties (small sample)") {
  CHECK(alexdeg::testing::smith_failures(60, 5) == 0);
}

TEST_CASE("rational functions are reduced and canonical") {
  const std::size_t k = 2;
  RationalFunction a(poly("t1^2 - 1", k), poly("t1 - 1", k));
  CHECK(a == RationalFunction(poly("t1 + 1", k)));
  RationalFunction b(poly("2*t1", k), poly("-4*t1*t2", k));
  CHECK(b.den() == poly("2", k));
  CHECK(b.num() == poly("-t2^-1", k));
  CHECK((a - a).is_zero());
  CHECK((b / b).is_one());
  CHECK(b * b.inverse() == RationalFunction::integer(k, 1));
  CHECK_THROWS_AS(RationalFunction(poly("1", k), LaurentPolynomial(k)), std::domain_error);
  CHECK_THROWS_AS(RationalFunction(k).inverse(), std::domain_error);
}

TEST_CASE("rational function field axioms on random samples") {
  std::mt19937 rng(17);
  auto rnd = [&] {
    LaurentPolynomial n(2), d(2);
    while (n.is_zero()) n = alexdeg::testing::random_poly(rng, 2, 3, -1, 2, 3);
    while (d.is_zero()) d = alexdeg::testing::random_poly(rng, 2, 3, -1, 2, 3);
    return RationalFunction(n, d);
  };
  for (int s = 0; s < 25; ++s) {
    auto x = rnd(), y = rnd(), z = rnd();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * x.inverse()).is_one());
  }
}

TEST_CASE("grade_substitute") {
  const std::int64_t ones2[] = {1, 1};
  auto g = grade_substitute(poly("t1*t2 - 1", 2), ones2, 0);
  // u2 * t^2 - 1 over the field in one variable
  CHECK(g == UniPoly(0, {RationalFunction::integer(1, -1), RationalFunction(1),
                         RationalFunction(poly("t1", 1))}));

  const std::int64_t ones3[] = {1, 1, 1};
  auto c = grade_substitute(poly("7", 3), ones3, 0);
  CHECK(c == UniPoly::constant(RationalFunction::integer(2, 7)));

  auto t = grade_substitute(poly("t1 - 1", 3), ones3, 0);
  CHECK(t == UniPoly(0, {RationalFunction::integer(2, -1), RationalFunction::integer(2, 1)}));

  const std::int64_t bad[] = {2, 1};
  CHECK_THROWS_AS(grade_substitute(poly("t1", 2), bad, 0), std::invalid_argument);
}

TEST_CASE("grade_substitute with all-ones grading preserves degree") {
  std::mt19937 rng(23);
  const std::int64_t ones[] = {1, 1, 1};
  for (int s = 0; s < 100; ++s) {
    auto p = alexdeg::testing::random_poly(rng, 3, 5, -2, 2, 4);
    if (p.is_zero()) continue;
    for (std::size_t d = 0; d < 3; ++d) CHECK(grade_substitute(p, ones, d).degree() == degree_spread(p));
  }
}

TEST_CASE("diagonalize_over_pid examples") {
  const std::size_t k = 1;
  auto one = RationalFunction::integer(k, 1);
  auto t_minus_1 = UniPoly(0, {RationalFunction::integer(k, -1), one});

  UniPolyMatrix d(2, 2, UniPoly(k));
  d(0, 0) = t_minus_1;
  d(1, 1) = UniPoly::constant(one);
  auto f = diagonalize_over_pid(d);
  CHECK(f.free_rank == 0);
  REQUIRE(f.torsion_factors().size() == 1);
  CHECK(f.torsion_factors()[0] == t_minus_1);
  CHECK(f.factors.size() == 2);

  // (1 - u t, t - 1): coprime over K[t] since u is transcendental
  UniPolyMatrix col(2, 1, UniPoly(k));
  col(0, 0) = UniPoly(0, {one, RationalFunction(-poly("t1", k))});
  col(1, 0) = t_minus_1;
  auto c = diagonalize_over_pid(col);
  CHECK(c.free_rank == 1);
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].is_unit());
  CHECK(c.torsion_factors().empty());

  UniPolyMatrix empty(2, 0, UniPoly(k));
  auto e = diagonalize_over_pid(empty);
  CHECK(e.free_rank == 2);
  CHECK(e.factors.empty());
}

TEST_CASE("diagonalize_over_pid: product of factors is the maximal-minor gcd") {
  // over K = Q (no field variables)
  auto c = [](long v) { return RationalFunction::integer(0, v); };
  auto up = [](std::vector<RationalFunction> cs) { return UniPoly(0, std::move(cs)); };
  UniPolyMatrix m(2, 2, UniPoly(0));
  m(0, 0) = up({c(-1), c(1)});          // t - 1
  m(0, 1) = up({c(1), c(0), c(-1)});    // 1 - t^2
  m(1, 0) = up({c(0), c(1)});           // t
  m(1, 1) = up({c(2), c(2)});           // 2 + 2t
  auto f = diagonalize_over_pid(m);
  CHECK(f.free_rank == 0);
  REQUIRE(f.factors.size() == 2);
  auto det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  CHECK((f.factors[0] * f.factors[1]).normalized() == det.normalized());
  CHECK(divmod(f.factors[1], f.factors[0]).second.is_zero());
}
