#include <doctest.h>

#include "quartjac/intpoly.hpp"
#include "support/oracles.hpp"

using namespace quartjac;

TEST_CASE("multiplication and composition") {
  IntPoly xp1 = IntPoly::from_coeffs({1, 1});
  IntPoly xm1 = IntPoly::from_coeffs({-1, 1});
  CHECK(xp1 * xm1 == IntPoly::from_coeffs({-1, 0, 1}));

  IntPoly sq = IntPoly::from_coeffs({0, 0, 1});
  CHECK(sq.compose(xp1) == IntPoly::from_coeffs({1, 2, 1}));
}

TEST_CASE("exact division") {
  IntPoly p = IntPoly::from_coeffs({-1, 0, 1});
  CHECK(p.exact_divide(IntPoly::from_coeffs({1, 1})) == IntPoly::from_coeffs({-1, 1}));
  CHECK_THROWS_AS(p.exact_divide(IntPoly::from_coeffs({2, 1})), domain_error);
  // non-monic divisor, exact case
  IntPoly q = IntPoly::from_coeffs({0, 2, 2});
  CHECK(q.exact_divide(IntPoly::from_coeffs({0, 2})) == IntPoly::from_coeffs({1, 1}));
}

TEST_CASE("gcd and squarefree part") {
  IntPoly a = IntPoly::from_coeffs({-1, 0, 1});  // (x-1)(x+1)
  IntPoly b = IntPoly::from_coeffs({-1, 1});     // x-1
  CHECK(IntPoly::gcd(a * b, b) == b);
  IntPoly sq = b * b * IntPoly::from_coeffs({1, 1});
  CHECK(sq.squarefree_part() == a);
  // content handling
  IntPoly scaled = a.scaled(6);
  CHECK(scaled.content() == 6);
  CHECK(scaled.primitive_part() == a);
}

TEST_CASE("rendering") {
  IntPoly f({mpz_class(14670139392L), mpz_class(-4834944), mpz_class(1)});
  CHECK(f.to_string() == "x^2 - 4834944*x + 14670139392");
  CHECK(IntPoly::from_coeffs({-8000, 1}).to_string() == "x - 8000");
  CHECK(IntPoly::from_coeffs({0, -1, 0, 2}).to_string() == "2*x^3 - x");
  CHECK(IntPoly().to_string() == "0");
  CHECK(IntPoly::constant(-5).to_string() == "-5");
}

TEST_CASE("coefficient strings round trip") {
  IntPoly f = IntPoly::from_coeffs({-207, -396, 342, 276, 1});
  CHECK(IntPoly::from_coeff_strings(f.coeff_strings()) == f);
}

TEST_CASE("signs at rationals") {
  IntPoly p = IntPoly::from_coeffs({-2, 0, 1});  // x^2 - 2
  CHECK(p.sign_at(mpq_class(1)) == -1);
  CHECK(p.sign_at(mpq_class(3, 2)) == 1);
  CHECK(p.sign_at(mpq_class(0)) == -1);
  IntPoly q = IntPoly::from_coeffs({-1, 2});  // 2x - 1
  CHECK(q.sign_at(mpq_class(1, 2)) == 0);
}
