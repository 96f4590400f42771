#include <doctest.h>

#include <algorithm>

#include "quartjac/classpoly.hpp"
#include "support/oracles.hpp"

using namespace quartjac;

namespace {

bool overlap(const ComplexBall& x, const ComplexBall& y) {
  return certify_compare(x.real(), y.real()) == Order::Overlap &&
         certify_compare(x.imag(), y.imag()) == Order::Overlap;
}

mpq_class parse_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return mpq_class(mpz_class(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  mpz_class num(digits);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("order validation") {
  CHECK_THROWS_AS(OrderSpec::create(7), domain_error);   // odd
  CHECK_THROWS_AS(OrderSpec::create(12), domain_error);  // not squarefree
  CHECK_THROWS_AS(OrderSpec::create(0), domain_error);
  CHECK(OrderSpec::create(6).disc() == -24);
  CHECK(is_even_squarefree(2));
  CHECK(is_even_squarefree(30));
  CHECK(!is_even_squarefree(18));
}

TEST_CASE("reduced form enumeration matches the naive oracle") {
  for (long m : {2L, 6L, 10L, 30L, 42L, 210L}) {
    auto fast = enumerate_reduced_forms(OrderSpec::create(m));
    auto naive = test::reduced_forms_naive(m);
    std::sort(naive.begin(), naive.end(), [](const FormTriple& x, const FormTriple& y) {
      return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    REQUIRE(fast.size() == naive.size());
    CHECK(fast == naive);
    for (const auto& f : fast) {
      CHECK(f.is_reduced());
      CHECK(f.disc() == -4 * m);
    }
  }
}

TEST_CASE("known class numbers and form sets") {
  auto f6 = enumerate_reduced_forms(OrderSpec::create(6));
  REQUIRE(f6.size() == 2);
  CHECK(f6[0] == FormTriple{1, 0, 6});
  CHECK(f6[1] == FormTriple{2, 0, 3});
  CHECK(enumerate_reduced_forms(OrderSpec::create(30)).size() == 4);
  auto f2 = enumerate_reduced_forms(OrderSpec::create(2));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == FormTriple{1, 0, 2});
}

TEST_CASE("two-torsion forms") {
  OrderSpec m6 = OrderSpec::create(6);
  CHECK(two_torsion_form(m6, 1) == FormTriple{1, 0, 6});
  CHECK(two_torsion_form(m6, 3) == FormTriple{2, 0, 3});
  CHECK(two_torsion_form(m6, 3).disc() == -24);
  OrderSpec m30 = OrderSpec::create(30);
  CHECK(two_torsion_form(m30, 5) == FormTriple{5, 0, 6});
  CHECK(two_torsion_form(m30, 15) == FormTriple{2, 0, 15});
  CHECK_THROWS_AS(two_torsion_form(m6, 2), domain_error);
  CHECK_THROWS_AS(two_torsion_form(m6, 5), domain_error);
}

TEST_CASE("tau of a form") {
  OrderSpec m6 = OrderSpec::create(6);
  ComplexBall t1 = tau_of_form({1, 0, 6}, m6, 128);
  CHECK(t1.real().contains(mpq_class(0)));
  CHECK(t1.imag().square().contains(mpq_class(6)));
  ComplexBall t2 = tau_of_form({2, 0, 3}, m6, 128);
  CHECK(t2.imag().square().contains(mpq_class(6, 4)));  // (sqrt6/2)^2
  OrderSpec m30 = OrderSpec::create(30);
  ComplexBall t5 = tau_of_form({5, 0, 6}, m30, 128);
  CHECK(t5.imag().square().contains(mpq_class(30, 25)));
}

TEST_CASE("j at classical points, cross-checked against the theta oracle") {
  Precision p = 128;
  ComplexBall tau_i(RealBall::exact_int(0, p), RealBall::exact_int(1, p));
  ComplexBall j_i = j_eval(tau_i, 96);
  CHECK(j_i.real().contains(mpq_class(1728)));
  CHECK(j_i.imag().contains(mpq_class(0)));
  CHECK(overlap(j_i, test::j_theta_oracle(tau_i, 96)));

  // rho = (1 + i sqrt 3)/2: j = 0
  ComplexBall tau_rho(RealBall::from_mpq(mpq_class(1, 2), p),
                      RealBall::exact_int(3, p).sqrt() / RealBall::exact_int(2, p));
  ComplexBall j_rho = j_eval(tau_rho, 96);
  CHECK(j_rho.real().contains(mpq_class(0)));
  CHECK(j_rho.imag().contains(mpq_class(0)));
  CHECK(overlap(j_rho, test::j_theta_oracle(tau_rho, 96)));

  // j(i sqrt 2) = 8000
  ComplexBall tau_s2(RealBall::exact_int(0, p), RealBall::exact_int(2, p).sqrt());
  CHECK(j_eval(tau_s2, 96).real().contains(mpq_class(8000)));
}

TEST_CASE("j at i sqrt(6): paper decimals and oracle agreement") {
  Precision p = 160;
  OrderSpec m6 = OrderSpec::create(6);
  ComplexBall tau = tau_of_form({1, 0, 6}, m6, p);
  ComplexBall j = j_eval(tau, 100);
  CHECK(j.radius_log2() < -100);
  mpq_class printed = parse_decimal("4831907.903351340");
  mpq_class tol(1, 1000000000);  // one unit in the last printed place
  CHECK(((j.real() - RealBall::from_mpq(printed, p)).abs().upper() < tol));
  CHECK(overlap(j, test::j_theta_oracle(tau, 100)));

  ComplexBall tau3 = tau_of_form({2, 0, 3}, m6, p);
  ComplexBall j3 = j_eval(tau3, 100);
  mpq_class printed3 = parse_decimal("3036.096648660");
  CHECK(((j3.real() - RealBall::from_mpq(printed3, p)).abs().upper() < tol));
}

TEST_CASE("required precision formula") {
  // ceil(pi sqrt(m) sum(1/a)/ln 2) + 32 + 10 h
  CHECK(required_precision(OrderSpec::create(6)) == 17 + 32 + 20);
  CHECK(required_precision(OrderSpec::create(2)) == 7 + 32 + 10);
  CHECK(required_precision(OrderSpec::create(6)) >= 24);
  CHECK(required_precision(OrderSpec::create(30)) >= 60);
  CHECK(required_precision(OrderSpec::create(2)) >= 45);
}

TEST_CASE("class polynomial m=6 exact") {
  ClassPolyResult r = class_polynomial(OrderSpec::create(6));
  CHECK(r.h == 2);
  CHECK(r.f == IntPoly({mpz_class("14670139392"), mpz_class(-4834944), mpz_class(1)}));
  CHECK(r.residual.upper() < mpq_class(1, 4));
  // f evaluated at each certified j-ball straddles zero
  for (const auto& [form, j] : r.roots) {
    RealBall v = r.f.eval_ball(j.real());
    CHECK(v.contains_zero());
    CHECK(j.imag().contains_zero());
    CHECK(j.real().is_positive());
  }
}

TEST_CASE("class polynomial m=2: j(i sqrt 2) = 8000") {
  ClassPolyResult r = class_polynomial(OrderSpec::create(2));
  CHECK(r.f == IntPoly::from_coeffs({-8000, 1}));
}

TEST_CASE("class polynomial m=30: four real positive roots, straddle check") {
  ClassPolyResult r = class_polynomial(OrderSpec::create(30));
  CHECK(r.h == 4);
  CHECK(r.f.leading() == 1);
  for (const auto& [form, j] : r.roots) {
    CHECK(r.f.eval_ball(j.real()).contains_zero());
    CHECK(j.real().is_positive());
  }
}

TEST_CASE("class polynomial m=34 (classes with b != 0)") {
  // disc -136 has forms (5, +-2, 7); coefficients must still round to
  // integers and the two-torsion j-values stay real roots
  ClassPolyResult r = class_polynomial(OrderSpec::create(34));
  CHECK(r.h == 4);
  bool has_nonzero_b = false;
  for (const auto& [form, j] : r.roots) has_nonzero_b |= form.b != 0;
  CHECK(has_nonzero_b);
  for (const auto& [form, j] : r.roots)
    if (form.b == 0) CHECK(r.f.eval_ball(j.real()).contains_zero());
}
