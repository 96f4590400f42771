#include <doctest.h>

#include "quartjac/realball.hpp"
#include "support/oracles.hpp"

using namespace quartjac;

TEST_CASE("exact integer arithmetic") {
  RealBall one = RealBall::exact_int(1, 64);
  RealBall two = RealBall::exact_int(2, 64);
  RealBall three = one + two;
  CHECK(three.contains(mpq_class(3)));
  CHECK(three.radius() <= mpq_class(1, mpz_class(1) << 50));
}

TEST_CASE("interval product contains the exact image") {
  RealBall x = RealBall::from_interval(mpq_class(9, 10), mpq_class(11, 10), 64);
  RealBall p = x * x;
  CHECK(p.contains(mpq_class(81, 100)));
  CHECK(p.contains(mpq_class(121, 100)));
  CHECK(p.contains(mpq_class(1)));
}

TEST_CASE("division by an interval containing zero fails") {
  RealBall one = RealBall::exact_int(1, 64);
  RealBall z = RealBall::from_interval(mpq_class(-1, 2), mpq_class(1, 2), 64);
  CHECK_THROWS_AS(one / z, undecidable_error);
}

TEST_CASE("sqrt") {
  RealBall four = RealBall::exact_int(4, 64);
  RealBall r = four.sqrt();
  CHECK(r.contains(mpq_class(2)));
  CHECK(r.radius_log2() < -50);

  RealBall two = RealBall::exact_int(2, 64);
  RealBall s = two.sqrt();
  // 1.41421356... to better than 2^-60 at 64 bits
  mpq_class approx("131836323"); // floor(sqrt(2) * 2^26) numerator scheme below
  (void)approx;
  CHECK(s.radius_log2() < -60);
  mpq_class lo = s.lower(), hi = s.upper();
  CHECK(lo * lo <= 2);
  CHECK(hi * hi >= 2);

  RealBall neg = RealBall::exact_int(-1, 64);
  CHECK_THROWS_AS(neg.sqrt(), domain_error);
}

TEST_CASE("exp and pi") {
  RealBall zero = RealBall::exact_int(0, 64);
  CHECK(zero.exp().contains(mpq_class(1)));

  RealBall pi = RealBall::pi(64);
  CHECK(pi.contains(mpq_class("5707963267948966209") / mpq_class("1816733566638923863")) == false);
  // 3.14159265358979 < pi < 3.1415926535898
  CHECK(pi.lower() > mpq_class(314159265358979L, 100000000000000L));
  CHECK(pi.upper() < mpq_class(314159265358980L, 100000000000000L));
}

TEST_CASE("certify_compare") {
  RealBall a = RealBall::from_interval(mpq_class(9, 10), mpq_class(11, 10), 64);
  RealBall b = RealBall::from_interval(mpq_class(19, 10), mpq_class(21, 10), 64);
  CHECK(certify_compare(a, b) == Order::Less);
  CHECK(certify_compare(b, a) == Order::Greater);
  RealBall c = RealBall::from_interval(mpq_class(1, 2), mpq_class(17, 10), 64);
  CHECK(certify_compare(a, c) == Order::Overlap);
}

TEST_CASE("containment monotonicity across precision") {
  // same expression DAG at 64 and 256 bits: higher-precision interval is
  // inside the lower-precision one (plus nothing)
  auto eval = [](Precision p) {
    RealBall x = RealBall::from_mpq(mpq_class(7, 3), p);
    RealBall y = (x.sqrt() + RealBall::pi(p)).exp();
    return y * y - x / RealBall::exact_int(5, p);
  };
  RealBall lo = eval(64), hi = eval(256);
  // higher precision stays within the lower-precision interval widened by
  // its own radius
  mpq_class slack = lo.radius();
  CHECK(hi.lower() >= lo.lower() - slack);
  CHECK(hi.upper() <= lo.upper() + slack);
  CHECK(hi.radius() <= lo.radius());
}

TEST_CASE("ball polynomial evaluation agrees with exact rational evaluation") {
  test::Rng rng;
  IntPoly p = IntPoly::from_coeffs({-7, 0, 3, 1, -2, 5});
  for (int trial = 0; trial < 1000; ++trial) {
    mpq_class x = rng.rational(50, 40);
    mpq_class exact = p.eval(x);
    RealBall ball = p.eval_ball(RealBall::from_mpq(x, 128));
    CHECK(ball.contains(exact));
  }
}

TEST_CASE("pinned decimal printing") {
  RealBall x = RealBall::from_interval(mpq_class(12345, 10000), mpq_class(12346, 10000), 64);
  // width 1e-4: at most 3 fractional digits pinned
  std::string s = x.decimal(10);
  CHECK(s.substr(0, 4) == "1.23");
  RealBall tight = RealBall::from_mpq(mpq_class(1, 3), 256);
  CHECK(tight.decimal(12) == "0.333333333333");
  RealBall negative = RealBall::from_mpq(mpq_class(-1, 8), 128);
  CHECK(negative.decimal(4) == "-0.1250");
}

TEST_CASE("complex multiplication and division") {
  Precision p = 128;
  ComplexBall z(RealBall::exact_int(3, p), RealBall::exact_int(4, p));
  ComplexBall w(RealBall::exact_int(1, p), RealBall::exact_int(-2, p));
  ComplexBall prod = z * w;
  CHECK(prod.real().contains(mpq_class(11)));
  CHECK(prod.imag().contains(mpq_class(-2)));
  ComplexBall q = prod / w;
  CHECK(q.real().contains(mpq_class(3)));
  CHECK(q.imag().contains(mpq_class(4)));
}

TEST_CASE("complex sqrt") {
  Precision p = 128;
  ComplexBall z(RealBall::exact_int(3, p), RealBall::exact_int(4, p));
  ComplexBall r = z.sqrt();  // 2 + i
  CHECK(r.real().contains(mpq_class(2)));
  CHECK(r.imag().contains(mpq_class(1)));
  ComplexBall neg(RealBall::exact_int(-4, p), RealBall::exact_int(0, p));
  ComplexBall rn = neg.sqrt();  // principal: 2i
  CHECK(rn.real().contains(mpq_class(0)));
  CHECK(rn.imag().contains(mpq_class(2)));
}
