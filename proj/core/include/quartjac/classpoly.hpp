#ifndef QUARTJAC_CLASSPOLY_HPP
#define QUARTJAC_CLASSPOLY_HPP

#include <utility>
#include <vector>

#include "quartjac/intpoly.hpp"
#include "quartjac/realball.hpp"

namespace quartjac {

// The order Z[sqrt(-m)] of discriminant -4m.
struct OrderSpec {
  long m = 0;

  long disc() const { return -4 * m; }
  // Throws domain_error unless m is even, squarefree and >= 2.
  static OrderSpec create(long m);
};

bool is_even_squarefree(long m);

// Reduced positive-definite binary quadratic form a x^2 + b xy + c y^2 of
// discriminant -4m; one per ideal class.
struct FormTriple {
  long a = 1, b = 0, c = 0;

  bool operator==(const FormTriple&) const = default;
  long disc() const { return b * b - 4 * a * c; }
  bool is_reduced() const;
};

// Gauss reduction of a positive-definite form.
FormTriple reduce_form(long a, long b, long c);

// One reduced form per ideal class, sorted; count = h(-4m).
std::vector<FormTriple> enumerate_reduced_forms(const OrderSpec& order);

// Reduced form of the 2-torsion ideal (d, sqrt(-m)), i.e. (d, 0, m/d)
// reduced.  d must be an odd positive divisor of m.
FormTriple two_torsion_form(const OrderSpec& order, long d);

// CM point (-b + 2 i sqrt(m)) / (2a) in the upper half-plane.
ComplexBall tau_of_form(const FormTriple& form, const OrderSpec& order, Precision prec);

// Certified enclosure of j(tau) with radius < 2^-prec, via E4^3 / Delta
// with Delta = (E4^3 - E6^2)/1728 and the Eisenstein q-series truncated
// once the certified tail fits in the radius budget.  Requires Im tau to
// be certified >= 1/10.
ComplexBall j_eval(const ComplexBall& tau, Precision prec);

// Working precision for class-polynomial rounding:
// ceil(pi sqrt(m) sum(1/a_i) / ln 2) + 32 + 10 h.
Precision required_precision(const OrderSpec& order);

struct ClassPolyResult {
  IntPoly f;  // monic, degree h
  long h = 0;
  std::vector<std::pair<FormTriple, ComplexBall>> roots;
  RealBall residual;    // bound on the worst coefficient rounding error
  Precision precision;  // bits at which the rounding succeeded
};

// Assembles f = prod (x - j(tau_Q)) exactly, retrying at doubled precision
// until every coefficient rounds to an integer with certified residual
// < 1/4.
ClassPolyResult class_polynomial(const OrderSpec& order);

}  // namespace quartjac

#endif
