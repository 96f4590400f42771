#ifndef QUARTJAC_INTPOLY_HPP
#define QUARTJAC_INTPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "quartjac/realball.hpp"

namespace quartjac {

// Exact univariate polynomial over Z, constant term first, no trailing
// zero leading coefficient.  The zero polynomial has empty storage and
// degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(const mpz_class& c);
  static IntPoly x();
  // e.g. from_coeffs({-1, 0, 1}) is x^2 - 1
  static IntPoly from_coeffs(std::initializer_list<long> coeffs);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(size_t i) const;  // 0 beyond degree
  const mpz_class& leading() const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  size_t max_coeff_bits() const;

  friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly power(unsigned long k) const;
  IntPoly compose(const IntPoly& inner) const;  // this(inner(x))
  // Throws domain_error unless q divides *this exactly in Z[x].
  IntPoly exact_divide(const IntPoly& q) const;
  bool divides(const IntPoly& p) const;  // *this | p
  IntPoly derivative() const;
  IntPoly scaled(const mpz_class& k) const;

  mpz_class content() const;  // nonnegative gcd of coefficients
  IntPoly primitive_part() const;
  // primitive, positive leading coefficient
  IntPoly normalized() const;
  IntPoly squarefree_part() const;  // this / gcd(this, this')
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  // sign of p(u/v) for v > 0, via the homogenized integer value
  int sign_at(const mpq_class& x) const;
  RealBall eval_ball(const RealBall& x) const;
  ComplexBall eval_ball(const ComplexBall& x) const;

  // "x^2 - 4*x + 4" style rendering.
  std::string to_string(const std::string& var = "x") const;
  // JSON-friendly coefficient strings, constant term first.
  std::vector<std::string> coeff_strings() const;
  static IntPoly from_coeff_strings(const std::vector<std::string>& s);

 private:
  std::vector<mpz_class> c_;
  void trim();
};

}  // namespace quartjac

#endif
