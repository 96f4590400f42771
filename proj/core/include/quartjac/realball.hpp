#ifndef QUARTJAC_REALBALL_HPP
#define QUARTJAC_REALBALL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "quartjac/errors.hpp"

namespace quartjac {

enum class Order { Less, Greater, Overlap };

// Certified real value: midpoint at `precision` bits plus an absolute error
// radius.  The true value always lies in [mid - rad, mid + rad], and every
// operation returns a ball whose interval contains the exact image of the
// input intervals.  Immutable after construction; safe to share across
// threads.
class RealBall {
 public:
  RealBall();  // exact 0 at 64 bits
  RealBall(const RealBall&);
  RealBall(RealBall&&) noexcept;
  RealBall& operator=(const RealBall&);
  RealBall& operator=(RealBall&&) noexcept;
  ~RealBall();

  static RealBall exact_int(long v, Precision prec);
  static RealBall from_mpz(const mpz_class& v, Precision prec);
  static RealBall from_mpq(const mpq_class& v, Precision prec);
  // Ball covering [lo, hi].
  static RealBall from_interval(const mpq_class& lo, const mpq_class& hi, Precision prec);
  static RealBall pi(Precision prec);
  // 2^e as an exact ball.
  static RealBall pow2(long e, Precision prec);

  Precision precision() const { return prec_; }
  bool is_exact() const;  // radius == 0

  friend RealBall operator+(const RealBall& x, const RealBall& y);
  friend RealBall operator-(const RealBall& x, const RealBall& y);
  friend RealBall operator*(const RealBall& x, const RealBall& y);
  // Throws undecidable_error if y's interval contains 0.
  friend RealBall operator/(const RealBall& x, const RealBall& y);
  RealBall operator-() const;

  RealBall square() const;
  // Throws domain_error if the interval contains negative values.
  RealBall sqrt() const;
  RealBall exp() const;
  void sin_cos(RealBall& s, RealBall& c) const;
  RealBall abs() const;
  RealBall with_precision(Precision prec) const;

  // Exact dyadic bounds of the interval.
  mpq_class lower() const;
  mpq_class upper() const;
  mpq_class midpoint() const;  // exact dyadic midpoint
  // Exact dyadic upper bound on the radius.
  mpq_class radius() const;

  bool contains(const mpq_class& v) const;
  bool contains_zero() const;
  bool is_positive() const;  // certified > 0
  bool is_negative() const;  // certified < 0
  // -1 / +1 when certain, throws undecidable_error when 0 is inside.
  int certified_sign() const;

  // log2 of an upper bound on the radius; very negative for tight balls.
  // Returns LONG_MIN-ish sentinel (radius_log2_exact_zero) for exact balls.
  long radius_log2() const;
  static constexpr long radius_log2_exact_zero = -(1L << 40);

  // Midpoint as a decimal string with `digits` significant digits (not
  // certified; for diagnostics).
  std::string midpoint_string(size_t digits = 20) const;

  // Decimal expansion truncated so that the printed value differs from the
  // true value by less than one unit in the last printed place.  At most
  // max_frac_digits digits after the point.  Falls back to "~<midpoint>"
  // when not even the leading digit is pinned.
  std::string decimal(int max_frac_digits) const;

  friend Order certify_compare(const RealBall& x, const RealBall& y);
  friend class ComplexBall;

 private:
  mpfr_t mid_;
  mpfr_t rad_;  // low precision, always rounded up
  Precision prec_;

  explicit RealBall(Precision prec);
  void add_rounding_error(int ternary);
  void add_error(const mpfr_t e);
};

Order certify_compare(const RealBall& x, const RealBall& y);

// Componentwise ball complex number.
class ComplexBall {
 public:
  ComplexBall() = default;
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
  static ComplexBall from_real(const RealBall& re);

  const RealBall& real() const { return re_; }
  const RealBall& imag() const { return im_; }

  friend ComplexBall operator+(const ComplexBall& x, const ComplexBall& y);
  friend ComplexBall operator-(const ComplexBall& x, const ComplexBall& y);
  friend ComplexBall operator*(const ComplexBall& x, const ComplexBall& y);
  friend ComplexBall operator/(const ComplexBall& x, const ComplexBall& y);
  ComplexBall operator-() const;

  RealBall norm() const;  // |z|^2
  RealBall abs_upper_ball() const;  // ball containing |z|
  ComplexBall square() const;
  ComplexBall sqrt() const;  // principal branch
  ComplexBall exp() const;   // e^(re) * (cos im + i sin im)

  bool contains_zero() const;
  // max of the two component radii, as log2.
  long radius_log2() const;

 private:
  RealBall re_, im_;
};

}  // namespace quartjac

#endif
