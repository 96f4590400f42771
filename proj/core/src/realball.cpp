#include "quartjac/realball.hpp"

#include <cstdlib>
#include <sstream>

namespace quartjac {

namespace {

constexpr mpfr_prec_t kRadiusPrec = 32;

Precision cap_value = [] {
  if (const char* env = std::getenv("QT_PRECISION_CAP")) {
    long v = std::atol(env);
    if (v >= 64) return static_cast<Precision>(v);
  }
  return static_cast<Precision>(1L << 20);
}();

mpfr_prec_t clamp_prec(Precision p) {
  if (p < MPFR_PREC_MIN) return MPFR_PREC_MIN;
  return static_cast<mpfr_prec_t>(p);
}

}  // namespace

Precision precision_cap() { return cap_value; }
void set_precision_cap(Precision bits) { cap_value = bits < 64 ? 64 : bits; }

RealBall::RealBall(Precision prec) : prec_(prec < 2 ? 2 : prec) {
  mpfr_init2(mid_, clamp_prec(prec_));
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

RealBall::RealBall() : RealBall(64) {}

RealBall::RealBall(const RealBall& o) : prec_(o.prec_) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

RealBall::RealBall(RealBall&& o) noexcept : prec_(o.prec_) {
  mid_[0] = o.mid_[0];
  rad_[0] = o.rad_[0];
  mpfr_init2(o.mid_, MPFR_PREC_MIN);
  mpfr_init2(o.rad_, MPFR_PREC_MIN);
  mpfr_set_zero(o.mid_, 1);
  mpfr_set_zero(o.rad_, 1);
}

RealBall& RealBall::operator=(const RealBall& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
    prec_ = o.prec_;
  }
  return *this;
}

RealBall& RealBall::operator=(RealBall&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  std::swap(prec_, o.prec_);
  return *this;
}

RealBall::~RealBall() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void RealBall::add_rounding_error(int ternary) {
  if (ternary == 0) return;
  if (mpfr_zero_p(mid_))
    throw internal_error("inexact rounding to zero midpoint");
  // one ulp: 2^(exp - prec) >= actual half-ulp error
  mpfr_t ulp;
  mpfr_init2(ulp, kRadiusPrec);
  mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - mpfr_get_prec(mid_), MPFR_RNDU);
  mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
  mpfr_clear(ulp);
}

void RealBall::add_error(const mpfr_t e) {
  mpfr_add(rad_, rad_, e, MPFR_RNDU);
}

bool RealBall::is_exact() const { return mpfr_zero_p(rad_); }

RealBall RealBall::exact_int(long v, Precision prec) {
  RealBall r(prec);
  int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
  r.add_rounding_error(t);
  return r;
}

RealBall RealBall::from_mpz(const mpz_class& v, Precision prec) {
  RealBall r(prec);
  int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
  r.add_rounding_error(t);
  return r;
}

RealBall RealBall::from_mpq(const mpq_class& v, Precision prec) {
  RealBall r(prec);
  int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
  r.add_rounding_error(t);
  return r;
}

RealBall RealBall::from_interval(const mpq_class& lo, const mpq_class& hi, Precision prec) {
  if (lo > hi) throw internal_error("from_interval: lo > hi");
  RealBall r(prec);
  mpq_class mid = (lo + hi) / 2;
  mpq_class half = (hi - lo) / 2;
  int t = mpfr_set_q(r.mid_, mid.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(r.rad_, half.get_mpq_t(), MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

RealBall RealBall::pi(Precision prec) {
  RealBall r(prec);
  int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
  r.add_rounding_error(t);
  return r;
}

RealBall RealBall::pow2(long e, Precision prec) {
  RealBall r(prec);
  mpfr_set_ui_2exp(r.mid_, 1, e, MPFR_RNDN);
  return r;
}

RealBall operator+(const RealBall& x, const RealBall& y) {
  RealBall r(std::max(x.prec_, y.prec_));
  int t = mpfr_add(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, x.rad_, y.rad_, MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

RealBall operator-(const RealBall& x, const RealBall& y) {
  RealBall r(std::max(x.prec_, y.prec_));
  int t = mpfr_sub(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, x.rad_, y.rad_, MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

RealBall operator*(const RealBall& x, const RealBall& y) {
  RealBall r(std::max(x.prec_, y.prec_));
  int t = mpfr_mul(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  // |xm|*yr + |ym|*xr + xr*yr
  mpfr_t am, tmp;
  mpfr_init2(am, kRadiusPrec);
  mpfr_init2(tmp, kRadiusPrec);
  mpfr_abs(am, x.mid_, MPFR_RNDU);
  mpfr_mul(tmp, am, y.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, tmp, MPFR_RNDU);
  mpfr_abs(am, y.mid_, MPFR_RNDU);
  mpfr_mul(tmp, am, x.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, tmp, MPFR_RNDU);
  mpfr_mul(tmp, x.rad_, y.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, tmp, MPFR_RNDU);
  mpfr_clear(am);
  mpfr_clear(tmp);
  r.add_rounding_error(t);
  return r;
}

RealBall operator/(const RealBall& x, const RealBall& y) {
  // lower bound of |y|
  mpfr_t yabs_lo;
  mpfr_init2(yabs_lo, kRadiusPrec);
  mpfr_abs(yabs_lo, y.mid_, MPFR_RNDD);
  mpfr_sub(yabs_lo, yabs_lo, y.rad_, MPFR_RNDD);
  if (mpfr_sgn(yabs_lo) <= 0) {
    mpfr_clear(yabs_lo);
    throw undecidable_error("division by an interval containing zero");
  }
  RealBall r(std::max(x.prec_, y.prec_));
  int t = mpfr_div(r.mid_, x.mid_, y.mid_, MPFR_RNDN);
  // (|ym|*xr + |xm|*yr) / (|ym| * (|ym| - yr))
  mpfr_t num, den, tmp;
  mpfr_init2(num, kRadiusPrec);
  mpfr_init2(den, kRadiusPrec);
  mpfr_init2(tmp, kRadiusPrec);
  mpfr_abs(tmp, y.mid_, MPFR_RNDU);
  mpfr_mul(num, tmp, x.rad_, MPFR_RNDU);
  mpfr_abs(tmp, x.mid_, MPFR_RNDU);
  mpfr_mul(tmp, tmp, y.rad_, MPFR_RNDU);
  mpfr_add(num, num, tmp, MPFR_RNDU);
  mpfr_abs(tmp, y.mid_, MPFR_RNDD);
  mpfr_mul(den, tmp, yabs_lo, MPFR_RNDD);
  mpfr_div(tmp, num, den, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, tmp, MPFR_RNDU);
  mpfr_clear(num);
  mpfr_clear(den);
  mpfr_clear(tmp);
  mpfr_clear(yabs_lo);
  r.add_rounding_error(t);
  return r;
}

RealBall RealBall::operator-() const {
  RealBall r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

RealBall RealBall::square() const { return (*this) * (*this); }

RealBall RealBall::sqrt() const {
  const mpfr_prec_t wp = mpfr_get_prec(mid_) + 64;
  mpfr_t lo;
  mpfr_init2(lo, wp);
  mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
  if (mpfr_sgn(lo) < 0) {
    mpfr_clear(lo);
    throw domain_error("sqrt of an interval containing negative values");
  }
  RealBall r(prec_);
  int t = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
  if (mpfr_zero_p(rad_)) {
    mpfr_clear(lo);
    r.add_rounding_error(t);
    return r;
  }
  // left deviation dominates by concavity: sqrt(m) - sqrt(m - r)
  mpfr_t a, b;
  mpfr_init2(a, wp);
  mpfr_init2(b, wp);
  mpfr_sqrt(a, mid_, MPFR_RNDU);
  mpfr_sqrt(b, lo, MPFR_RNDD);
  mpfr_sub(a, a, b, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, a, MPFR_RNDU);
  mpfr_clear(a);
  mpfr_clear(b);
  mpfr_clear(lo);
  r.add_rounding_error(t);
  return r;
}

RealBall RealBall::exp() const {
  const mpfr_prec_t wp = mpfr_get_prec(mid_) + 64;
  RealBall r(prec_);
  int t = mpfr_exp(r.mid_, mid_, MPFR_RNDN);
  if (!mpfr_zero_p(rad_)) {
    // right deviation dominates by convexity: exp(m + r) - exp(m)
    mpfr_t hi, a, b;
    mpfr_init2(hi, wp);
    mpfr_init2(a, wp);
    mpfr_init2(b, wp);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    mpfr_exp(a, hi, MPFR_RNDU);
    mpfr_exp(b, mid_, MPFR_RNDD);
    mpfr_sub(a, a, b, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, a, MPFR_RNDU);
    mpfr_clear(hi);
    mpfr_clear(a);
    mpfr_clear(b);
  }
  r.add_rounding_error(t);
  return r;
}

void RealBall::sin_cos(RealBall& s, RealBall& c) const {
  RealBall rs(prec_), rc(prec_);
  int ts = mpfr_sin(rs.mid_, mid_, MPFR_RNDN);
  int tc = mpfr_cos(rc.mid_, mid_, MPFR_RNDN);
  // |sin'| <= 1 and |cos'| <= 1, so the input radius carries over
  mpfr_add(rs.rad_, rs.rad_, rad_, MPFR_RNDU);
  mpfr_add(rc.rad_, rc.rad_, rad_, MPFR_RNDU);
  rs.add_rounding_error(ts);
  rc.add_rounding_error(tc);
  s = std::move(rs);
  c = std::move(rc);
}

RealBall RealBall::abs() const {
  RealBall r(*this);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

RealBall RealBall::with_precision(Precision prec) const {
  RealBall r(prec);
  int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  r.add_rounding_error(t);
  return r;
}

mpq_class RealBall::lower() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(mid_) + 64);
  mpfr_sub(t, mid_, rad_, MPFR_RNDD);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), t);
  mpfr_clear(t);
  return q;
}

mpq_class RealBall::upper() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(mid_) + 64);
  mpfr_add(t, mid_, rad_, MPFR_RNDU);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), t);
  mpfr_clear(t);
  return q;
}

mpq_class RealBall::midpoint() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), mid_);
  return q;
}

mpq_class RealBall::radius() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), rad_);
  return q;
}

bool RealBall::contains(const mpq_class& v) const {
  return lower() <= v && v <= upper();
}

bool RealBall::contains_zero() const {
  return mpfr_cmpabs(mid_, rad_) <= 0;
}

bool RealBall::is_positive() const {
  return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool RealBall::is_negative() const {
  return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

int RealBall::certified_sign() const {
  if (is_positive()) return 1;
  if (is_negative()) return -1;
  throw undecidable_error("sign of interval containing zero");
}

long RealBall::radius_log2() const {
  if (mpfr_zero_p(rad_)) return radius_log2_exact_zero;
  return static_cast<long>(mpfr_get_exp(rad_));
}

std::string RealBall::midpoint_string(size_t digits) const {
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", static_cast<int>(digits), mid_);
  return buf;
}

std::string RealBall::decimal(int max_frac_digits) const {
  // largest k <= max_frac_digits such that 2*rad < 10^-k
  mpq_class r = radius();
  int k = max_frac_digits;
  while (k >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    if (2 * r < mpq_class(1, p)) break;
    --k;
  }
  if (k < 0) return "~" + midpoint_string(8);
  mpq_class m = midpoint();
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  mpq_class scaled = m * p;
  // round to nearest
  mpz_class num = scaled.get_num(), den = scaled.get_den(), n;
  mpz_class twice = 2 * num + den;  // floor((num/den)+1/2) for positive; handle sign below
  if (num >= 0) {
    mpz_fdiv_q(n.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  } else {
    mpz_class t2 = 2 * num - den;
    mpz_cdiv_q(n.get_mpz_t(), t2.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  }
  bool neg = n < 0;
  mpz_class a = neg ? mpz_class(-n) : n;
  mpz_class ip, fp;
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  std::ostringstream out;
  if (neg) out << '-';
  out << ip.get_str();
  if (k > 0) {
    std::string f = fp.get_str();
    out << '.' << std::string(static_cast<size_t>(k) - f.size(), '0') << f;
  }
  return out.str();
}

Order certify_compare(const RealBall& x, const RealBall& y) {
  mpfr_t xu, yl;
  mpfr_prec_t p = std::max(mpfr_get_prec(x.mid_), mpfr_get_prec(y.mid_)) + 64;
  mpfr_init2(xu, p);
  mpfr_init2(yl, p);
  mpfr_add(xu, x.mid_, x.rad_, MPFR_RNDU);
  mpfr_sub(yl, y.mid_, y.rad_, MPFR_RNDD);
  bool less = mpfr_cmp(xu, yl) < 0;
  mpfr_sub(xu, x.mid_, x.rad_, MPFR_RNDD);
  mpfr_add(yl, y.mid_, y.rad_, MPFR_RNDU);
  bool greater = mpfr_cmp(xu, yl) > 0;
  mpfr_clear(xu);
  mpfr_clear(yl);
  if (less) return Order::Less;
  if (greater) return Order::Greater;
  return Order::Overlap;
}

ComplexBall ComplexBall::from_real(const RealBall& re) {
  return ComplexBall(re, RealBall::exact_int(0, re.precision()));
}

ComplexBall operator+(const ComplexBall& x, const ComplexBall& y) {
  return ComplexBall(x.re_ + y.re_, x.im_ + y.im_);
}

ComplexBall operator-(const ComplexBall& x, const ComplexBall& y) {
  return ComplexBall(x.re_ - y.re_, x.im_ - y.im_);
}

ComplexBall operator*(const ComplexBall& x, const ComplexBall& y) {
  return ComplexBall(x.re_ * y.re_ - x.im_ * y.im_,
                     x.re_ * y.im_ + x.im_ * y.re_);
}

ComplexBall operator/(const ComplexBall& x, const ComplexBall& y) {
  RealBall n = y.norm();
  return ComplexBall((x.re_ * y.re_ + x.im_ * y.im_) / n,
                     (x.im_ * y.re_ - x.re_ * y.im_) / n);
}

ComplexBall ComplexBall::operator-() const { return ComplexBall(-re_, -im_); }

RealBall ComplexBall::norm() const { return re_.square() + im_.square(); }

RealBall ComplexBall::abs_upper_ball() const { return norm().sqrt(); }

ComplexBall ComplexBall::square() const { return (*this) * (*this); }

ComplexBall ComplexBall::sqrt() const {
  if (im_.is_exact() && im_.contains_zero()) {
    // real axis: principal value
    if (!re_.is_negative()) return ComplexBall(re_.sqrt(), im_);
    return ComplexBall(im_, (-re_).sqrt());
  }
  RealBall m = abs_upper_ball();
  RealBall two = RealBall::exact_int(2, re_.precision());
  RealBall a2 = (m + re_) / two;
  if (a2.is_positive()) {
    RealBall rp = a2.sqrt();
    RealBall ip = im_ / (two * rp);
    return ComplexBall(rp, ip);
  }
  RealBall b2 = (m - re_) / two;
  int s;
  try {
    s = im_.certified_sign();
  } catch (const undecidable_error&) {
    throw undecidable_error("complex sqrt: ball straddles the branch cut");
  }
  RealBall ip = b2.sqrt();
  if (s < 0) ip = -ip;
  RealBall rp = im_ / (two * ip);
  return ComplexBall(rp, ip);
}

ComplexBall ComplexBall::exp() const {
  RealBall mag = re_.exp();
  RealBall s, c;
  im_.sin_cos(s, c);
  return ComplexBall(mag * c, mag * s);
}

bool ComplexBall::contains_zero() const {
  return re_.contains_zero() && im_.contains_zero();
}

long ComplexBall::radius_log2() const {
  return std::max(re_.radius_log2(), im_.radius_log2());
}

}  // namespace quartjac
