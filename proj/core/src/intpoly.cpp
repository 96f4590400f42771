#include "quartjac/intpoly.hpp"

#include <sstream>

namespace quartjac {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

IntPoly IntPoly::from_coeffs(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

const mpz_class& IntPoly::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

size_t IntPoly::max_coeff_bits() const {
  size_t m = 0;
  for (const auto& c : c_) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<mpz_class> r(std::max(p.c_.size(), q.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) + q.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<mpz_class> r(std::max(p.c_.size(), q.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = p.coeff(i) - q.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly();
  std::vector<mpz_class> r(p.c_.size() + q.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::power(unsigned long k) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly result;
  for (size_t i = c_.size(); i-- > 0;) {
    result = result * inner + constant(c_[i]);
  }
  return result;
}

IntPoly IntPoly::exact_divide(const IntPoly& q) const {
  if (q.is_zero()) throw domain_error("exact_divide by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < q.degree()) throw domain_error("exact_divide: inexact division");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> quot(static_cast<size_t>(degree() - q.degree()) + 1);
  const mpz_class& lead = q.leading();
  for (long k = degree() - q.degree(); k >= 0; --k) {
    mpz_class& top = rem[static_cast<size_t>(k + q.degree())];
    if (top == 0) {
      quot[static_cast<size_t>(k)] = 0;
      continue;
    }
    mpz_class qq, rr;
    mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (rr != 0) throw domain_error("exact_divide: inexact division");
    quot[static_cast<size_t>(k)] = qq;
    for (long i = 0; i <= q.degree(); ++i)
      rem[static_cast<size_t>(k + i)] -= qq * q.coeff(static_cast<size_t>(i));
  }
  for (const auto& r : rem)
    if (r != 0) throw domain_error("exact_divide: nonzero remainder");
  return IntPoly(std::move(quot));
}

bool IntPoly::divides(const IntPoly& p) const {
  try {
    (void)p.exact_divide(*this);
    return true;
  } catch (const domain_error&) {
    return false;
  }
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<mpz_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
  return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  mpz_class g = content();
  if (g == 0 || g == 1) return *this;
  std::vector<mpz_class> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::normalized() const {
  IntPoly p = primitive_part();
  if (!p.is_zero() && p.leading() < 0) p = -p;
  return p;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  // primitive PRS
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  mpz_class ca = a.content(), cb = b.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly f = a.primitive_part(), g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    // pseudo-remainder of f by g (extra factors of lc(g) are harmless,
    // the primitive part strips them)
    const mpz_class& lead = g.leading();
    IntPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
      long shift = r.degree() - g.degree();
      mpz_class c = r.leading();
      std::vector<mpz_class> rc(r.coeffs());
      for (auto& v : rc) v *= lead;
      for (long i = 0; i <= g.degree(); ++i)
        rc[static_cast<size_t>(shift + i)] -= c * g.coeff(static_cast<size_t>(i));
      r = IntPoly(std::move(rc));
    }
    f = g;
    g = r.primitive_part();
  }
  IntPoly result = f.normalized();
  return result.scaled(cg == 0 ? mpz_class(1) : cg);
}

IntPoly IntPoly::squarefree_part() const {
  if (is_zero() || degree() == 0) return normalized();
  IntPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return normalized();
  return exact_divide(g).normalized();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
  if (is_zero()) return 0;
  // sum c_i u^i v^(n-i), v > 0
  const mpz_class& u = x.get_num();
  const mpz_class& v = x.get_den();
  mpz_class acc = 0, upow = 1;
  std::vector<mpz_class> vpow(c_.size());
  vpow[c_.size() - 1] = 1;
  for (size_t i = c_.size() - 1; i-- > 0;) vpow[i] = vpow[i + 1] * v;
  for (size_t i = 0; i < c_.size(); ++i) {
    acc += c_[i] * upow * vpow[i];
    upow *= u;
  }
  return sgn(acc);
}

RealBall IntPoly::eval_ball(const RealBall& x) const {
  Precision p = x.precision();
  RealBall acc = RealBall::exact_int(0, p);
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * x + RealBall::from_mpz(c_[i], p);
  return acc;
}

ComplexBall IntPoly::eval_ball(const ComplexBall& x) const {
  Precision p = x.real().precision();
  ComplexBall acc = ComplexBall::from_real(RealBall::exact_int(0, p));
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * x + ComplexBall::from_real(RealBall::from_mpz(c_[i], p));
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class a = ::abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.get_str());
  return out;
}

IntPoly IntPoly::from_coeff_strings(const std::vector<std::string>& s) {
  std::vector<mpz_class> v;
  v.reserve(s.size());
  for (const auto& t : s) v.emplace_back(t);
  return IntPoly(std::move(v));
}

}  // namespace quartjac
