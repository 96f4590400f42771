#include "quartjac/curvefam.hpp"

#include <algorithm>

namespace quartjac {

struct QVal::Impl {
  std::optional<mpq_class> exact;
  std::function<RealBall(Precision)> eval;
  std::string expr;
  // memoized tightest evaluation
  std::optional<RealBall> cache;
  Precision cache_prec = 0;
};

QVal::QVal() : QVal(exact(mpq_class(0))) {}

QVal QVal::exact(const mpq_class& v) {
  mpq_class c(v);
  c.canonicalize();
  return exact(c, c.get_str());
}

QVal QVal::exact(const mpq_class& v, std::string expr) {
  auto impl = std::make_shared<Impl>();
  impl->exact = v;
  impl->exact->canonicalize();
  impl->expr = std::move(expr);
  return QVal(std::move(impl));
}

QVal QVal::algebraic(std::function<RealBall(Precision)> eval, std::string expr) {
  auto impl = std::make_shared<Impl>();
  impl->eval = std::move(eval);
  impl->expr = std::move(expr);
  return QVal(std::move(impl));
}

bool QVal::is_exact() const { return impl_->exact.has_value(); }

const mpq_class& QVal::rational() const {
  if (!impl_->exact) throw internal_error("QVal::rational on interval value");
  return *impl_->exact;
}

RealBall QVal::ball(Precision prec) const {
  if (impl_->exact) return RealBall::from_mpq(*impl_->exact, prec + 8);
  if (impl_->cache && impl_->cache_prec >= prec) return *impl_->cache;
  RealBall b = impl_->eval(prec);
  impl_->cache = b;
  impl_->cache_prec = prec;
  return b;
}

const std::string& QVal::expr() const { return impl_->expr; }

QVal QVal::with_expr(std::string expr) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->expr = std::move(expr);
  return QVal(std::move(impl));
}

namespace {

std::string wrap(const std::string& s) { return "(" + s + ")"; }

QVal combine(const QVal& x, const QVal& y, char op,
             mpq_class (*exact_op)(const mpq_class&, const mpq_class&),
             RealBall (*ball_op)(const RealBall&, const RealBall&)) {
  std::string expr = wrap(x.expr()) + " " + op + " " + wrap(y.expr());
  if (x.is_exact() && y.is_exact())
    return QVal::exact(exact_op(x.rational(), y.rational()), expr);
  return QVal::algebraic(
      [x, y, ball_op](Precision p) { return ball_op(x.ball(p), y.ball(p)); },
      std::move(expr));
}

}  // namespace

QVal operator+(const QVal& x, const QVal& y) {
  return combine(
      x, y, '+', +[](const mpq_class& a, const mpq_class& b) { return mpq_class(a + b); },
      +[](const RealBall& a, const RealBall& b) { return a + b; });
}

QVal operator-(const QVal& x, const QVal& y) {
  return combine(
      x, y, '-', +[](const mpq_class& a, const mpq_class& b) { return mpq_class(a - b); },
      +[](const RealBall& a, const RealBall& b) { return a - b; });
}

QVal operator*(const QVal& x, const QVal& y) {
  return combine(
      x, y, '*', +[](const mpq_class& a, const mpq_class& b) { return mpq_class(a * b); },
      +[](const RealBall& a, const RealBall& b) { return a * b; });
}

QVal operator/(const QVal& x, const QVal& y) {
  if (y.is_exact() && y.rational() == 0) throw domain_error("QVal division by zero");
  return combine(
      x, y, '/', +[](const mpq_class& a, const mpq_class& b) { return mpq_class(a / b); },
      +[](const RealBall& a, const RealBall& b) { return a / b; });
}

QVal QVal::operator-() const {
  std::string expr = "-" + wrap(this->expr());
  if (is_exact()) return exact(mpq_class(-rational()), expr);
  QVal self = *this;
  return algebraic([self](Precision p) { return -self.ball(p); }, std::move(expr));
}

QVal QVal::square() const {
  std::string expr = wrap(this->expr()) + "^2";
  if (is_exact()) return exact(mpq_class(rational() * rational()), expr);
  QVal self = *this;
  return algebraic([self](Precision p) { return self.ball(p).square(); }, std::move(expr));
}

QVal QVal::sqrt() const {
  std::string expr = "sqrt" + wrap(this->expr());
  if (is_exact()) {
    const mpq_class& v = rational();
    if (v < 0) throw domain_error("QVal::sqrt of negative rational");
    mpz_class ns, ds;
    if (mpz_root(ns.get_mpz_t(), v.get_num().get_mpz_t(), 2) &&
        mpz_root(ds.get_mpz_t(), v.get_den().get_mpz_t(), 2))
      return exact(mpq_class(ns, ds), expr);
  }
  QVal self = *this;
  return algebraic([self](Precision p) { return self.ball(p).sqrt(); }, std::move(expr));
}

namespace {

Cmp cmp_of(Order o) {
  return o == Order::Less ? Cmp::Less : Cmp::Greater;
}

}  // namespace

std::optional<Cmp> qval_try_compare(const QVal& x, const QVal& y) {
  if (x.same_object(y)) return Cmp::Equal;
  if (x.is_exact() && y.is_exact()) {
    int c = cmp(x.rational(), y.rational());
    return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
  }
  Precision cap = precision_cap();
  for (Precision p = 64; p <= cap; p *= 2) {
    try {
      Order o = certify_compare(x.ball(p), y.ball(p));
      if (o != Order::Overlap) return cmp_of(o);
    } catch (const undecidable_error&) {
      // sub-expression needs more precision; keep doubling
    }
    if (p * 2 > cap) break;
  }
  return std::nullopt;
}

Cmp qval_compare(const QVal& x, const QVal& y) {
  auto c = qval_try_compare(x, y);
  if (!c) throw precision_exhausted("qval_compare: values not separable at precision cap");
  return *c;
}

RealBall certified_gap(const QVal& larger, const QVal& smaller) {
  Precision cap = precision_cap();
  for (Precision p = 64; p <= cap; p *= 2) {
    try {
      RealBall diff = larger.ball(p) - smaller.ball(p);
      if (diff.is_positive()) return diff;
    } catch (const undecidable_error&) {
    }
    if (p * 2 > cap) break;
  }
  throw precision_exhausted("certified_gap: difference not certified positive");
}

const AlphaEntry& AlphaTable::entry(long d) const {
  for (const auto& e : entries)
    if (e.d == d) return e;
  throw domain_error("AlphaTable: no entry for divisor " + std::to_string(d));
}

std::vector<long> AlphaTable::quartic_divisors() const {
  std::vector<long> out;
  for (const auto& e : entries)
    if (e.d > 1) out.push_back(e.d);
  return out;
}

QVal qval_of(const std::shared_ptr<AlgebraicReal>& x) {
  return QVal::algebraic([x](Precision p) { return refine(*x, p); },
                         x->name.empty() ? "alpha" : x->name);
}

namespace {

// phi(t) = 64 (t+3)^3 / (t-1)^2, increasing on [0, 1)
mpq_class phi(const mpq_class& t) {
  mpq_class u = t + 3;
  mpq_class v = t - 1;
  return 64 * u * u * u / (v * v);
}

}  // namespace

RealBall mu_from_j(const RealBall& J, Precision prec) {
  const mpq_class j_lo = J.lower(), j_hi = J.upper();
  if (j_hi < 1728) throw domain_error("mu_from_j: J below 1728");

  // bracket from above: smallest 1 - 2^-k with phi beyond j_hi
  mpq_class hi(1, 2);
  hi = 1 - hi;
  while (phi(hi) <= j_hi) hi = 1 - (1 - hi) / 2;

  long steps = prec + 8;
  // lower edge: largest t with phi(t) <= j_lo
  mpq_class a = 0;
  if (phi(a) < j_lo) {
    mpq_class b = hi;
    for (long i = 0; i < steps && b - a > 0; ++i) {
      mpq_class mid = (a + b) / 2;
      if (phi(mid) <= j_lo)
        a = mid;
      else
        b = mid;
    }
  }
  // upper edge: smallest t with phi(t) >= j_hi
  mpq_class c = hi;
  {
    mpq_class b = a;
    for (long i = 0; i < steps && c - b > 0; ++i) {
      mpq_class mid = (b + c) / 2;
      if (phi(mid) >= j_hi)
        c = mid;
      else
        b = mid;
    }
  }
  RealBall t_ball = RealBall::from_interval(a, c, prec + 32);
  return t_ball.sqrt();
}

AlphaTable build_alpha_table(long m) { return build_alpha_pipeline(m).table; }

AlphaPipeline build_alpha_pipeline(long m) {
  OrderSpec order = OrderSpec::create(m);
  ClassPolyResult cls = class_polynomial(order);
  IntPoly g = compose_g(cls.f);
  std::vector<AlgebraicReal> roots = isolate_roots_unit_interval(g);

  std::vector<long> divisors;
  for (long d = 1; d <= m; d += 2)
    if (m % d == 0) divisors.push_back(d);
  if (roots.size() != divisors.size())
    throw internal_error("alpha table: root count differs from odd divisor count");

  struct Matched {
    std::map<long, size_t> assignment;
    std::vector<std::pair<long, ComplexBall>> jvals;
  };
  Matched matched = refine_until(
      [&](Precision p) {
        std::vector<std::pair<long, ComplexBall>> jvals;
        std::vector<std::pair<long, RealBall>> targets;
        for (long d : divisors) {
          FormTriple form = two_torsion_form(order, d);
          ComplexBall j;
          if (p <= cls.precision) {
            auto it = std::find_if(cls.roots.begin(), cls.roots.end(),
                                   [&](const auto& r) { return r.first == form; });
            if (it == cls.roots.end())
              throw internal_error("two-torsion form missing from class enumeration");
            j = it->second;
          } else {
            j = j_eval(tau_of_form(form, order, p + 64), p);
          }
          if (!j.imag().contains_zero())
            throw internal_error("two-torsion j-value has nonzero imaginary part");
          targets.emplace_back(d, mu_from_j(j.real(), p));
          jvals.emplace_back(d, j);
        }
        return Matched{match_roots(roots, targets), std::move(jvals)};
      },
      std::max<Precision>(96, cls.precision));

  AlphaTable table;
  table.m = m;
  for (size_t i = 0; i < divisors.size(); ++i) {
    long d = divisors[i];
    AlphaEntry e;
    e.d = d;
    e.alpha = std::make_shared<AlgebraicReal>(roots[matched.assignment.at(d)]);
    e.alpha->name = "alpha_" + std::to_string(d);
    e.j = matched.jvals[i].second;
    table.entries.push_back(std::move(e));
  }

  for (auto& e : table.entries) {
    try {
      minimal_polynomial(*e.alpha, g.degree());
    } catch (const recognition_error&) {
      // report falls back to the squarefree defining polynomial
    }
  }

  // Lemma "one-largest": alpha_1 strictly dominates
  const auto& a1 = table.entries.front();
  if (a1.d != 1) throw internal_error("alpha table: first entry is not d = 1");
  for (const auto& e : table.entries) {
    if (e.d == 1) continue;
    refine_until(
        [&](Precision p) {
          Order o = certify_compare(refine(*a1.alpha, p), refine(*e.alpha, p));
          if (o == Order::Overlap) throw undecidable_error("alpha_1 vs alpha_d overlap");
          if (o == Order::Less)
            throw internal_error("alpha_1 not maximal in table");
          return 0;
        },
        96);
  }
  return AlphaPipeline{std::move(table), std::move(cls), std::move(g)};
}

namespace {

void check_nondegenerate_alpha(const AlgebraicReal& alpha) {
  if (alpha.equals_rational(0))
    throw domain_error("degenerate curve: alpha = 0");
  if (alpha.equals_rational(1) || alpha.equals_rational(-1))
    throw domain_error("degenerate curve: alpha^2 = 1");
}

}  // namespace

CurveEquation hyperelliptic_equation(const std::shared_ptr<AlgebraicReal>& alpha) {
  check_nondegenerate_alpha(*alpha);
  QVal a = qval_of(alpha);
  const std::string& an = alpha->name.empty() ? "alpha" : alpha->name;
  QVal c0 = (QVal::exact(-1) + QVal::exact(1) / (QVal::exact(2) * a.square()))
                .with_expr("-1 + 1/(2*" + an + "^2)");
  CurveEquation eq;
  eq.kind = CurveEquation::Kind::Hyperelliptic;
  eq.coefficients.emplace_back("c0", c0);
  if (alpha->minimal)
    eq.minpolys[an] = *alpha->minimal;
  else if (!alpha->defining.is_zero())
    eq.minpolys[an] = alpha->defining;
  return eq;
}

QuarticBuild quartic_coeffs(const std::shared_ptr<AlgebraicReal>& alpha,
                            const std::shared_ptr<AlgebraicReal>& beta) {
  check_nondegenerate_alpha(*alpha);
  QVal av = qval_of(alpha);
  QVal bv = qval_of(beta);
  const std::string an = alpha->name.empty() ? "alpha" : alpha->name;
  const std::string bn = beta->name.empty() ? "beta" : beta->name;

  QVal one = QVal::exact(1), two = QVal::exact(2), four = QVal::exact(4);
  QVal a = (QVal::exact(-2) + four * (one - bv.square()) / (one - av.square()))
               .with_expr("-2 + 4*(1 - " + bn + "^2)/(1 - " + an + "^2)");
  QVal b = (two * bv / av).with_expr("2*" + bn + "/" + an);

  QVal beta_prime = two * av.square() - one;
  QVal twisting =
      (QVal::exact(8) * (beta_prime - one) * (beta_prime - two * bv.square() + one))
          .with_expr("8*(2*" + an + "^2 - 2)*(2*" + an + "^2 - 2*" + bn + "^2)");

  QuarticBuild out;
  out.triple = QuarticTriple{a, b, b};
  out.twisting = twisting;
  out.equation.kind = CurveEquation::Kind::Quartic;
  out.equation.coefficients.emplace_back("a", a);
  out.equation.coefficients.emplace_back("b", b);
  out.equation.coefficients.emplace_back("c", b);
  auto minpoly_of = [](const AlgebraicReal& x) {
    return x.minimal ? *x.minimal : x.defining;
  };
  out.equation.minpolys[an] = minpoly_of(*alpha);
  out.equation.minpolys[bn] = minpoly_of(*beta);
  return out;
}

QuarticTriple quartic_triple(QVal a, QVal b, QVal c) {
  return QuarticTriple{std::move(a), std::move(b), std::move(c)};
}

bool is_nonsingular(const QuarticTriple& t) {
  QVal four = QVal::exact(4);
  QVal disc = t.a.square() + t.b.square() + t.c.square() - t.a * t.b * t.c - four;
  if (disc.is_exact()) {
    if (disc.rational() == 0) return false;
  } else if (qval_compare(disc, QVal::exact(0)) == Cmp::Equal) {
    return false;
  }
  for (const QVal* v : {&t.a, &t.b, &t.c}) {
    QVal sq = v->square();
    if (sq.is_exact()) {
      if (sq.rational() == 4) return false;
    } else if (qval_compare(sq, four) == Cmp::Equal) {
      return false;
    }
  }
  return true;
}

}  // namespace quartjac
