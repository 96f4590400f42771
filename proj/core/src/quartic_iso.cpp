#include "quartjac/quartic_iso.hpp"

#include <algorithm>

namespace quartjac {

StrictClassInvariant strict_invariant(const QuarticTriple& t) {
  return StrictClassInvariant{{t.a.square(), t.b.square(), t.c.square()},
                              t.a * t.b * t.c};
}

namespace {

// square-level form, the unit the Table-1 moves act on
struct SqForm {
  TripleCase kind = TripleCase::Generic;
  QVal a;    // odd-slot value (TwoEqual, TwoZero)
  QVal bsq;  // repeated "square"; may be negative for companions
  StrictClassInvariant invariant;  // Generic carries only this
};

StrictClassInvariant invariant_of(const SqForm& f) {
  switch (f.kind) {
    case TripleCase::TwoZero: {
      QVal zero = QVal::exact(0);
      return StrictClassInvariant{{f.a.square(), zero, zero}, zero};
    }
    case TripleCase::TwoEqual:
      return StrictClassInvariant{{f.a.square(), f.bsq, f.bsq}, f.a * f.bsq};
    case TripleCase::Generic:
      return f.invariant;
  }
  throw internal_error("invariant_of: bad kind");
}

bool value_is_zero(const QVal& v) {
  if (v.is_exact()) return v.rational() == 0;
  auto c = qval_try_compare(v, QVal::exact(0));
  if (!c) throw precision_exhausted("cannot certify entry nonzero");
  return false;  // certified Less or Greater
}

// certified equality of squares (structural, exact, or refuted by interval)
bool squares_equal(const QVal& x, const QVal& y) {
  if (x.same_object(y)) return true;
  auto c = qval_try_compare(x.square(), y.square());
  if (!c) throw precision_exhausted("cannot separate coefficient squares");
  return *c == Cmp::Equal;
}

// normalized pattern of a nonsingular triple
SqForm detect(const QuarticTriple& t) {
  std::array<QVal, 3> e{t.a, t.b, t.c};
  int zeros = 0;
  std::array<bool, 3> is_zero{};
  for (int i = 0; i < 3; ++i) {
    is_zero[static_cast<size_t>(i)] = value_is_zero(e[static_cast<size_t>(i)]);
    if (is_zero[static_cast<size_t>(i)]) ++zeros;
  }
  if (zeros >= 2) {
    SqForm f;
    f.kind = TripleCase::TwoZero;
    f.a = QVal::exact(0);
    for (int i = 0; i < 3; ++i)
      if (!is_zero[static_cast<size_t>(i)]) f.a = e[static_cast<size_t>(i)];
    return f;
  }

  // find a pair with equal squares; odd slot goes first
  int pi = -1, pj = -1;
  for (int i = 0; i < 3 && pi < 0; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (squares_equal(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)])) {
        pi = i;
        pj = j;
        break;
      }
  if (pi < 0) {
    SqForm f;
    f.kind = TripleCase::Generic;
    f.invariant = strict_invariant(t);
    return f;
  }
  int odd = 3 - pi - pj;
  QVal y = e[static_cast<size_t>(pi)], z = e[static_cast<size_t>(pj)];
  QVal x = e[static_cast<size_t>(odd)];
  // bring the pair to equal values: (x, y, -y) is strictly (-x, y, y)
  bool same_value;
  if (y.same_object(z))
    same_value = true;
  else if (y.is_exact() && z.is_exact())
    same_value = y.rational() == z.rational();
  else
    throw precision_exhausted("cannot orient the equal-square pair");
  SqForm f;
  f.kind = TripleCase::TwoEqual;
  f.a = same_value ? x : -x;
  f.bsq = y.square();
  return f;
}

QVal mobius_16(const QVal& a) {
  // -2 + 16/(a+2); a^2 != 4 holds for nonsingular input
  return QVal::exact(-2) + QVal::exact(16) / (a + QVal::exact(2));
}

std::vector<SqForm> companions_of(const SqForm& f) {
  switch (f.kind) {
    case TripleCase::Generic:
      return {};
    case TripleCase::TwoEqual: {
      SqForm c;
      c.kind = TripleCase::TwoEqual;
      c.a = mobius_16(f.a);
      c.bsq = QVal::exact(4) * f.bsq / (f.a + QVal::exact(2));
      return {c};
    }
    case TripleCase::TwoZero: {
      SqForm c1, c2;
      c1.kind = c2.kind = TripleCase::TwoZero;
      c1.a = mobius_16(f.a);
      c2.a = QVal::exact(-2) + QVal::exact(16) / (QVal::exact(2) - f.a);
      return {c1, c2};
    }
  }
  throw internal_error("companions_of: bad kind");
}

bool form_is_exact(const SqForm& f) {
  if (f.kind == TripleCase::TwoZero) return f.a.is_exact();
  if (f.kind == TripleCase::TwoEqual) return f.a.is_exact() && f.bsq.is_exact();
  for (const auto& s : f.invariant.squares)
    if (!s.is_exact()) return false;
  return f.invariant.product.is_exact();
}

bool exact_invariants_equal(const StrictClassInvariant& x, const StrictClassInvariant& y) {
  std::array<mpq_class, 3> sx, sy;
  for (int i = 0; i < 3; ++i) {
    sx[static_cast<size_t>(i)] = x.squares[static_cast<size_t>(i)].rational();
    sy[static_cast<size_t>(i)] = y.squares[static_cast<size_t>(i)].rational();
  }
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  return sx == sy && x.product.rational() == y.product.rational();
}

}  // namespace

IsoClassDescriptor descriptor(const QuarticTriple& t) {
  SqForm own = detect(t);
  IsoClassDescriptor d;
  d.kind = own.kind;
  d.strict_classes.push_back(own.kind == TripleCase::Generic ? own.invariant
                                                             : invariant_of(own));
  if (own.kind == TripleCase::Generic) return d;

  if (form_is_exact(own)) {
    // iterate the moves to a fixpoint; the Proposition caps it at three
    std::vector<SqForm> work{own};
    std::vector<StrictClassInvariant> seen{d.strict_classes.front()};
    while (!work.empty()) {
      SqForm f = work.back();
      work.pop_back();
      for (SqForm& c : companions_of(f)) {
        StrictClassInvariant inv = invariant_of(c);
        bool known = false;
        for (const auto& s : seen)
          if (exact_invariants_equal(s, inv)) {
            known = true;
            break;
          }
        if (known) continue;
        seen.push_back(inv);
        if (seen.size() > 3)
          throw internal_error("descriptor closure exceeds three strict classes");
        work.push_back(c);
      }
    }
    d.strict_classes = std::move(seen);
    return d;
  }

  // interval path: the moves are involutions at square level, so one round
  // of companions already closes the orbit
  for (SqForm& c : companions_of(own)) d.strict_classes.push_back(invariant_of(c));
  if (d.strict_classes.size() > 3)
    throw internal_error("descriptor closure exceeds three strict classes");
  return d;
}

std::vector<StrictClassInvariant> associated_forms(const QuarticTriple& t) {
  IsoClassDescriptor d = descriptor(t);
  return {d.strict_classes.begin() + 1, d.strict_classes.end()};
}

namespace {

// true = certified distinct, false = certified equal, nullopt = unknown
std::optional<bool> invariants_distinct(const StrictClassInvariant& x,
                                        const StrictClassInvariant& y) {
  auto pc = qval_try_compare(x.product, y.product);
  if (pc && *pc != Cmp::Equal) return true;

  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  bool some_perm_possible = false;
  bool some_perm_equal = false;
  for (const auto& perm : perms) {
    bool refuted = false, all_equal = true;
    for (int i = 0; i < 3; ++i) {
      auto c = qval_try_compare(x.squares[static_cast<size_t>(i)],
                                y.squares[static_cast<size_t>(perm[i])]);
      if (c && *c != Cmp::Equal) {
        refuted = true;
        break;
      }
      if (!c) all_equal = false;
    }
    if (refuted) continue;
    some_perm_possible = true;
    if (all_equal) some_perm_equal = true;
  }
  if (!some_perm_possible) return true;
  if (some_perm_equal && pc && *pc == Cmp::Equal) return false;
  return std::nullopt;
}

}  // namespace

IsoVerdict are_isomorphic(const QuarticTriple& t1, const QuarticTriple& t2) {
  IsoClassDescriptor d1 = descriptor(t1);
  IsoClassDescriptor d2 = descriptor(t2);
  bool unknown = false;
  for (const auto& i1 : d1.strict_classes)
    for (const auto& i2 : d2.strict_classes) {
      auto r = invariants_distinct(i1, i2);
      if (r && !*r) return IsoVerdict::Isomorphic;
      if (!r) unknown = true;
    }
  return unknown ? IsoVerdict::Undecided : IsoVerdict::NonIsomorphic;
}

ComplexBall CVal::ball(Precision prec) const {
  return ComplexBall(re.ball(prec), im.ball(prec));
}

VaryResult vary_the_curve(const QVal& a, const QVal& b, int branch) {
  if (branch != 1 && branch != -1) throw domain_error("vary_the_curve: branch must be +-1");
  QVal s = a + QVal::exact(2);
  if (s.is_exact() && s.rational() == 0)
    throw domain_error("vary_the_curve: a = -2");
  Cmp sign = qval_compare(s, QVal::exact(0));
  if (sign != Cmp::Greater)
    throw domain_error("vary_the_curve: a + 2 must be positive for a real image");

  QVal droot = s.sqrt();  // positive root
  QVal two_b = QVal::exact(2) * b;
  QVal bd = two_b / droot;
  if (branch < 0) bd = -bd;

  VaryResult out;
  QVal aa = mobius_16(a).with_expr("-2 + 16/((" + a.expr() + ") + 2)");
  out.image = QuarticTriple{aa, bd, bd};

  QVal zero = QVal::exact(0);
  QVal half_e = (s.sqrt().sqrt() / QVal::exact(2)).with_expr("(" + a.expr() + " + 2)^(1/4)/2");
  CVal m11, m12, m21, m22, m13, m23, m31, m32, m33;
  if (branch > 0) {
    m11 = {half_e, zero};
    m22 = {-half_e, zero};
  } else {
    // e^2 = d < 0, so e is purely imaginary
    m11 = {zero, half_e};
    m22 = {zero, -half_e};
  }
  m12 = m21 = m11;
  m13 = m23 = m31 = m32 = {zero, zero};
  m33 = {QVal::exact(1), zero};
  out.witness = {{{m11, m12, m13}, {m21, m22, m23}, {m31, m32, m33}}};
  return out;
}

std::string to_string(AutGroupLabel g) {
  switch (g) {
    case AutGroupLabel::V4: return "V4";
    case AutGroupLabel::D8: return "D8";
    case AutGroupLabel::S4: return "S4";
    case AutGroupLabel::G16: return "G16";
    case AutGroupLabel::G48: return "G48";
    case AutGroupLabel::G96: return "G96";
    case AutGroupLabel::GL3F2: return "GL(3,F2)";
  }
  return "?";
}

AutGroupLabel classify_aut_group(const QuarticTriple& t) {
  for (const QVal* v : {&t.a, &t.b, &t.c})
    if (!v->is_exact())
      throw domain_error("classify_aut_group: exact real entries required");
  if (!is_nonsingular(t)) throw domain_error("classify_aut_group: singular quartic");

  mpq_class a = t.a.rational(), b = t.b.rational(), c = t.c.rational();
  int zeros = (a == 0) + (b == 0) + (c == 0);
  if (zeros >= 2) {
    mpq_class a0 = a != 0 ? a : b != 0 ? b : c;
    mpq_class c1 = -2 + 16 / (a0 + 2);
    mpq_class c2 = -2 + 16 / (2 - a0);
    for (const mpq_class& v : {a0, c1, c2}) {
      mpq_class av = abs(v);
      if (av == 0 || av == 6) return AutGroupLabel::G96;
    }
    return AutGroupLabel::G16;
  }
  mpq_class sa = a * a, sb = b * b, sc = c * c;
  if (sa == sb && sb == sc) return AutGroupLabel::S4;
  if (sa == sb || sb == sc || sa == sc) {
    // normalize to (a0, B, B)
    mpq_class a0, B;
    if (sb == sc) {
      a0 = (b == c) ? a : -a;
      B = b;
    } else if (sa == sc) {
      a0 = (a == c) ? b : -b;
      B = a;
    } else {
      a0 = (a == b) ? c : -c;
      B = a;
    }
    mpq_class compA = -2 + 16 / (a0 + 2);
    mpq_class compBsq = 4 * B * B / (a0 + 2);
    if (compA * compA == compBsq) return AutGroupLabel::S4;
    return AutGroupLabel::D8;
  }
  return AutGroupLabel::V4;
}

namespace {

std::string gap_string(const RealBall& gap) {
  // decimal lower bound, enough digits to be meaningful
  mpq_class lo = gap.lower();
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, lo.get_mpq_t(), MPFR_RNDD);
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.6Rg", t);
  mpfr_clear(t);
  return buf;
}

}  // namespace

DistinctnessCertificate distinctness_certificate(const AlphaTable& table) {
  DistinctnessCertificate cert;
  cert.m = table.m;
  auto quartics = table.quartic_divisors();
  cert.vacuous = quartics.size() < 2;

  const AlphaEntry& a1e = table.entry(1);
  QVal a1 = qval_of(a1e.alpha);
  QVal one = QVal::exact(1);

  std::vector<std::pair<long, QVal>> ratios;
  for (long d : quartics) {
    const AlphaEntry& ade = table.entry(d);
    if (ade.alpha == a1e.alpha)
      throw domain_error("distinctness: duplicated alpha entry");
    QVal ad = qval_of(ade.alpha);
    std::string a1n = a1e.alpha->name, adn = ade.alpha->name;

    RealBall gap = certified_gap(a1, ad);
    cert.records.push_back({a1n, adn, ">", gap_string(gap)});

    QVal r = ((one - a1.square()) / (one - ad.square()))
                 .with_expr("(1 - " + a1n + "^2)/(1 - " + adn + "^2)");
    RealBall gap0 = certified_gap(r, QVal::exact(0));
    cert.records.push_back({r.expr(), "0", ">", gap_string(gap0)});
    RealBall gap1 = certified_gap(one, r);
    cert.records.push_back({r.expr(), "1", "<", gap_string(gap1)});
    ratios.emplace_back(d, r);
  }

  for (size_t i = 0; i < ratios.size(); ++i)
    for (size_t j = i + 1; j < ratios.size(); ++j) {
      const auto& [di, ri] = ratios[i];
      const auto& [dj, rj] = ratios[j];
      if (table.entry(di).alpha == table.entry(dj).alpha)
        throw domain_error("distinctness: duplicated alpha entry");
      Cmp c = qval_compare(ri, rj);
      if (c == Cmp::Equal)
        throw domain_error("distinctness: ratios coincide");
      RealBall gap = c == Cmp::Less ? certified_gap(rj, ri) : certified_gap(ri, rj);
      cert.records.push_back({ri.expr(), rj.expr(), "!=", gap_string(gap)});
    }
  return cert;
}

}  // namespace quartjac
