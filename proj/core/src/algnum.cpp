#include "quartjac/algnum.hpp"

#include <algorithm>

#include "quartjac/lll.hpp"

namespace quartjac {

bool AlgebraicReal::equals_rational(const mpq_class& q) const {
  if (q < lo || q > hi) return false;
  return defining.eval(q) == 0;
}

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  IntPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    const IntPoly& f = seq[seq.size() - 2];
    const IntPoly& g = seq.back();
    // remainder of f by g scaled by a positive factor (lc(g)^2 per
    // reduction step keeps the sign semantics of the rational remainder)
    IntPoly r = f;
    const mpz_class& lead = g.leading();
    mpz_class lead2 = lead * lead;
    while (!r.is_zero() && r.degree() >= g.degree()) {
      long shift = r.degree() - g.degree();
      mpz_class c = r.leading() * lead;
      std::vector<mpz_class> rc(r.coeffs());
      for (auto& v : rc) v *= lead2;
      for (long i = 0; i <= g.degree(); ++i)
        rc[static_cast<size_t>(shift + i)] -= c * g.coeff(static_cast<size_t>(i));
      r = IntPoly(std::move(rc));
    }
    if (r.is_zero()) break;
    mpz_class cont = r.content();
    IntPoly next = -r;
    if (cont > 1) {
      std::vector<mpz_class> nc(next.coeffs());
      for (auto& v : nc) v /= cont;
      next = IntPoly(std::move(nc));
    }
    seq.push_back(std::move(next));
  }
  return seq;
}

namespace {

long sign_variations(const std::vector<IntPoly>& seq, const mpq_class& t) {
  long var = 0;
  int prev = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(t);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

long sturm_count_open(const std::vector<IntPoly>& seq, const mpq_class& lo,
                      const mpq_class& hi) {
  if (seq.empty()) return 0;
  if (seq[0].sign_at(lo) == 0 || seq[0].sign_at(hi) == 0)
    throw internal_error("sturm_count_open: endpoint is a root");
  if (lo >= hi) return 0;
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

IntPoly compose_g(const IntPoly& f) {
  if (f.is_zero() || f.leading() != 1 || f.degree() < 1)
    throw domain_error("compose_g: f must be monic of degree >= 1");
  const long n = f.degree();
  IntPoly a = IntPoly::from_coeffs({3, 0, 1}).power(3).scaled(64);  // 64 (x^2+3)^3
  IntPoly b = IntPoly::from_coeffs({-1, 0, 1}).power(2);            // (x^2-1)^2
  std::vector<IntPoly> apow(static_cast<size_t>(n) + 1), bpow(static_cast<size_t>(n) + 1);
  apow[0] = IntPoly::constant(1);
  bpow[0] = IntPoly::constant(1);
  for (long i = 1; i <= n; ++i) {
    apow[static_cast<size_t>(i)] = apow[static_cast<size_t>(i - 1)] * a;
    bpow[static_cast<size_t>(i)] = bpow[static_cast<size_t>(i - 1)] * b;
  }
  IntPoly g;
  for (long k = 0; k <= n; ++k) {
    const mpz_class& fk = f.coeff(static_cast<size_t>(k));
    if (fk == 0) continue;
    g = g + (apow[static_cast<size_t>(k)] * bpow[static_cast<size_t>(n - k)]).scaled(fk);
  }
  return g;
}

namespace {

struct Isolator {
  IntPoly sf;
  std::vector<IntPoly> seq;
  std::vector<AlgebraicReal> out;

  void emit_interval(const mpq_class& lo, const mpq_class& hi) {
    AlgebraicReal r;
    r.defining = sf;
    r.lo = lo;
    r.hi = hi;
    r.cache = RealBall::from_interval(lo, hi, 64);
    out.push_back(std::move(r));
  }

  void emit_exact(const mpq_class& v) {
    AlgebraicReal r;
    r.defining = sf;
    r.lo = v;
    r.hi = v;
    r.cache = RealBall::from_mpq(v, 96);
    out.push_back(std::move(r));
  }

  // (lo, hi) with sf(lo) != 0, sf(hi) != 0
  void isolate(const mpq_class& lo, const mpq_class& hi) {
    long cnt = sturm_count_open(seq, lo, hi);
    if (cnt == 0) return;
    if (cnt == 1) {
      emit_interval(lo, hi);
      return;
    }
    mpq_class mid = (lo + hi) / 2;
    if (sf.sign_at(mid) != 0) {
      isolate(lo, mid);
      isolate(mid, hi);
      return;
    }
    // the midpoint is an exact rational root; carve it out
    emit_exact(mid);
    mpq_class delta = (hi - lo) / 4;
    while (true) {
      mpq_class ml = mid - delta, mr = mid + delta;
      if (sf.sign_at(ml) != 0 && sf.sign_at(mr) != 0 &&
          sturm_count_open(seq, lo, ml) + sturm_count_open(seq, mr, hi) == cnt - 1) {
        isolate(lo, ml);
        isolate(mr, hi);
        return;
      }
      delta /= 2;
    }
  }
};

}  // namespace

std::vector<AlgebraicReal> isolate_roots_unit_interval(const IntPoly& g) {
  if (g.is_zero()) throw domain_error("isolate_roots_unit_interval: zero polynomial");
  IntPoly sf = g.squarefree_part();
  // endpoint roots are outside the open interval; strip them
  if (sf.eval(mpz_class(0)) == 0) sf = sf.exact_divide(IntPoly::x()).normalized();
  if (sf.eval(mpz_class(1)) == 0)
    sf = sf.exact_divide(IntPoly::from_coeffs({-1, 1})).normalized();
  if (sf.degree() < 1) return {};
  Isolator iso;
  iso.sf = sf;
  iso.seq = sturm_sequence(sf);
  iso.isolate(0, 1);
  std::sort(iso.out.begin(), iso.out.end(),
            [](const AlgebraicReal& x, const AlgebraicReal& y) { return x.lo < y.lo; });
  return iso.out;
}

namespace {

// one bisection step batch; maintains sign change sf(lo) * sf(hi) < 0
void bisect_steps(AlgebraicReal& x, int steps) {
  if (x.is_rational()) return;
  int slo = x.defining.sign_at(x.lo);
  for (int i = 0; i < steps; ++i) {
    mpq_class mid = (x.lo + x.hi) / 2;
    int sm = x.defining.sign_at(mid);
    if (sm == 0) {
      x.lo = x.hi = mid;
      x.cache = RealBall::from_mpq(mid, 96);
      return;
    }
    if (sm == slo)
      x.lo = mid;
    else
      x.hi = mid;
  }
}

}  // namespace

RealBall refine(AlgebraicReal& x, Precision prec) {
  if (x.is_rational()) {
    x.cache = RealBall::from_mpq(x.lo, prec + 8);
    return x.cache;
  }
  if (x.cache.radius_log2() < -prec) return x.cache;

  // establish a reasonable starting width by plain bisection
  mpq_class coarse(1, mpz_class(1) << 32);
  while (x.hi - x.lo > coarse && !x.is_rational()) bisect_steps(x, 8);
  if (x.is_rational()) return refine(x, prec);

  RealBall enc = x.cache.radius_log2() < RealBall::from_interval(x.lo, x.hi, 64).radius_log2()
                     ? x.cache
                     : RealBall::from_interval(x.lo, x.hi, 64);
  const IntPoly deriv = x.defining.derivative();
  long acc = -enc.radius_log2();
  int stall = 0;
  while (acc < prec) {
    Precision p_work = std::max<Precision>(2 * acc + 64, 128);
    if (p_work > precision_cap()) throw precision_exhausted("refine: precision cap");
    RealBall X = RealBall::from_interval(enc.lower(), enc.upper(), p_work);
    RealBall fp = deriv.eval_ball(X);
    bool stepped = false;
    if (!fp.contains_zero()) {
      mpq_class m = X.midpoint();
      RealBall fm = x.defining.eval_ball(RealBall::from_mpq(m, p_work));
      RealBall N = RealBall::from_mpq(m, p_work) - fm / fp;
      mpq_class nlo = std::max(N.lower(), X.lower());
      mpq_class nhi = std::min(N.upper(), X.upper());
      if (nlo <= nhi) {
        RealBall next = RealBall::from_interval(nlo, nhi, p_work);
        if (next.radius_log2() < enc.radius_log2()) {
          enc = next;
          stepped = true;
        }
      } else {
        throw internal_error("refine: Newton step lost the root");
      }
    }
    if (!stepped) {
      // derivative straddles zero or no contraction: fall back to bisection
      bisect_steps(x, 32);
      if (x.is_rational()) return refine(x, prec);
      enc = RealBall::from_interval(x.lo, x.hi, p_work);
      if (++stall > 1024) throw precision_exhausted("refine: no convergence");
    }
    acc = -enc.radius_log2();
  }
  // the Newton enclosure contains the root and lies inside [lo, hi]
  x.cache = enc;
  return enc;
}

namespace {

mpz_class round_q(const mpq_class& v) {
  mpz_class n;
  if (v >= 0) {
    mpz_class t = 2 * v.get_num() + v.get_den();
    mpz_fdiv_q(n.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * v.get_den()).get_mpz_t());
  } else {
    mpz_class t = 2 * v.get_num() - v.get_den();
    mpz_cdiv_q(n.get_mpz_t(), t.get_mpz_t(), mpz_class(2 * v.get_den()).get_mpz_t());
  }
  return n;
}

// candidate must divide `defining` and have the root of x in its own right
bool verify_candidate(const IntPoly& cand, AlgebraicReal& x) {
  if (cand.degree() < 1) return false;
  if (!cand.divides(x.defining)) return false;
  for (int attempt = 0; attempt < 8; ++attempt) {
    RealBall ball = refine(x, std::max<Precision>(64L << attempt, 64));
    mpq_class lo = ball.lower(), hi = ball.upper();
    if (cand.sign_at(lo) == 0 || cand.sign_at(hi) == 0) continue;  // endpoint hit, tighten
    auto seq = sturm_sequence(cand);
    return sturm_count_open(seq, lo, hi) == 1;
  }
  return false;
}

}  // namespace

IntPoly minimal_polynomial(AlgebraicReal& x, long degree_bound) {
  if (x.minimal) return *x.minimal;
  if (x.defining.is_zero()) throw domain_error("minimal_polynomial: no defining polynomial");
  if (x.is_rational()) {
    IntPoly cand({-x.lo.get_num(), x.lo.get_den()});
    cand = cand.normalized();
    x.minimal = cand;
    return cand;
  }
  long maxdeg = std::min(degree_bound, x.defining.degree());
  if (maxdeg < 1) throw domain_error("minimal_polynomial: degree_bound < 1");
  const long bits_g = static_cast<long>(x.defining.max_coeff_bits());

  for (long k = 1; k <= maxdeg; ++k) {
    Precision p_max = 2 * k * (bits_g + k + 32) + 256;
    Precision p = std::min<Precision>(64 * (k + 1), p_max);
    while (true) {
      RealBall ball = refine(x, p + 32);
      mpq_class xm = ball.midpoint();
      mpz_class scale = mpz_class(1) << static_cast<unsigned long>(p);
      std::vector<std::vector<mpz_class>> rows(
          static_cast<size_t>(k) + 1,
          std::vector<mpz_class>(static_cast<size_t>(k) + 2, mpz_class(0)));
      mpq_class pw = 1;
      for (long i = 0; i <= k; ++i) {
        rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        rows[static_cast<size_t>(i)][static_cast<size_t>(k) + 1] = round_q(pw * scale);
        pw *= xm;
      }
      lll_reduce(rows);
      bool done = false;
      for (const auto& row : rows) {
        std::vector<mpz_class> coeffs(row.begin(), row.end() - 1);
        IntPoly cand = IntPoly(std::move(coeffs)).normalized();
        if (verify_candidate(cand, x)) {
          x.minimal = cand;
          done = true;
          break;
        }
      }
      if (done) return *x.minimal;
      if (p >= p_max) break;
      p = std::min<Precision>(p * 4, p_max);
    }
  }
  throw recognition_error("minimal_polynomial: no candidate verified within the degree bound");
}

std::map<long, size_t> match_roots(std::vector<AlgebraicReal>& roots,
                                   const std::vector<std::pair<long, RealBall>>& targets) {
  if (roots.size() != targets.size())
    throw domain_error("match_roots: root and target counts differ");
  // tighten the roots below the target radii so fuzz cannot double-match
  long tight = 64;
  for (const auto& [d, ball] : targets)
    tight = std::max(tight, 8 - ball.radius_log2());
  tight = std::min<long>(tight, precision_cap());
  for (auto& r : roots) refine(r, tight);

  std::map<long, size_t> assignment;
  std::vector<bool> used(roots.size(), false);
  for (const auto& [d, ball] : targets) {
    mpq_class tlo = ball.lower(), thi = ball.upper();
    size_t found = roots.size();
    for (size_t i = 0; i < roots.size(); ++i) {
      mpq_class rlo = roots[i].cache.lower(), rhi = roots[i].cache.upper();
      bool intersects = !(thi < rlo || rhi < tlo);
      if (!intersects) continue;
      if (found != roots.size())
        throw undecidable_error("match_roots: target ball overlaps two isolating intervals");
      found = i;
    }
    if (found == roots.size() || used[found])
      throw undecidable_error("match_roots: no unique root for target");
    used[found] = true;
    assignment[d] = found;
  }
  return assignment;
}

}  // namespace quartjac
