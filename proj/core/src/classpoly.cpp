#include "quartjac/classpoly.hpp"

#include <algorithm>
#include <cmath>

namespace quartjac {

bool is_even_squarefree(long m) {
  if (m < 2 || m % 2 != 0) return false;
  if (m % 4 == 0) return false;
  long r = m;
  for (long p = 3; p * p <= r; p += 2) {
    if (r % p == 0) {
      r /= p;
      if (r % p == 0) return false;
    }
  }
  return true;
}

OrderSpec OrderSpec::create(long m) {
  if (!is_even_squarefree(m))
    throw domain_error("m must be a positive even squarefree integer >= 2");
  return OrderSpec{m};
}

bool FormTriple::is_reduced() const {
  if (a <= 0) return false;
  if (!(std::abs(b) <= a && a <= c)) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

FormTriple reduce_form(long a0, long b0, long c0) {
  mpz_class a = a0, b = b0, c = c0;
  if (a <= 0 || b * b - 4 * a * c >= 0)
    throw domain_error("reduce_form: form is not positive definite");
  while (true) {
    // normalize b into (-a, a]
    mpz_class r = ((b % (2 * a)) + 2 * a) % (2 * a);
    if (r > a) r -= 2 * a;
    mpz_class q = (b - r) / (2 * a);
    c = a * q * q - b * q + c;
    b = r;
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    if (a == c && b < 0) b = -b;
    break;
  }
  FormTriple out{a.get_si(), b.get_si(), c.get_si()};
  if (!out.is_reduced() || out.disc() != b0 * b0 - 4 * a0 * c0)
    throw internal_error("reduce_form: reduction did not converge");
  return out;
}

std::vector<FormTriple> enumerate_reduced_forms(const OrderSpec& order) {
  const long m = order.m;
  std::vector<FormTriple> out;
  for (long b = 0; 3 * b * b <= 4 * m; b += 2) {
    long n4 = b * b + 4 * m;
    if (n4 % 4 != 0) continue;
    long n = n4 / 4;  // n = a*c
    for (long a = std::max(b, 1L); a * a <= n; ++a) {
      if (n % a != 0) continue;
      long c = n / a;
      out.push_back({a, b, c});
      if (b > 0 && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const FormTriple& x, const FormTriple& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  return out;
}

FormTriple two_torsion_form(const OrderSpec& order, long d) {
  if (d <= 0 || d % 2 == 0 || order.m % d != 0)
    throw domain_error("d must be an odd positive divisor of m");
  return reduce_form(d, 0, order.m / d);
}

ComplexBall tau_of_form(const FormTriple& form, const OrderSpec& order, Precision prec) {
  RealBall re = RealBall::from_mpq(mpq_class(-form.b, 2 * form.a), prec);
  RealBall im = RealBall::from_mpz(order.m, prec).sqrt() /
                RealBall::exact_int(form.a, prec);
  return ComplexBall(re, im);
}

namespace {

// divisor-power sums sigma_k(1..N)
std::vector<mpz_class> sigma_table(unsigned k, long N) {
  std::vector<mpz_class> s(static_cast<size_t>(N) + 1, mpz_class(0));
  for (long d = 1; d <= N; ++d) {
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
    for (long n = d; n <= N; n += d) s[static_cast<size_t>(n)] += dk;
  }
  return s;
}

// heuristic bits of |j(tau)| ~ exp(2 pi Im tau)
long magnitude_bits(const ComplexBall& tau) {
  double im = mpq_class(tau.imag().upper()).get_d();
  return static_cast<long>(2 * 3.14159265358979 * im * 1.4426950408889634) + 16;
}

struct Attempt {
  ComplexBall value;
  bool ok;
};

Attempt j_eval_attempt(const ComplexBall& tau, Precision prec, Precision p_work) {
  const RealBall re = tau.real().with_precision(p_work);
  const RealBall im = tau.imag().with_precision(p_work);
  RealBall two_pi = RealBall::pi(p_work) + RealBall::pi(p_work);
  ComplexBall q = ComplexBall(-(two_pi * im), two_pi * re).exp();

  mpq_class qub = q.abs_upper_ball().upper();
  if (qub >= mpq_class(9, 10))
    throw domain_error("j_eval: Im tau too small (|q| too close to 1)");

  // heuristic term count: |q|^N < 2^-(prec + guard + magnitude), then the
  // usual safety factor of two on the count
  long guard = 32;
  double lg_q = std::log2(qub.get_d());
  long target = prec + guard + magnitude_bits(tau);
  long N = static_cast<long>(static_cast<double>(target) / -lg_q) + 2;
  N *= 2;
  if (N < 24) N = 24;

  // enforce a geometric tail: rho = ((N+2)/(N+1))^6 * qub < 7/8
  auto rho_of = [&](long NN) {
    mpq_class r(NN + 2, NN + 1);
    mpq_class r6 = r * r;
    r6 = r6 * r6 * r6;
    return r6 * qub;
  };
  while (rho_of(N) >= mpq_class(7, 8)) N *= 2;

  auto s3 = sigma_table(3, N);
  auto s5 = sigma_table(5, N);

  ComplexBall e4 = ComplexBall::from_real(RealBall::exact_int(1, p_work));
  ComplexBall e6 = e4;
  ComplexBall qpow = q;
  for (long n = 1; n <= N; ++n) {
    ComplexBall t4 = qpow * ComplexBall::from_real(
        RealBall::from_mpz(240 * s3[static_cast<size_t>(n)], p_work));
    ComplexBall t6 = qpow * ComplexBall::from_real(
        RealBall::from_mpz(504 * s5[static_cast<size_t>(n)], p_work));
    e4 = e4 + t4;
    e6 = e6 - t6;
    if (n < N) qpow = qpow * q;
  }

  // certified tail bound: sum_{n>N} C n^6 qub^n <= C (N+1)^6 qub^(N+1) / (1 - rho)
  mpq_class rho = rho_of(N);
  RealBall qub_ball = RealBall::from_mpq(qub, 64);
  RealBall tail_pow = qub_ball;  // qub^(N+1) via binary power
  {
    RealBall base = qub_ball;
    unsigned long e = static_cast<unsigned long>(N);  // already have ^1
    RealBall acc = RealBall::exact_int(1, 64);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base.square();
      e >>= 1;
    }
    tail_pow = tail_pow * acc;
  }
  mpz_class n1p6;
  mpz_ui_pow_ui(n1p6.get_mpz_t(), static_cast<unsigned long>(N + 1), 6);
  RealBall factor = RealBall::from_mpz(n1p6, 64) /
                    RealBall::from_mpq(1 - rho, 64);
  mpq_class tail4 = (RealBall::exact_int(240, 64) * factor * tail_pow).upper();
  mpq_class tail6 = (RealBall::exact_int(504, 64) * factor * tail_pow).upper();
  RealBall pad4 = RealBall::from_interval(-tail4, tail4, p_work);
  RealBall pad6 = RealBall::from_interval(-tail6, tail6, p_work);
  e4 = e4 + ComplexBall(pad4, pad4);
  e6 = e6 + ComplexBall(pad6, pad6);

  ComplexBall e4cubed = e4 * e4 * e4;
  ComplexBall delta1728 = e4cubed - e6 * e6;  // 1728 * Delta
  if (delta1728.contains_zero()) return {ComplexBall(), false};
  ComplexBall j = ComplexBall::from_real(RealBall::exact_int(1728, p_work)) *
                  e4cubed / delta1728;
  if (j.radius_log2() >= -prec) return {j, false};
  return {j, true};
}

}  // namespace

ComplexBall j_eval(const ComplexBall& tau, Precision prec) {
  if (!(tau.imag() - RealBall::from_mpq(mpq_class(1, 10), 64)).is_positive())
    throw domain_error("j_eval: Im tau must be certified >= 1/10");
  Precision start = prec + magnitude_bits(tau) + 64;
  return refine_until(
      [&](Precision p_work) {
        Attempt a = j_eval_attempt(tau, prec, p_work);
        if (!a.ok) throw undecidable_error("j_eval: radius target missed");
        return a.value;
      },
      start);
}

Precision required_precision(const OrderSpec& order) {
  auto forms = enumerate_reduced_forms(order);
  mpq_class inv_a_sum = 0;
  for (const auto& f : forms) inv_a_sum += mpq_class(1, f.a);
  // ceil(pi sqrt(m) sum / ln 2) via upper-bound ball arithmetic
  RealBall v = RealBall::pi(96) * RealBall::from_mpz(order.m, 96).sqrt() *
               RealBall::from_mpq(inv_a_sum, 96);
  mpfr_t ln2;
  mpfr_init2(ln2, 96);
  mpfr_const_log2(ln2, MPFR_RNDD);
  mpq_class ln2_lo;
  mpfr_get_q(ln2_lo.get_mpq_t(), ln2);
  mpfr_clear(ln2);
  mpq_class bound = v.upper() / ln2_lo;
  mpz_class bits;
  mpz_cdiv_q(bits.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
  return bits.get_si() + 32 + 10 * static_cast<long>(forms.size());
}

ClassPolyResult class_polynomial(const OrderSpec& order) {
  auto forms = enumerate_reduced_forms(order);
  const long h = static_cast<long>(forms.size());
  Precision start = required_precision(order);

  return refine_until(
      [&](Precision p) {
        std::vector<std::pair<FormTriple, ComplexBall>> roots;
        roots.reserve(forms.size());
        for (const auto& form : forms) {
          ComplexBall tau = tau_of_form(form, order, p + 64);
          roots.emplace_back(form, j_eval(tau, p));
        }
        // expand prod (x - j_i)
        std::vector<ComplexBall> poly{
            ComplexBall::from_real(RealBall::exact_int(1, p))};
        for (const auto& [form, j] : roots) {
          std::vector<ComplexBall> next(poly.size() + 1,
                                        ComplexBall::from_real(RealBall::exact_int(0, p)));
          for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * j;
          }
          poly = std::move(next);
        }
        // round to integers with certified residual < 1/4
        const mpq_class quarter(1, 4);
        std::vector<mpz_class> coeffs(poly.size());
        mpq_class worst = 0;
        for (size_t i = 0; i < poly.size(); ++i) {
          const RealBall& im = poly[i].imag();
          if (!im.contains_zero() || im.upper() >= quarter || -im.lower() >= quarter)
            throw undecidable_error("class polynomial: imaginary residue too large");
          const RealBall& re = poly[i].real();
          mpq_class mid = re.midpoint();
          mpz_class n;
          mpz_class num2 = 2 * mid.get_num() + mid.get_den();
          if (mid >= 0)
            mpz_fdiv_q(n.get_mpz_t(), num2.get_mpz_t(),
                       mpz_class(2 * mid.get_den()).get_mpz_t());
          else {
            mpz_class num2n = 2 * mid.get_num() - mid.get_den();
            mpz_cdiv_q(n.get_mpz_t(), num2n.get_mpz_t(),
                       mpz_class(2 * mid.get_den()).get_mpz_t());
          }
          mpq_class lo = re.lower(), hi = re.upper();
          mpq_class resid = std::max(mpq_class(n - lo), mpq_class(hi - n));
          if (resid >= quarter)
            throw undecidable_error("class polynomial: rounding residual >= 1/4");
          worst = std::max(worst, resid);
          coeffs[i] = n;
        }
        IntPoly f(std::move(coeffs));
        if (f.degree() != h || f.leading() != 1)
          throw internal_error("class polynomial is not monic of degree h");
        ClassPolyResult result;
        result.f = std::move(f);
        result.h = h;
        result.roots = std::move(roots);
        result.residual = RealBall::from_mpq(worst, 64);
        result.precision = p;
        return result;
      },
      start);
}

}  // namespace quartjac
