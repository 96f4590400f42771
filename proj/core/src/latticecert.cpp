#include "quartjac/latticecert.hpp"

#include <numeric>

#include "quartjac/classpoly.hpp"

namespace quartjac {

void QuadInt::normalize() {
  if (den == 0) throw internal_error("QuadInt: zero denominator");
  if (den < 0) {
    den = -den;
    a = -a;
    b = -b;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    a /= g;
    b /= g;
    den /= g;
  }
}

QuadInt QuadInt::make(long m, mpz_class a, mpz_class b, mpz_class den) {
  QuadInt q;
  q.m = m;
  q.a = std::move(a);
  q.b = std::move(b);
  q.den = std::move(den);
  q.normalize();
  return q;
}

namespace {
void check_ring(const QuadInt& x, const QuadInt& y) {
  if (x.m != y.m) throw internal_error("QuadInt: mixed rings");
}
}  // namespace

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  check_ring(x, y);
  return QuadInt::make(x.m, x.a * y.den + y.a * x.den, x.b * y.den + y.b * x.den,
                       x.den * y.den);
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  check_ring(x, y);
  return QuadInt::make(x.m, x.a * y.den - y.a * x.den, x.b * y.den - y.b * x.den,
                       x.den * y.den);
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  check_ring(x, y);
  return QuadInt::make(x.m, x.a * y.a - mpz_class(x.m) * x.b * y.b,
                       x.a * y.b + x.b * y.a, x.den * y.den);
}

bool QuadInt::in_lambda(long d) const {
  // a/den in Z and (b/den)*d in Z
  if (!mpz_divisible_p(a.get_mpz_t(), den.get_mpz_t())) return false;
  mpz_class bd = b * d;
  return mpz_divisible_p(bd.get_mpz_t(), den.get_mpz_t());
}

std::string QuadInt::to_string() const {
  auto frac = [&](const mpz_class& num) {
    mpq_class q(num, den);
    q.canonicalize();
    return q.get_str();
  };
  return frac(a) + " + " + frac(b) + "·ω";
}

std::pair<long, long> find_uv(long m, long d) {
  if (d <= 0 || d % 2 == 0 || m % d != 0)
    throw domain_error("find_uv: d must be an odd positive divisor of m");
  long md = m / d;
  long u0, v0;
  {
    // extended gcd on (d, m/d); coprime since m is squarefree
    long old_r = d, r = md, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      long q = old_r / r;
      std::tie(old_r, r) = std::pair(r, old_r - q * r);
      std::tie(old_s, s) = std::pair(s, old_s - q * s);
      std::tie(old_t, t) = std::pair(t, old_t - q * t);
    }
    if (old_r != 1) throw domain_error("find_uv: gcd(d, m/d) != 1 (m not squarefree?)");
    u0 = old_s;
    v0 = old_t;
  }
  // shift v by multiples of d (odd, hence invertible mod 4) to force 4 | v
  long dinv4 = (d % 4 == 1) ? 1 : 3;
  long r = ((-v0 % 4) * dinv4 % 4 + 4) % 4;
  long v_a = v0 + r * d, v_b = v0 + (r - 4) * d;
  long k = std::abs(v_b) < std::abs(v_a) ? r - 4 : r;
  long v = v0 + k * d;
  long u = u0 - k * md;
  if (u * d + v * md != 1 || v % 4 != 0) throw internal_error("find_uv: adjustment failed");
  return {u, v};
}

namespace {

mpz_class det4(const std::array<std::array<mpz_class, 4>, 4>& mat) {
  // Laplace expansion along the first row of each minor; n = 4 is tiny
  auto det3 = [](const std::array<std::array<mpz_class, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  mpz_class total = 0;
  for (int col = 0; col < 4; ++col) {
    std::array<std::array<mpz_class, 3>, 3> minor;
    for (int i = 1; i < 4; ++i) {
      int mj = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == col) continue;
        minor[static_cast<size_t>(i - 1)][static_cast<size_t>(mj++)] =
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
    }
    mpz_class term = mat[0][static_cast<size_t>(col)] * det3(minor);
    if (col % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// coordinates of z in the basis {1, omega/d}; throws if not in Lambda_d
std::pair<mpz_class, mpz_class> lambda_coords(const QuadInt& z, long d) {
  if (!z.in_lambda(d))
    throw internal_error("certificate invalid: image not in Lambda_d x Lambda_d");
  mpz_class c0 = z.a / z.den;
  mpz_class c1 = z.b * d / z.den;
  return {c0, c1};
}

}  // namespace

IsoCertificate build_certificate_with(long m, long d, long u, long v) {
  if (!is_even_squarefree(m)) throw domain_error("certificate: invalid m");
  if (d <= 0 || d % 2 == 0 || m % d != 0)
    throw domain_error("certificate: d must be an odd positive divisor of m");
  if (u * d + v * (m / d) != 1) throw domain_error("certificate: u d + v m/d != 1");
  if (v % 4 != 0) throw domain_error("certificate: v must be a multiple of 4");

  IsoCertificate cert;
  cert.m = m;
  cert.d = d;
  cert.u = u;
  cert.v = v;

  // scaled matrix M' = (1/d) [[u d, 2 omega], [(v/2) omega, d]]
  cert.matrix = {{{QuadInt::make(m, u * d, 0, d), QuadInt::make(m, 0, 2, d)},
                  {QuadInt::make(m, 0, v / 2, d), QuadInt::make(m, d, 0, d)}}};

  // images of the Z-basis {(1,0), (omega,0), (0,1), (0,omega)} of
  // Lambda_1 x Lambda_1, written in the basis
  // {(1,0), (omega/d,0), (0,1), (0,omega/d)} of Lambda_d x Lambda_d
  const QuadInt one = QuadInt::make(m, 1, 0);
  const QuadInt om = QuadInt::omega(m);
  const QuadInt zero = QuadInt::make(m, 0, 0);
  const std::array<std::array<QuadInt, 2>, 4> basis = {
      {{one, zero}, {om, zero}, {zero, one}, {zero, om}}};
  for (size_t col = 0; col < 4; ++col) {
    QuadInt img0 = cert.matrix[0][0] * basis[col][0] + cert.matrix[0][1] * basis[col][1];
    QuadInt img1 = cert.matrix[1][0] * basis[col][0] + cert.matrix[1][1] * basis[col][1];
    auto [c0, c1] = lambda_coords(img0, d);
    auto [c2, c3] = lambda_coords(img1, d);
    cert.coord[0][col] = c0;
    cert.coord[1][col] = c1;
    cert.coord[2][col] = c2;
    cert.coord[3][col] = c3;
  }
  cert.det = det4(cert.coord);
  if (cert.det != 1 && cert.det != -1)
    throw internal_error("certificate invalid: coordinate determinant not +-1");
  // the unscaled printed matrix d M' has coordinate matrix d * coord
  mpz_class d4;
  mpz_ui_pow_ui(d4.get_mpz_t(), static_cast<unsigned long>(d), 4);
  cert.unscaled_det = d4 * cert.det;

  cert.torsion = check_torsion_maps(cert);
  return cert;
}

IsoCertificate build_certificate(long m, long d) {
  auto [u, v] = find_uv(m, d);
  return build_certificate_with(m, d, u, v);
}

TorsionChecks check_torsion_maps(const IsoCertificate& cert) {
  const long m = cert.m, d = cert.d;
  TorsionChecks out;

  const QuadInt t1 = QuadInt::make(m, 1, 1, 2);        // (1 + omega)/2
  const QuadInt td = QuadInt::make(m, d, 1, 2 * d);    // (1 + omega/d)/2
  const QuadInt zero = QuadInt::make(m, 0, 0);

  auto apply = [&](const QuadInt& z0, const QuadInt& z1) {
    return std::pair<QuadInt, QuadInt>(
        cert.matrix[0][0] * z0 + cert.matrix[0][1] * z1,
        cert.matrix[1][0] * z0 + cert.matrix[1][1] * z1);
  };
  auto congruent = [&](const QuadInt& x, const QuadInt& y) {
    return (x - y).in_lambda(d);
  };

  {
    auto [i0, i1] = apply(t1, zero);
    out.t_left = congruent(i0, td) && congruent(i1, zero);
  }
  {
    auto [i0, i1] = apply(zero, t1);
    out.t_right = congruent(i0, zero) && congruent(i1, td);
  }

  const QuadInt s_half = QuadInt::make(m, 1, 0, 2);       // 1/2
  const QuadInt s_omega1 = QuadInt::make(m, 0, 1, 2);     // omega/2 (in Lambda_1 scale)
  const QuadInt sd_half = s_half;                         // 1/2 mod Lambda_d
  const QuadInt sd_omega = QuadInt::make(m, 0, 1, 2 * d); // (omega/d)/2

  auto diagonal_check = [&](const QuadInt& s1) {
    SDiagonalCheck res;
    auto [i0, i1] = apply(s1, s1);
    if (congruent(i0, sd_half) && congruent(i1, sd_half)) {
      res.ok = true;
      res.target = "1/2";
    } else if (congruent(i0, sd_omega) && congruent(i1, sd_omega)) {
      res.ok = true;
      res.target = "omega/(2d)";
    }
    return res;
  };
  out.s_half = diagonal_check(s_half);
  out.s_omega = diagonal_check(s_omega1);
  return out;
}

namespace {

// exact equality test for two algebraic reals sharing a common factor
bool provably_equal(AlgebraicReal& x, AlgebraicReal& y) {
  if (&x == &y) return true;
  if (x.is_rational() && y.is_rational()) return x.lo == y.lo;
  if (x.is_rational() || y.is_rational()) {
    AlgebraicReal& r = x.is_rational() ? x : y;
    AlgebraicReal& a = x.is_rational() ? y : x;
    return a.equals_rational(r.lo);
  }
  IntPoly g = IntPoly::gcd(x.defining, y.defining);
  if (g.degree() < 1) return false;
  mpq_class lo = std::min(x.lo, y.lo), hi = std::max(x.hi, y.hi);
  if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) return false;  // give up, refine instead
  auto seq = sturm_sequence(g);
  if (sturm_count_open(seq, lo, hi) != 1) return false;
  // the single root of g on the hull must lie in both isolating intervals
  return sturm_count_open(seq, x.lo, x.hi) == 1 && sturm_count_open(seq, y.lo, y.hi) == 1;
}

}  // namespace

bool twisting_nonzero(const std::shared_ptr<AlgebraicReal>& alpha1,
                      const std::shared_ptr<AlgebraicReal>& alphad) {
  // factor 1: beta - 1 = 2(alpha_1^2 - 1) != 0 given |alpha_1| < 1
  refine_until(
      [&](Precision p) {
        RealBall a1 = refine(*alpha1, p);
        RealBall one = RealBall::exact_int(1, p);
        if (certify_compare(a1.abs(), one) != Order::Less)
          throw undecidable_error("twisting: |alpha_1| < 1 not yet certified");
        return 0;
      },
      96);

  // factor 2: beta - 2 alpha_d^2 + 1 = 2(alpha_1^2 - alpha_d^2)
  if (alpha1 == alphad || provably_equal(*alpha1, *alphad)) return false;
  return refine_until(
      [&](Precision p) {
        RealBall a = refine(*alpha1, p);
        RealBall b = refine(*alphad, p);
        Order o = certify_compare(a.square(), b.square());
        if (o == Order::Overlap)
          throw undecidable_error("twisting: alpha_1^2 vs alpha_d^2 overlap");
        return true;
      },
      96);
}

}  // namespace quartjac
