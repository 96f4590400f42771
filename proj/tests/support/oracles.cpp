#include "support/oracles.hpp"

#include <cmath>

namespace quartjac::test {

ComplexBall j_theta_oracle(const ComplexBall& tau, Precision prec) {
  const Precision p = prec + 96;
  RealBall pi = RealBall::pi(p);
  ComplexBall i_pi_tau(-(pi * tau.imag().with_precision(p)),
                       pi * tau.real().with_precision(p));
  ComplexBall q = i_pi_tau.exp();
  ComplexBall q14 = ComplexBall(i_pi_tau.real() / RealBall::exact_int(4, p),
                                i_pi_tau.imag() / RealBall::exact_int(4, p))
                        .exp();

  mpq_class qub = q.abs_upper_ball().upper();
  if (qub >= mpq_class(1, 2))
    throw domain_error("j_theta_oracle: Im tau too small");
  double lg_q = std::log2(qub.get_d());
  long target = prec + 64;
  long N = static_cast<long>(std::sqrt(static_cast<double>(target) / -lg_q)) + 2;

  ComplexBall th3 = ComplexBall::from_real(RealBall::exact_int(1, p));
  ComplexBall sum2 = ComplexBall::from_real(RealBall::exact_int(1, p));  // n = 0 term of theta2
  ComplexBall two = ComplexBall::from_real(RealBall::exact_int(2, p));
  for (long n = 1; n <= N; ++n) {
    // q^(n^2) and q^(n(n+1)) by binary powering of the ball
    auto qpow = [&](unsigned long e) {
      ComplexBall acc = ComplexBall::from_real(RealBall::exact_int(1, p));
      ComplexBall base = q;
      while (e) {
        if (e & 1) acc = acc * base;
        base = base.square();
        e >>= 1;
      }
      return acc;
    };
    th3 = th3 + two * qpow(static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
    sum2 = sum2 + qpow(static_cast<unsigned long>(n) * static_cast<unsigned long>(n + 1));
  }
  // geometric tails
  auto qub_pow = [&](unsigned long e) {
    RealBall acc = RealBall::exact_int(1, 64);
    RealBall base = RealBall::from_mpq(qub, 64);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base.square();
      e >>= 1;
    }
    return acc;
  };
  RealBall denom = RealBall::exact_int(1, 64) - RealBall::from_mpq(qub, 64);
  mpq_class tail3 =
      (RealBall::exact_int(2, 64) *
       qub_pow(static_cast<unsigned long>((N + 1)) * static_cast<unsigned long>(N + 1)) / denom)
          .upper();
  mpq_class tail2 =
      (qub_pow(static_cast<unsigned long>(N + 1) * static_cast<unsigned long>(N + 2)) / denom)
          .upper();
  RealBall pad3 = RealBall::from_interval(-tail3, tail3, p);
  RealBall pad2 = RealBall::from_interval(-tail2, tail2, p);
  th3 = th3 + ComplexBall(pad3, pad3);
  sum2 = sum2 + ComplexBall(pad2, pad2);

  ComplexBall th2 = two * q14 * sum2;
  ComplexBall th2_4 = th2.square().square();
  ComplexBall th3_4 = th3.square().square();
  ComplexBall lambda = th2_4 / th3_4;
  ComplexBall one = ComplexBall::from_real(RealBall::exact_int(1, p));
  ComplexBall num = one - lambda + lambda.square();
  num = num * num * num;
  ComplexBall den = lambda.square() * (one - lambda).square();
  return ComplexBall::from_real(RealBall::exact_int(256, p)) * num / den;
}

std::vector<FormTriple> reduced_forms_naive(long m) {
  std::vector<FormTriple> out;
  for (long a = 1; 3 * a * a <= 4 * m; ++a) {
    for (long b = -a; b <= a; ++b) {
      if ((b * b + 4 * m) % (4 * a) != 0) continue;
      long c = (b * b + 4 * m) / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (b == -a || a == c)) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

std::vector<std::array<mpq_class, 3>> strict_orbit(const std::array<mpq_class, 3>& t) {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<std::array<mpq_class, 3>> out;
  for (const auto& perm : perms)
    for (const auto& sgn : signs) {
      std::array<mpq_class, 3> img;
      for (int i = 0; i < 3; ++i)
        img[static_cast<size_t>(i)] = sgn[i] * t[static_cast<size_t>(perm[i])];
      out.push_back(std::move(img));
    }
  return out;
}

mpq_class phi_of_musq(const mpq_class& t) {
  mpq_class u = t + 3, v = t - 1;
  return 64 * u * u * u / (v * v);
}

unsigned long long Rng::next() {
  // xorshift64*
  state ^= state >> 12;
  state ^= state << 25;
  state ^= state >> 27;
  return state * 0x2545F4914F6CDD1DULL;
}

long Rng::uniform(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
}

mpq_class Rng::rational(long max_num, long max_den) {
  long num = uniform(-max_num, max_num);
  long den = uniform(1, max_den);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace quartjac::test
