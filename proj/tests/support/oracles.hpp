#ifndef QUARTJAC_TEST_ORACLES_HPP
#define QUARTJAC_TEST_ORACLES_HPP

#include <vector>

#include "quartjac/classpoly.hpp"
#include "quartjac/curvefam.hpp"

namespace quartjac::test {

// Independent j-invariant evaluation through theta constants and the
// Legendre lambda: q = e^{i pi tau}, lambda = theta2^4 / theta3^4,
// j = 256 (1 - lambda + lambda^2)^3 / (lambda^2 (1 - lambda)^2).
// Completely disjoint from the Eisenstein-series route in the library.
ComplexBall j_theta_oracle(const ComplexBall& tau, Precision prec);

// Naive double-loop enumeration of reduced forms of discriminant -4m.
std::vector<FormTriple> reduced_forms_naive(long m);

// All 24 strict-equivalence images of a rational triple: 6 permutations
// times 4 even sign patterns.
std::vector<std::array<mpq_class, 3>> strict_orbit(const std::array<mpq_class, 3>& t);

// 64 (t+3)^3 / (t-1)^2 exactly.
mpq_class phi_of_musq(const mpq_class& t);

// deterministic small PRNG for reproducible property tests
struct Rng {
  unsigned long long state = 0x9e3779b97f4a7c15ULL;
  unsigned long long next();
  long uniform(long lo, long hi);      // inclusive
  mpq_class rational(long max_num, long max_den);  // nonzero denominator
};

}  // namespace quartjac::test

#endif
