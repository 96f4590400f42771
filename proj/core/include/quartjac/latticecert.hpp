#ifndef QUARTJAC_LATTICECERT_HPP
#define QUARTJAC_LATTICECERT_HPP

#include <array>
#include <memory>
#include <string>

#include "quartjac/algnum.hpp"

namespace quartjac {

// Exact element (a + b*omega)/den of Q(omega), omega^2 = -m.
struct QuadInt {
  long m = 0;
  mpz_class a = 0, b = 0, den = 1;

  static QuadInt make(long m, mpz_class a, mpz_class b, mpz_class den = 1);
  static QuadInt omega(long m) { return make(m, 0, 1); }

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  bool operator==(const QuadInt&) const = default;

  // membership in Lambda_d = Z + (omega/d) Z
  bool in_lambda(long d) const;
  std::string to_string() const;  // "p/q + r/s·ω"

 private:
  void normalize();
};

// Lambda_d = Z + (i sqrt(m)/d) Z with basis {1, omega/d}.
struct LatticeSpec {
  long m = 0;
  long d = 1;
};

enum class TorsionLabel { S, T, U };

struct SDiagonalCheck {
  bool ok = false;
  std::string target;  // "1/2" or "omega/(2d)" when ok
};

struct TorsionChecks {
  bool t_left = false;   // (T_1, 0) -> (T_d, 0)
  bool t_right = false;  // (0, T_1) -> (0, T_d)
  // both candidate representatives of S_1 (the paper leaves the choice
  // ambiguous); each image must be a diagonal non-T two-torsion pair
  SDiagonalCheck s_half;   // S_1 = 1/2
  SDiagonalCheck s_omega;  // S_1 = omega/2
  bool all_ok() const { return t_left && t_right && s_half.ok && s_omega.ok; }
};

struct IsoCertificate {
  long m = 0, d = 1;
  long u = 1, v = 0;  // u d + v (m/d) = 1, v ≡ 0 mod 4
  std::array<std::array<QuadInt, 2>, 2> matrix;  // scaled matrix M' = (1/d) [[ud, 2w],[(v/2)w, d]]
  std::array<std::array<mpz_class, 4>, 4> coord;  // basis images, integer coordinates
  mpz_class det;           // must be +-1
  mpz_class unscaled_det;  // coordinate determinant of the unscaled printed matrix: d^4 det
  TorsionChecks torsion;
};

// Extended-gcd solution of u d + v(m/d) = 1 with v ≡ 0 (mod 4), |v| minimal
// among the two nearest representatives.
std::pair<long, long> find_uv(long m, long d);

// Builds and verifies the certificate: integrality of all basis images and
// coordinate determinant +-1, plus the torsion congruences.  Throws
// internal_error if a structural check fails.
IsoCertificate build_certificate(long m, long d);

// Same, with a caller-chosen (u, v) pair (validated first).
IsoCertificate build_certificate_with(long m, long d, long u, long v);

// Exact torsion congruence checks in (1/2) Z[omega] for an already-built
// matrix.
TorsionChecks check_torsion_maps(const IsoCertificate& cert);

// Certified T = 8(beta-1)(beta - 2 alpha_d^2 + 1) != 0 with
// beta = 2 alpha_1^2 - 1.  Returns false when T provably vanishes
// (alpha_d = alpha_1); throws precision_exhausted when undecidable.
bool twisting_nonzero(const std::shared_ptr<AlgebraicReal>& alpha1,
                      const std::shared_ptr<AlgebraicReal>& alphad);

}  // namespace quartjac

#endif
