#ifndef QUARTJAC_CURVEFAM_HPP
#define QUARTJAC_CURVEFAM_HPP

#include <map>
#include <memory>
#include <vector>

#include "quartjac/algnum.hpp"
#include "quartjac/classpoly.hpp"
#include "quartjac/qval.hpp"

namespace quartjac {

// alpha_d = mu(sqrt(m)/d) for each odd positive divisor d of m, with the
// certified j-value it came from.  entries ascend in d; alpha_1 is the
// largest value in the table.
struct AlphaEntry {
  long d = 1;
  std::shared_ptr<AlgebraicReal> alpha;
  ComplexBall j;
};

struct AlphaTable {
  long m = 0;
  std::vector<AlphaEntry> entries;

  const AlphaEntry& entry(long d) const;
  std::vector<long> quartic_divisors() const;  // d > 1, ascending
};

// Coefficients of one emitted curve: named values with exact expressions
// over the table's algebraic numbers, plus the minimal polynomials backing
// those names.
struct CurveEquation {
  enum class Kind { Hyperelliptic, Quartic };
  Kind kind = Kind::Hyperelliptic;
  std::vector<std::pair<std::string, QVal>> coefficients;
  std::map<std::string, IntPoly> minpolys;
};

struct QuarticTriple {
  QVal a, b, c;
};

// The unique mu in [0,1) with 64 (mu^2+3)^3 = J (mu^2-1)^2, by rational
// bisection on t = mu^2 against the exact monotone map, then sqrt.  Throws
// domain_error when J lies entirely below 1728.
RealBall mu_from_j(const RealBall& J, Precision prec);

// Full table construction: class polynomial -> g -> root isolation ->
// mu targets -> matching -> minimal polynomials -> alpha_1 maximality.
AlphaTable build_alpha_table(long m);

// Same pipeline, keeping the intermediate class polynomial and g for
// reporting.
struct AlphaPipeline {
  AlphaTable table;
  ClassPolyResult classpoly;
  IntPoly g;
};
AlphaPipeline build_alpha_pipeline(long m);

// W^2 = X^4 + Y^4 + c0 with X^2 + Y^2 = 1, c0 = -1 + 1/(2 alpha^2).
// Throws domain_error when alpha is 0 or +-1 (degenerate curve).
CurveEquation hyperelliptic_equation(const std::shared_ptr<AlgebraicReal>& alpha);

struct QuarticBuild {
  QuarticTriple triple;
  CurveEquation equation;
  QVal twisting;  // 8 (b'-1)(b' - 2 beta^2 + 1) with b' = 2 alpha^2 - 1
};

// C(alpha, beta): a = -2 + 4(1-beta^2)/(1-alpha^2), b = c = 2 beta / alpha.
QuarticBuild quartic_coeffs(const std::shared_ptr<AlgebraicReal>& alpha,
                            const std::shared_ptr<AlgebraicReal>& beta);

// Convenience: quartic triple from plain values (used by the CLI).
QuarticTriple quartic_triple(QVal a, QVal b, QVal c);

// Certified nonsingularity of Q(a,b,c): a^2+b^2+c^2-abc-4 nonzero and none
// of a^2, b^2, c^2 equal to 4.  Returns false only when singularity is
// provable (exact entries); throws precision_exhausted when undecidable.
bool is_nonsingular(const QuarticTriple& t);

// QVal view of an algebraic number that refines through the shared root.
QVal qval_of(const std::shared_ptr<AlgebraicReal>& x);

}  // namespace quartjac

#endif
