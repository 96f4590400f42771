#ifndef QUARTJAC_ALGNUM_HPP
#define QUARTJAC_ALGNUM_HPP

#include <map>
#include <optional>
#include <vector>

#include "quartjac/intpoly.hpp"
#include "quartjac/realball.hpp"

namespace quartjac {

// Real algebraic number: squarefree defining polynomial plus an isolating
// rational interval holding exactly one of its roots (Sturm-certified).
// lo == hi marks an exact rational root.  `cache` is the tightest known
// certified enclosure of the root and always lies inside [lo, hi].
struct AlgebraicReal {
  IntPoly defining;
  std::optional<IntPoly> minimal;
  mpq_class lo, hi;
  RealBall cache;
  std::string name;  // e.g. "alpha_1"; used in printed expressions

  bool is_rational() const { return lo == hi; }
  bool equals_rational(const mpq_class& q) const;
};

// Sturm machinery (exposed for reuse in verification code).
std::vector<IntPoly> sturm_sequence(const IntPoly& p);
// Number of distinct real roots in the open interval (lo, hi); both
// endpoints must not be roots.
long sturm_count_open(const std::vector<IntPoly>& seq, const mpq_class& lo,
                      const mpq_class& hi);

// Numerator of f(2^6 (x^2+3)^3 / (x^2-1)^2) over the denominator
// (x^2-1)^(2n): expanded exactly, integer content kept.
IntPoly compose_g(const IntPoly& f);

// One AlgebraicReal per distinct real root of g in (0, 1), ascending, with
// pairwise disjoint isolating intervals.
std::vector<AlgebraicReal> isolate_roots_unit_interval(const IntPoly& g);

// Certified enclosure of the root with radius < 2^-prec; bisection first,
// then interval Newton.  Tightens x.cache (and the bisection bookkeeping)
// as a side effect.
RealBall refine(AlgebraicReal& x, Precision prec);

// The irreducible integer polynomial (primitive, positive leading
// coefficient) vanishing at x, searched by LLL integer-relation detection
// over degrees 1..degree_bound and verified by exact division into
// x.defining plus a root-location check.  Throws recognition_error if no
// candidate verifies.
IntPoly minimal_polynomial(AlgebraicReal& x, long degree_bound);

// Matches each target enclosure to the unique root it contains.  Returns
// target-key -> index into roots.  Throws undecidable_error when a target
// ball is too wide to separate neighbouring roots.
std::map<long, size_t> match_roots(std::vector<AlgebraicReal>& roots,
                                   const std::vector<std::pair<long, RealBall>>& targets);

}  // namespace quartjac

#endif
