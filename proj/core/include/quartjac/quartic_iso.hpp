#ifndef QUARTJAC_QUARTIC_ISO_HPP
#define QUARTJAC_QUARTIC_ISO_HPP

#include <array>
#include <string>
#include <vector>

#include "quartjac/curvefam.hpp"

namespace quartjac {

// Complete invariant of the strict isomorphism class of Q(a,b,c): the
// multiset {a^2, b^2, c^2} together with the product abc.  Table-1
// companion classes may carry a negative "square" (imaginary companion
// coefficient); such an entry can never equal a real triple's square, so
// comparisons stay valid.
struct StrictClassInvariant {
  std::array<QVal, 3> squares;
  QVal product;
};

StrictClassInvariant strict_invariant(const QuarticTriple& t);

enum class TripleCase { Generic, TwoEqual, TwoZero };

struct IsoClassDescriptor {
  TripleCase kind = TripleCase::Generic;
  std::vector<StrictClassInvariant> strict_classes;  // own class first, <= 3 total
};

// Strict classes of the full isomorphism class: the triple's own invariant
// plus its Table-1 companions, closed under the moves.  Exceeding three
// classes raises internal_error.
IsoClassDescriptor descriptor(const QuarticTriple& t);

// Companion invariants only (descriptor minus the triple's own class).
std::vector<StrictClassInvariant> associated_forms(const QuarticTriple& t);

enum class IsoVerdict { Isomorphic, NonIsomorphic, Undecided };

// Both triples must be nonsingular.  Exact entries decide both ways;
// interval entries can only certify NonIsomorphic.
IsoVerdict are_isomorphic(const QuarticTriple& t1, const QuarticTriple& t2);

// Real-and-imaginary value pair for the projective witness matrix (the
// matrix is complex when the branch square root goes imaginary).
struct CVal {
  QVal re, im;
  ComplexBall ball(Precision prec) const;
};

struct VaryResult {
  QuarticTriple image;  // Q(-2 + 16/(a+2), 2b/d, 2b/d)
  std::array<std::array<CVal, 3>, 3> witness;
};

// The Table-1 move on Q(a,b,b).  branch (+1/-1) selects the sign of
// d = sqrt(a+2); requires a + 2 > 0 for a real image.  The witness matrix
// maps points of Q(a,b,b) onto points of the image quartic.
VaryResult vary_the_curve(const QVal& a, const QVal& b, int branch);

enum class AutGroupLabel { V4, D8, S4, G16, G48, G96, GL3F2 };
std::string to_string(AutGroupLabel g);

// Automorphism-group classification for exact real rational entries.
// G48 and GL3F2 have non-real standard forms and are unreachable here.
AutGroupLabel classify_aut_group(const QuarticTriple& t);

struct InequalityRecord {
  std::string lhs, rhs, relation;  // relation is one of ">", "<", "!="
  std::string certified_gap;       // decimal lower bound on the separation
};

struct DistinctnessCertificate {
  long m = 0;
  bool vacuous = false;  // fewer than two quartic divisors
  std::vector<InequalityRecord> records;
};

// Theorem-level distinctness data: alpha_1 > alpha_d, the ratios
// r_d = (1-alpha_1^2)/(1-alpha_d^2) lie in (0,1) and are pairwise
// distinct.
DistinctnessCertificate distinctness_certificate(const AlphaTable& table);

}  // namespace quartjac

#endif
