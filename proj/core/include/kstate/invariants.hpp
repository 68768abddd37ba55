#ifndef KSTATE_INVARIANTS_HPP
#define KSTATE_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "kstate/diagram.hpp"
#include "kstate/polynomial.hpp"

namespace kstate {

// Signature of an alternating link from its reduced alternating projection:
// (number of black regions) - (number of positive crossings) - 1, in the
// coloring that makes under-first quadrants white.  Sign convention: the
// left-handed trefoil has signature +2.  Even for knots, any parity for
// links.  Throws NotApplicable on non-alternating or non-reduced input.
int signature_alternating(const PlanarDiagram& d);

// delta(sigma, s) = max(0, ceil((|sigma| - 2|s|)/4)); equals the s-th
// torsion coefficient of the (2,|sigma|+1) torus knot.  sigma must be even.
int delta(int sigma, int s);

// One Alexander grading of the knot Floer homology of an alternating link:
// rank |a_s| in Maslov grading s + sigma/2 (both doubled).
struct HfkEntry {
  int s2;        // doubled Alexander grading
  int m2;        // doubled Maslov grading, m2 = s2 + sigma
  BigInt rank;   // |a_s|
};

// Knot Floer homology of an alternating knot or non-split alternating
// link, from the state sum and the signature alone.  Entries sorted by
// decreasing Alexander grading.
std::vector<HfkEntry> hfk_table(const PlanarDiagram& d);

// HF+ of zero-surgery on an alternating knot.  All degrees doubled.
struct HfPlusSummary {
  int sigma = 0;          // signature used (always <= 0)
  bool mirrored = false;  // input had sigma > 0; values describe the mirror
  BigInt b0 = 0;
  int b0_degree2 = 0;                  // sigma - 1
  int tower1_bottom2 = -1;             // doubled -1/2
  int tower2_bottom2 = 1;              // doubled -2*delta(sigma,0) + 1/2
  struct PerS {
    int s = 0;
    BigInt b = 0;       // rank of the free summand
    int b_parity = 0;   // (s + sigma/2) mod 2
    int delta_s = 0;    // U-torsion exponent; torsion summand has odd parity
  };
  std::vector<PerS> per_s;  // s = 1, 2, ...
};

HfPlusSummary hf_plus_zero_surgery(const PlanarDiagram& d);

// Correction term d(S^3_1(K)) = 2*min(0, -ceil(-sigma/4)) for an
// alternating knot.
int d_one_surgery(const PlanarDiagram& d);

// Obstruction to (sigma, Delta) arising from an alternating knot:
// (-1)^(s+sigma/2) (t_s - delta(sigma,s)) <= 0 for all s, plus the
// sharpened bound |a_(g-1)| >= 2|a_g| + {-1 if |sigma|=2g; +1 if
// |sigma|=2g-2; 0 otherwise}.  Takes the pair directly so table data can
// be screened without a diagram.
struct ObstructionReport {
  bool pass = false;
  struct Violation {
    int s;
    BigInt excess;  // the positive value of (-1)^(s+sigma/2)(t_s - delta)
  };
  std::vector<Violation> violations;
  bool top_coefficient_bound_ok = true;  // the a_(g-1) inequality
  std::string to_json() const;
};

ObstructionReport obstruction(const LaurentPolynomial& p, int sigma);

// Hopf invariant of the contact structure induced by a fibered alternating
// knot: h = -sigma/2 - g; tight iff h = 0.  Fiberedness guard: top
// Alexander coefficient must be +-1 unless assume_fibered is set.
struct HopfInvariant {
  int h = 0;
  bool tight = false;
};

HopfInvariant hopf_invariant(const PlanarDiagram& d, bool assume_fibered = false);

}  // namespace kstate

#endif
