#ifndef KSTATE_ORACLE_HPP
#define KSTATE_ORACLE_HPP

#include <vector>

#include "kstate/diagram.hpp"
#include "kstate/polynomial.hpp"
#include "kstate/states.hpp"

namespace kstate {

// Cross-check machinery kept independent of the primary code paths:
// exhaustive state search, matrix-tree counting, and a Goeritz-matrix
// signature oracle.  Everything here uses exact arithmetic.

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filters all 4^n quadrant assignments by the Kauffman state axioms
// (pruning subtrees whose prefix already fails).  Guarded at n <= 14.
std::vector<KauffmanState> brute_force_states(const PlanarDiagram& d, int guard = 14);

// Spanning trees of a connected multigraph via the matrix-tree theorem:
// integer determinant of a reduced Laplacian (fraction-free elimination).
// Loops never enter.
BigInt kirchhoff_count(const BlackGraph& g);

// Goeritz form of the white regions (one deleted) plus the orientation
// correction mu.
//
// Conventions, written against the slot encoding of Crossing: the white
// quadrant pair at a crossing is {0,2} or {1,3}; eta = -1 for {0,2} and
// +1 for {1,3}.  A crossing is of type II when the quadrant pointed
// toward by the two incoming strands is black; mu is the sum of eta over
// type II crossings.  The link signature is sig(matrix) - mu, the
// Gordon-Litherland correction of the Goeritz form.
struct GoeritzData {
  std::vector<std::vector<BigInt>> matrix;  // symmetric, white regions minus one
  int mu = 0;
  std::vector<int> white_faces;
};

GoeritzData goeritz_data(const PlanarDiagram& d, const Coloring& c);

// Signature of a symmetric integer matrix by congruence diagonalization
// over exact rationals.
int symmetric_signature(const std::vector<std::vector<BigInt>>& m);

// |det| of the Goeritz matrix; equals the knot determinant for knots.
BigInt goeritz_determinant(const GoeritzData& g);

// Link signature from the Goeritz form, valid for any connected diagram.
int signature_goeritz(const PlanarDiagram& d);

}  // namespace kstate

#endif
