#ifndef KSTATE_STATES_HPP
#define KSTATE_STATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kstate/diagram.hpp"

namespace kstate {

// A Kauffman state: one quadrant per crossing, hitting each face other
// than A and B exactly once.  Filtration and grading are stored doubled
// (2S, 2M) so link values stay integral.
struct KauffmanState {
  std::vector<std::uint8_t> quadrant;  // quadrant index per crossing
  int filtration2 = 0;                 // 2*S(x)
  int grading2 = 0;                    // 2*M(x)

  friend bool operator==(const KauffmanState& a, const KauffmanState& b) {
    return a.quadrant == b.quadrant;
  }
  friend bool operator<(const KauffmanState& a, const KauffmanState& b) {
    return a.quadrant < b.quadrant;
  }
  std::string to_json() const;
};

// Doubled local filtration contribution of choosing quadrant q at c:
// +sign on the pointed-toward quadrant, -sign on the pointed-away one.
int local_filtration2(const Crossing& c, int q);
// Doubled local grading contribution: -2*sign on the pointed-away quadrant.
int local_grading2(const Crossing& c, int q);

int filtration2(const PlanarDiagram& d, const std::vector<std::uint8_t>& quadrant);
int grading2(const PlanarDiagram& d, const std::vector<std::uint8_t>& quadrant);

bool is_valid_state(const PlanarDiagram& d, const std::vector<std::uint8_t>& quadrant);

// All Kauffman states in lexicographic order of the quadrant assignment.
// Backtracking over crossings in index order, pruning on face reuse.
std::vector<KauffmanState> enumerate_states(const PlanarDiagram& d);

// Traversal bookkeeping induced by the decoration: the walk starts inside
// the marked edge and follows the orientation; further components are
// appended in order of their lowest edge label, each entered just past
// that edge.  For each crossing this records the later of its two visits.
struct VisitOrder {
  std::vector<int> second_visit_time;  // per crossing
  std::vector<int> penultimate_edge;   // incoming edge of that visit
  std::vector<int> penultimate_slot;   // its slot at the crossing
};
VisitOrder visit_order(const PlanarDiagram& d);

// The state assigning to each crossing a quadrant containing its
// penultimate edge; it is unique and has grading 0.  Built by region
// exhaustion from A and B, resolving ties toward the latest-visited
// crossing.  Throws std::logic_error if the induction stalls or the
// result is invalid (both indicate a malformed diagram).
KauffmanState canonical_state(const PlanarDiagram& d);

// All states differing from x by a transposition: a swap at two crossings
// joined by a straight path along the link avoiding the marked edge, the
// swapped quadrants flanking the path's first and last edges.
std::vector<KauffmanState> transpositions(const PlanarDiagram& d, const KauffmanState& x);

// Number of edges of the transposition graph on all states.
std::size_t clock_edge_count(const PlanarDiagram& d);
// The transposition graph is connected (Kauffman's clock theorem);
// exposed as a self-check.
bool clock_connected(const PlanarDiagram& d);

}  // namespace kstate

#endif
