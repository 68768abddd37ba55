#ifndef KSTATE_DIAGRAM_HPP
#define KSTATE_DIAGRAM_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace kstate {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an operation's precondition on the diagram fails
// (e.g. an alternating-only invariant applied to a non-alternating input).
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One crossing of an oriented projection.
//
// The four half-edge slots are listed in counterclockwise cyclic order with
// slot 0 the incoming under-strand; the under-strand leaves at slot 2, the
// over-strand occupies slots 1 and 3.  Quadrant k is the corner between
// slots k and k+1 (mod 4).  sign = +1 when the over-strand runs from slot 1
// to slot 3 (over-direction = under-direction rotated +90 degrees).
struct Crossing {
  std::array<int, 4> edge{};           // edge label at each slot
  int sign = 0;                        // +1 or -1
  std::array<int, 4> quadrant_face{};  // face index of quadrant k

  // Quadrant bounded by the two edges pointing toward the vertex.
  int toward_quadrant() const { return sign > 0 ? 0 : 3; }
  // Diagonally opposite quadrant, bounded by the two outgoing edges.
  int away_quadrant() const { return sign > 0 ? 2 : 1; }

  // Walking the quadrant boundary in the orientation induced from the
  // projection plane, the first of its two edges belongs to the overpass
  // exactly for odd quadrants.
  static bool over_first(int quadrant) { return quadrant % 2 == 1; }
  static bool under_first(int quadrant) { return quadrant % 2 == 0; }

  friend bool operator==(const Crossing& a, const Crossing& b) {
    return a.edge == b.edge && a.sign == b.sign;
  }
};

struct EdgeRec {
  int tail_crossing = -1, tail_slot = -1;  // where the edge leaves
  int head_crossing = -1, head_slot = -1;  // where it arrives
  int component = 0;
};

struct Face {
  struct Corner {
    int crossing;
    int quadrant;
  };
  struct Side {
    int edge;
    bool forward;  // traversed tail->head by the face walk
  };
  std::vector<Corner> corners;
  std::vector<Side> sides;  // parallel to corners
  std::size_t length() const { return sides.size(); }
};

enum class FaceColor : unsigned char { black, white };

// Proper 2-coloring of the faces.  When the diagram is alternating the
// coloring makes every under-first quadrant white; otherwise face A is
// white and under_first_consistent is false.
struct Coloring {
  std::vector<FaceColor> face_color;
  bool under_first_consistent = false;
  Coloring flipped() const;
};

// Multigraph on the black faces with one edge per crossing (joining the
// two opposite black quadrants); loops occur exactly at nugatory crossings.
struct BlackGraph {
  std::vector<int> vertex_face;            // black face index per vertex
  std::vector<std::pair<int, int>> edges;  // vertex ids, one per crossing
};

// Validated combinatorial link projection on the sphere, decorated with a
// marked edge and its two adjacent faces A ("outer") and B.  Immutable
// after construction; all operations are pure.
class PlanarDiagram {
 public:
  // Oriented PD text: whitespace-separated X[a,b,c,d] tokens, labels
  // 1..2n appearing twice each and increasing along each component
  // (cyclically within the component's contiguous label block).  The
  // single token "unknot" denotes the 0-crossing unknot.  A trailing
  // '#' comment is ignored.
  static PlanarDiagram from_pd(const std::string& text);
  // Signed oriented Gauss code, e.g. "U1+ O2+ U3+ O1+ U2+ O3+";
  // components separated by commas.  Non-realizable codes are rejected.
  static PlanarDiagram from_gauss(const std::string& text);
  static PlanarDiagram from_json(const std::string& text);
  static PlanarDiagram unknot();

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int component_count() const { return components_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Face>& faces() const { return faces_; }
  const EdgeRec& edge(int label) const { return edges_.at(label - 1); }
  int marked_edge() const { return marked_edge_; }
  int face_a() const { return face_a_; }
  int face_b() const { return face_b_; }

  // Next edge label along the oriented link.
  int succ(int label) const;
  int pred(int label) const;

  // The two faces bordering an edge (sides of the strand).
  std::pair<int, int> edge_faces(int label) const;

  int writhe() const;
  bool is_alternating() const;
  // True when no crossing has two quadrants in the same face.
  bool is_reduced() const;

  Coloring checkerboard() const;
  BlackGraph black_graph(const Coloring& c) const;

  // Over/under switched at every crossing; orientation preserved.
  PlanarDiagram mirror() const;
  // Same projection with a different distinguished edge / outer face.
  PlanarDiagram with_decoration(int marked_edge, int outer_face) const;

  std::string to_json() const;

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings_ == b.crossings_ && a.marked_edge_ == b.marked_edge_ &&
           a.face_a_ == b.face_a_;
  }

 private:
  PlanarDiagram() = default;
  static PlanarDiagram build(std::vector<std::array<int, 4>> tuples,
                             int marked_edge, int outer_face);
  void choose_default_decoration();
  void set_decoration(int marked_edge, int outer_face);

  std::vector<Crossing> crossings_;
  std::vector<EdgeRec> edges_;
  std::vector<std::pair<int, int>> component_blocks_;  // [first, length]
  int components_ = 1;
  std::vector<Face> faces_;
  int marked_edge_ = 0;
  int face_a_ = 0;
  int face_b_ = 0;
};

}  // namespace kstate

#endif
