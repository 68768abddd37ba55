#include "kstate/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace kstate {

namespace {

std::string strip_comment(const std::string& text) {
  auto pos = text.find('#');
  return pos == std::string::npos ? text : text.substr(0, pos);
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(strip_comment(text));
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::array<int, 4> parse_x_token(const std::string& tok) {
  if (tok.size() < 4 || tok[0] != 'X' || tok[1] != '[' || tok.back() != ']')
    throw ParseError("malformed PD token '" + tok + "'");
  std::array<int, 4> labels{};
  std::string body = tok.substr(2, tok.size() - 3);
  std::istringstream in(body);
  for (int i = 0; i < 4; ++i) {
    std::string field;
    if (!std::getline(in, field, ',')) throw ParseError("malformed PD token '" + tok + "'");
    try {
      std::size_t used = 0;
      labels[i] = std::stoi(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw ParseError("bad edge label in '" + tok + "'");
    }
    if (labels[i] < 1) throw ParseError("edge labels must be positive in '" + tok + "'");
  }
  std::string rest;
  if (std::getline(in, rest, ',')) throw ParseError("malformed PD token '" + tok + "'");
  return labels;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Coloring Coloring::flipped() const {
  Coloring c = *this;
  for (auto& col : c.face_color)
    col = (col == FaceColor::black) ? FaceColor::white : FaceColor::black;
  return c;
}

PlanarDiagram PlanarDiagram::unknot() {
  PlanarDiagram d;
  d.components_ = 1;
  d.component_blocks_ = {{1, 1}};
  d.edges_.resize(1);
  d.faces_.resize(2);
  d.faces_[0].sides.push_back({1, true});
  d.faces_[1].sides.push_back({1, false});
  d.marked_edge_ = 1;
  d.face_a_ = 0;
  d.face_b_ = 1;
  return d;
}

PlanarDiagram PlanarDiagram::from_pd(const std::string& text) {
  auto tokens = tokenize(text);
  if (tokens.size() == 1 && tokens[0] == "unknot") return unknot();
  std::vector<std::array<int, 4>> tuples;
  for (const auto& tok : tokens) tuples.push_back(parse_x_token(tok));
  if (tuples.empty()) throw ParseError("empty diagram");
  return build(std::move(tuples), 0, -1);
}

PlanarDiagram PlanarDiagram::build(std::vector<std::array<int, 4>> tuples,
                                   int marked_edge, int outer_face) {
  PlanarDiagram d;
  const int n = static_cast<int>(tuples.size());
  const int num_edges = 2 * n;

  // Every label in 1..2n appears exactly twice.
  std::vector<std::vector<std::pair<int, int>>> occ(num_edges + 1);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int l = tuples[c][s];
      if (l > num_edges)
        throw ParseError("edge label " + std::to_string(l) + " out of range 1.." +
                         std::to_string(num_edges));
      occ[l].push_back({c, s});
    }
  for (int l = 1; l <= num_edges; ++l)
    if (occ[l].size() != 2)
      throw ParseError("edge label " + std::to_string(l) + " appears " +
                       std::to_string(occ[l].size()) + " times, expected 2");

  // Trace the underlying curve: at each crossing the passages pair slot 0
  // with slot 2 and slot 1 with slot 3.  Cycles of labels are the link
  // components; each block of labels must be contiguous and increase
  // (cyclically) along the traversal.
  std::vector<bool> seen(num_edges + 1, false);
  std::vector<std::pair<int, int>> blocks;
  std::vector<int> comp_of(num_edges + 1, -1);
  for (int start = 1; start <= num_edges; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    // State: traversing `label`, heading toward endpoint `at`.
    int label = start;
    auto at = occ[start][0];
    while (true) {
      cycle.push_back(label);
      seen[label] = true;
      auto [c, s] = at;
      int through = (s + 2) % 4;
      int partner = tuples[c][through];
      auto& po = occ[partner];
      auto other = (po[0] == std::make_pair(c, through)) ? po[1] : po[0];
      label = partner;
      at = other;
      if (label == start && at == occ[start][0]) break;
      if (static_cast<int>(cycle.size()) > num_edges)
        throw ParseError("inconsistent strand structure");
    }
    int lo = *std::min_element(cycle.begin(), cycle.end());
    int hi = *std::max_element(cycle.begin(), cycle.end());
    int len = static_cast<int>(cycle.size());
    if (hi - lo + 1 != len)
      throw ParseError("component labels are not a contiguous block");
    // The cyclic sequence must be +1-consecutive in one direction.
    auto next_in_block = [&](int x) { return x == hi ? lo : x + 1; };
    bool fwd = true, bwd = true;
    for (int i = 0; i < len; ++i) {
      int a = cycle[i], b = cycle[(i + 1) % len];
      if (next_in_block(a) != b) fwd = false;
      if (next_in_block(b) != a) bwd = false;
    }
    if (!fwd && !bwd)
      throw ParseError("labels are not consecutive along a component");
    blocks.push_back({lo, len});
    int comp_id = static_cast<int>(blocks.size()) - 1;
    for (int l : cycle) comp_of[l] = comp_id;
  }
  std::sort(blocks.begin(), blocks.end());
  d.component_blocks_ = blocks;
  d.components_ = static_cast<int>(blocks.size());

  // Orientation bookkeeping and crossing signs.
  d.crossings_.resize(n);
  d.edges_.resize(num_edges);
  for (int l = 1; l <= num_edges; ++l) d.edges_[l - 1].component = comp_of[l];
  auto succ_label = [&](int x) {
    auto [lo, len] = blocks[comp_of[x]];
    return x == lo + len - 1 ? lo : x + 1;
  };
  auto set_head = [&](int c, int slot) {
    auto& e = d.edges_[tuples[c][slot] - 1];
    if (e.head_crossing != -1)
      throw ParseError("edge " + std::to_string(tuples[c][slot]) + " has two heads");
    e.head_crossing = c;
    e.head_slot = slot;
  };
  auto set_tail = [&](int c, int slot) {
    auto& e = d.edges_[tuples[c][slot] - 1];
    if (e.tail_crossing != -1)
      throw ParseError("edge " + std::to_string(tuples[c][slot]) + " has two tails");
    e.tail_crossing = c;
    e.tail_slot = slot;
  };
  for (int c = 0; c < n; ++c) {
    auto& t = tuples[c];
    d.crossings_[c].edge = t;
    if (succ_label(t[0]) != t[2])
      throw ParseError("under-strand labels " + std::to_string(t[0]) + "," +
                       std::to_string(t[2]) + " not consecutive at crossing " +
                       std::to_string(c));
    set_head(c, 0);
    set_tail(c, 2);
  }

  // Orient the over-strands.  succ alone is ambiguous on two-edge
  // components (both directions are label-consecutive), so propagate the
  // one-head-one-tail constraint per label to a fixpoint; a remaining
  // genuinely two-way component defaults to the positive crossing.
  auto commit = [&](int c, int sign) {
    d.crossings_[c].sign = sign;
    set_head(c, sign > 0 ? 1 : 3);
    set_tail(c, sign > 0 ? 3 : 1);
  };
  int undecided = n;
  while (undecided > 0) {
    bool progress = false;
    for (int c = 0; c < n; ++c) {
      if (d.crossings_[c].sign != 0) continue;
      const auto& t = tuples[c];
      auto viable = [&](int sign) {
        int hs = sign > 0 ? 1 : 3;  // head slot
        int ts = sign > 0 ? 3 : 1;
        if (succ_label(t[hs]) != t[ts]) return false;
        const auto& he = d.edges_[t[hs] - 1];
        const auto& te = d.edges_[t[ts] - 1];
        return he.head_crossing == -1 && te.tail_crossing == -1;
      };
      bool plus = viable(+1), minus = viable(-1);
      if (!plus && !minus)
        throw ParseError("over-strand labels not orientable at crossing " +
                         std::to_string(c));
      if (plus != minus) {
        commit(c, plus ? +1 : -1);
        --undecided;
        progress = true;
      }
    }
    if (!progress) {
      // both orientations remain consistent: fix the lowest crossing as
      // positive and keep propagating
      for (int c = 0; c < n; ++c)
        if (d.crossings_[c].sign == 0) {
          commit(c, +1);
          --undecided;
          break;
        }
    }
  }

  // Connectivity of the projection.
  DisjointSet dsu(n);
  for (const auto& e : d.edges_) dsu.unite(e.tail_crossing, e.head_crossing);
  for (int c = 1; c < n; ++c)
    if (dsu.find(c) != dsu.find(0)) throw ParseError("diagram is disconnected");

  // Trace faces from the rotation system.  A dart is an arrival at
  // (crossing, slot); the face walk turns to slot-1 and traverses that
  // edge, sweeping the quadrant between the two slots.
  std::vector<std::array<bool, 4>> dart_seen(n, {false, false, false, false});
  for (int c0 = 0; c0 < n; ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (dart_seen[c0][s0]) continue;
      Face face;
      int c = c0, s = s0;
      do {
        dart_seen[c][s] = true;
        int t = (s + 3) % 4;
        face.corners.push_back({c, t});
        d.crossings_[c].quadrant_face[t] = static_cast<int>(d.faces_.size());
        const int label = d.crossings_[c].edge[t];
        const EdgeRec& e = d.edges_[label - 1];
        bool forward = (e.tail_crossing == c && e.tail_slot == t);
        face.sides.push_back({label, forward});
        if (forward) {
          c = e.head_crossing;
          s = e.head_slot;
        } else {
          c = e.tail_crossing;
          s = e.tail_slot;
        }
      } while (!(c == c0 && s == s0));
      d.faces_.push_back(std::move(face));
    }
  if (d.face_count() != n + 2)
    throw ParseError("rotation data is not planar: " + std::to_string(d.face_count()) +
                     " faces, expected " + std::to_string(n + 2));

  if (marked_edge == 0)
    d.choose_default_decoration();
  else
    d.set_decoration(marked_edge, outer_face);
  return d;
}

void PlanarDiagram::choose_default_decoration() {
  // Outer face: maximal boundary length among the two faces bordering the
  // highest-numbered edge (smaller index on ties); marked edge: the
  // highest-numbered edge on that face, which is the highest edge overall.
  int top = edge_count();
  auto [f1, f2] = edge_faces(top);
  int outer = f1;
  if (faces_[f2].length() > faces_[f1].length() ||
      (faces_[f2].length() == faces_[f1].length() && f2 < f1))
    outer = f2;
  set_decoration(top, outer);
}

void PlanarDiagram::set_decoration(int marked_edge, int outer_face) {
  if (marked_edge < 1 || marked_edge > edge_count())
    throw ParseError("marked edge " + std::to_string(marked_edge) + " out of range");
  auto [f1, f2] = edge_faces(marked_edge);
  if (f1 == f2) throw ParseError("marked edge has the same face on both sides");
  if (outer_face == -1) outer_face = std::min(f1, f2);
  if (outer_face != f1 && outer_face != f2)
    throw ParseError("outer face " + std::to_string(outer_face) +
                     " is not adjacent to the marked edge");
  marked_edge_ = marked_edge;
  face_a_ = outer_face;
  face_b_ = (outer_face == f1) ? f2 : f1;
}

int PlanarDiagram::succ(int label) const {
  auto [lo, len] = component_blocks_[edges_[label - 1].component];
  return label == lo + len - 1 ? lo : label + 1;
}

int PlanarDiagram::pred(int label) const {
  auto [lo, len] = component_blocks_[edges_[label - 1].component];
  return label == lo ? lo + len - 1 : label - 1;
}

std::pair<int, int> PlanarDiagram::edge_faces(int label) const {
  int first = -1, second = -1;
  for (int f = 0; f < face_count(); ++f)
    for (const auto& side : faces_[f].sides)
      if (side.edge == label) (first == -1 ? first : second) = f;
  return {first, second};
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

bool PlanarDiagram::is_alternating() const {
  if (crossing_count() == 0) return true;
  // Along each component, the strand must pass under and over alternately.
  for (auto [lo, len] : component_blocks_) {
    int label = lo;
    int prev = 2;  // 0 = under, 1 = over
    for (int i = 0; i <= len; ++i) {
      const EdgeRec& e = edges_[label - 1];
      int kind = (e.head_slot == 0) ? 0 : 1;
      if (i > 0 && kind == prev) return false;
      prev = kind;
      label = succ(label);
    }
  }
  return true;
}

bool PlanarDiagram::is_reduced() const {
  for (const auto& c : crossings_) {
    for (int q = 0; q < 4; ++q)
      for (int r = q + 1; r < 4; ++r)
        if (c.quadrant_face[q] == c.quadrant_face[r]) return false;
  }
  return true;
}

Coloring PlanarDiagram::checkerboard() const {
  Coloring col;
  col.face_color.assign(face_count(), FaceColor::black);
  std::vector<int> state(face_count(), -1);
  std::vector<int> queue{0};
  state[0] = 0;
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (const auto& side : faces_[f].sides) {
      auto [a, b] = edge_faces(side.edge);
      int g = (a == f) ? b : a;
      if (state[g] == -1) {
        state[g] = 1 - state[f];
        queue.push_back(g);
      } else if (state[g] == state[f]) {
        throw std::logic_error("projection has no proper checkerboard coloring");
      }
    }
  }
  for (int f = 0; f < face_count(); ++f)
    col.face_color[f] = state[f] == 0 ? FaceColor::black : FaceColor::white;

  // Alternating diagrams get the convention that under-first quadrants are
  // white; otherwise make face A white.
  bool monochrome = true;
  FaceColor under_color = FaceColor::white;
  bool has_crossing = crossing_count() > 0;
  if (has_crossing) {
    under_color = col.face_color[crossings_[0].quadrant_face[0]];
    for (const auto& c : crossings_)
      for (int q = 0; q < 4; q += 2)
        if (col.face_color[c.quadrant_face[q]] != under_color) monochrome = false;
  }
  if (has_crossing && monochrome) {
    if (under_color != FaceColor::white) col = col.flipped();
    col.under_first_consistent = true;
  } else {
    if (col.face_color[face_a_] != FaceColor::white) col = col.flipped();
    col.under_first_consistent = !has_crossing;
  }
  return col;
}

BlackGraph PlanarDiagram::black_graph(const Coloring& c) const {
  BlackGraph g;
  std::vector<int> vertex_of(face_count(), -1);
  for (int f = 0; f < face_count(); ++f)
    if (c.face_color[f] == FaceColor::black) {
      vertex_of[f] = static_cast<int>(g.vertex_face.size());
      g.vertex_face.push_back(f);
    }
  for (const auto& cr : crossings_) {
    int black_q = (c.face_color[cr.quadrant_face[0]] == FaceColor::black) ? 0 : 1;
    int u = vertex_of[cr.quadrant_face[black_q]];
    int v = vertex_of[cr.quadrant_face[black_q + 2]];
    g.edges.push_back({u, v});
  }
  return g;
}

PlanarDiagram PlanarDiagram::mirror() const {
  if (crossing_count() == 0) return *this;
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(crossings_.size());
  for (const auto& c : crossings_) {
    // The old incoming over-strand becomes the incoming under-strand;
    // the counterclockwise slot order is preserved.
    const auto& e = c.edge;
    if (c.sign > 0)
      tuples.push_back({e[1], e[2], e[3], e[0]});
    else
      tuples.push_back({e[3], e[0], e[1], e[2]});
  }
  return build(std::move(tuples), 0, -1);
}

PlanarDiagram PlanarDiagram::with_decoration(int marked_edge, int outer_face) const {
  PlanarDiagram d = *this;
  d.set_decoration(marked_edge, outer_face);
  return d;
}

std::string PlanarDiagram::to_json() const {
  nlohmann::ordered_json j;
  j["crossings"] = nlohmann::ordered_json::array();
  for (const auto& c : crossings_) {
    nlohmann::ordered_json jc;
    jc["slots"] = c.edge;
    jc["sign"] = c.sign;
    j["crossings"].push_back(jc);
  }
  j["components"] = components_;
  j["marked_edge"] = marked_edge_;
  j["outer_face"] = face_a_;
  j["faces"] = nlohmann::ordered_json::array();
  for (const auto& f : faces_) {
    nlohmann::ordered_json jf = nlohmann::ordered_json::array();
    for (const auto& side : f.sides)
      jf.push_back({side.edge, side.forward ? 0 : 1});
    j["faces"].push_back(jf);
  }
  return j.dump();
}

PlanarDiagram PlanarDiagram::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad diagram JSON: ") + e.what());
  }
  if (!j.contains("crossings")) throw ParseError("diagram JSON lacks 'crossings'");
  if (j["crossings"].empty()) return unknot();
  std::vector<std::array<int, 4>> tuples;
  for (const auto& jc : j["crossings"]) {
    std::array<int, 4> t{};
    const auto& slots = jc.at("slots");
    for (int i = 0; i < 4; ++i) t[i] = slots.at(i).get<int>();
    tuples.push_back(t);
  }
  int marked = j.value("marked_edge", 0);
  int outer = j.value("outer_face", -1);
  return build(std::move(tuples), marked, outer);
}

PlanarDiagram PlanarDiagram::from_gauss(const std::string& text) {
  // Tokens [OU]<crossing>[+-]; components separated by commas.
  std::string cleaned = strip_comment(text);
  std::vector<std::vector<std::string>> comps(1);
  std::string tok;
  for (char ch : cleaned) {
    if (ch == ',') {
      if (!tok.empty()) comps.back().push_back(tok), tok.clear();
      comps.emplace_back();
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!tok.empty()) comps.back().push_back(tok), tok.clear();
    } else {
      tok.push_back(ch);
    }
  }
  if (!tok.empty()) comps.back().push_back(tok);
  while (!comps.empty() && comps.back().empty()) comps.pop_back();
  if (comps.empty()) throw ParseError("empty Gauss code");

  struct Visit {
    int crossing;
    bool over;
    int sign;
  };
  std::vector<std::vector<Visit>> visits;
  int max_crossing = 0;
  for (const auto& comp : comps) {
    if (comp.empty()) throw ParseError("empty component in Gauss code");
    visits.emplace_back();
    for (const auto& t : comp) {
      if (t.size() < 3 || (t[0] != 'O' && t[0] != 'U') ||
          (t.back() != '+' && t.back() != '-'))
        throw ParseError("malformed Gauss token '" + t + "'");
      int num = 0;
      try {
        std::size_t used = 0;
        num = std::stoi(t.substr(1, t.size() - 2), &used);
        if (used != t.size() - 2) throw std::invalid_argument(t);
      } catch (const std::exception&) {
        throw ParseError("malformed Gauss token '" + t + "'");
      }
      if (num < 1) throw ParseError("crossing numbers must be positive");
      max_crossing = std::max(max_crossing, num);
      visits.back().push_back({num - 1, t[0] == 'O', t.back() == '+' ? +1 : -1});
    }
  }
  int total = 0;
  for (const auto& v : visits) total += static_cast<int>(v.size());
  if (total != 2 * max_crossing)
    throw ParseError("Gauss code visits " + std::to_string(total) +
                     " crossings, expected " + std::to_string(2 * max_crossing));

  // Assign edge labels per component block, then place each visit's
  // incoming/outgoing edges into PD slots according to over/under and sign.
  std::vector<std::array<int, 4>> tuples(max_crossing, {0, 0, 0, 0});
  std::vector<int> seen_over(max_crossing, 0), seen_under(max_crossing, 0);
  std::vector<int> sign(max_crossing, 0);
  int next_label = 1;
  for (const auto& comp : visits) {
    int m = static_cast<int>(comp.size());
    int first = next_label;
    for (int i = 0; i < m; ++i) {
      const Visit& v = comp[i];
      // Edge first+i runs from visit i to visit i+1.
      int out_edge = first + i;
      int in_edge = first + (i + m - 1) % m;
      if (sign[v.crossing] == 0)
        sign[v.crossing] = v.sign;
      else if (sign[v.crossing] != v.sign)
        throw ParseError("inconsistent signs at crossing " +
                         std::to_string(v.crossing + 1));
      if (v.over) {
        if (++seen_over[v.crossing] > 1)
          throw ParseError("crossing " + std::to_string(v.crossing + 1) +
                           " crossed over twice");
        int in_slot = v.sign > 0 ? 1 : 3;
        tuples[v.crossing][in_slot] = in_edge;
        tuples[v.crossing][4 - in_slot] = out_edge;
      } else {
        if (++seen_under[v.crossing] > 1)
          throw ParseError("crossing " + std::to_string(v.crossing + 1) +
                           " crossed under twice");
        tuples[v.crossing][0] = in_edge;
        tuples[v.crossing][2] = out_edge;
      }
    }
    next_label += m;
  }
  for (int c = 0; c < max_crossing; ++c)
    if (seen_over[c] != 1 || seen_under[c] != 1)
      throw ParseError("crossing " + std::to_string(c + 1) +
                       " must appear once over and once under");
  return build(std::move(tuples), 0, -1);
}

}  // namespace kstate
