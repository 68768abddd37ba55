#include "kstate/states.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace kstate {

int local_filtration2(const Crossing& c, int q) {
  if (q == c.toward_quadrant()) return c.sign;
  if (q == c.away_quadrant()) return -c.sign;
  return 0;
}

int local_grading2(const Crossing& c, int q) {
  return q == c.away_quadrant() ? -2 * c.sign : 0;
}

int filtration2(const PlanarDiagram& d, const std::vector<std::uint8_t>& quadrant) {
  int s = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    s += local_filtration2(d.crossings()[c], quadrant[c]);
  return s;
}

int grading2(const PlanarDiagram& d, const std::vector<std::uint8_t>& quadrant) {
  int m = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    m += local_grading2(d.crossings()[c], quadrant[c]);
  return m;
}

bool is_valid_state(const PlanarDiagram& d, const std::vector<std::uint8_t>& quadrant) {
  if (static_cast<int>(quadrant.size()) != d.crossing_count()) return false;
  std::vector<bool> used(d.face_count(), false);
  used[d.face_a()] = used[d.face_b()] = true;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (quadrant[c] > 3) return false;
    int f = d.crossings()[c].quadrant_face[quadrant[c]];
    if (used[f]) return false;
    used[f] = true;
  }
  return true;
}

std::string KauffmanState::to_json() const {
  nlohmann::ordered_json j;
  j["assignment"] = quadrant;
  j["filtration2"] = filtration2;
  j["grading2"] = grading2;
  return j.dump();
}

static KauffmanState make_state(const PlanarDiagram& d,
                                std::vector<std::uint8_t> quadrant) {
  KauffmanState x;
  x.filtration2 = filtration2(d, quadrant);
  x.grading2 = grading2(d, quadrant);
  x.quadrant = std::move(quadrant);
  return x;
}

std::vector<KauffmanState> enumerate_states(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  std::vector<KauffmanState> out;
  if (n == 0) {
    out.push_back(make_state(d, {}));
    return out;
  }
  std::vector<std::uint8_t> pick(n, 0);
  std::vector<bool> used(d.face_count(), false);
  used[d.face_a()] = used[d.face_b()] = true;

  // Depth-first over quadrants 0..3 at each crossing gives lexicographic
  // output order.
  int c = 0;
  int q = 0;
  while (true) {
    if (q == 4) {
      if (c == 0) break;
      --c;
      q = pick[c];
      used[d.crossings()[c].quadrant_face[q]] = false;
      ++q;
      continue;
    }
    int f = d.crossings()[c].quadrant_face[q];
    if (used[f]) {
      ++q;
      continue;
    }
    pick[c] = static_cast<std::uint8_t>(q);
    used[f] = true;
    if (c == n - 1) {
      out.push_back(make_state(d, pick));
      used[f] = false;
      ++q;
      continue;
    }
    ++c;
    q = 0;
  }
  return out;
}

VisitOrder visit_order(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  VisitOrder v;
  v.second_visit_time.assign(n, -1);
  v.penultimate_edge.assign(n, -1);
  v.penultimate_slot.assign(n, -1);
  if (n == 0) return v;

  // Start edges: the marked edge's component first, then the remaining
  // components keyed by lowest label.
  std::vector<int> start_edges{d.marked_edge()};
  std::map<int, int> lowest;  // component -> lowest label
  for (int l = 1; l <= d.edge_count(); ++l) {
    int comp = d.edge(l).component;
    if (!lowest.count(comp)) lowest[comp] = l;
  }
  int marked_comp = d.edge(d.marked_edge()).component;
  for (const auto& [comp, lo] : lowest)
    if (comp != marked_comp) start_edges.push_back(lo);

  int time = 0;
  for (int start : start_edges) {
    int label = start;
    do {
      const EdgeRec& e = d.edge(label);
      int c = e.head_crossing;
      // Later visit wins; the incoming edge of that visit is the
      // crossing's penultimate edge.
      v.second_visit_time[c] = time;
      v.penultimate_edge[c] = label;
      v.penultimate_slot[c] = e.head_slot;
      ++time;
      label = d.succ(label);
    } while (label != start);
    // complete the loop: traverse the start edge's own head visit
    const EdgeRec& e = d.edge(start);
    (void)e;
  }
  return v;
}

KauffmanState canonical_state(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return make_state(d, {});
  VisitOrder vo = visit_order(d);

  std::vector<std::uint8_t> pick(n, 4);
  std::vector<bool> in_x(d.face_count(), false);
  in_x[d.face_a()] = in_x[d.face_b()] = true;

  for (int step = 0; step < n; ++step) {
    // Candidates: unassigned crossings whose penultimate edge flanks one
    // face inside the exhausted region and one outside; the latest-visited
    // candidate is the region's last corner.
    int best = -1, best_outside = -1;
    for (int c = 0; c < n; ++c) {
      if (pick[c] != 4) continue;
      int s = vo.penultimate_slot[c];
      int qa = (s + 3) % 4;
      int qb = s;
      bool a_in = in_x[d.crossings()[c].quadrant_face[qa]];
      bool b_in = in_x[d.crossings()[c].quadrant_face[qb]];
      if (a_in == b_in) continue;
      if (best == -1 || vo.second_visit_time[c] > vo.second_visit_time[best]) {
        best = c;
        best_outside = a_in ? qb : qa;
      }
    }
    if (best == -1)
      throw std::logic_error("canonical state induction stalled; diagram is invalid");
    pick[best] = static_cast<std::uint8_t>(best_outside);
    in_x[d.crossings()[best].quadrant_face[best_outside]] = true;
  }
  if (!is_valid_state(d, pick))
    throw std::logic_error("canonical state construction produced an invalid state");
  KauffmanState x = make_state(d, pick);
  if (x.grading2 != 0)
    throw std::logic_error("canonical state has nonzero grading");
  return x;
}

std::vector<KauffmanState> transpositions(const PlanarDiagram& d, const KauffmanState& x) {
  const int n = d.crossing_count();
  std::set<std::vector<std::uint8_t>> found;
  std::vector<bool> face_used(d.face_count(), false);
  for (int c = 0; c < n; ++c)
    face_used[d.crossings()[c].quadrant_face[x.quadrant[c]]] = true;

  // Two quadrants flanking slot s at a crossing.
  auto flanks = [&](int s) { return std::pair<int, int>{(s + 3) % 4, s}; };

  for (int v1 = 0; v1 < n; ++v1) {
    for (int dir = 0; dir < 4; ++dir) {
      // Walk a straight path along the link starting from v1 out of slot
      // `dir`, stopping at the marked edge or on return to the start.
      int first_edge = d.crossings()[v1].edge[dir];
      if (first_edge == d.marked_edge()) continue;
      auto [fq1a, fq1b] = flanks(dir);
      int xq1 = x.quadrant[v1];
      if (xq1 != fq1a && xq1 != fq1b) continue;
      int yq1 = (xq1 == fq1a) ? fq1b : fq1a;

      int label = first_edge;
      int from_crossing = v1, from_slot = dir;
      for (int steps = 0; steps < 2 * n + 1; ++steps) {
        const EdgeRec& e = d.edge(label);
        bool forward = (e.tail_crossing == from_crossing && e.tail_slot == from_slot);
        int v2 = forward ? e.head_crossing : e.tail_crossing;
        int s2 = forward ? e.head_slot : e.tail_slot;
        if (v2 == v1 && s2 == ((dir + 2) % 4)) break;  // closed the loop
        if (v2 != v1) {
          auto [fq2a, fq2b] = flanks(s2);
          int xq2 = x.quadrant[v2];
          if (xq2 == fq2a || xq2 == fq2b) {
            int yq2 = (xq2 == fq2a) ? fq2b : fq2a;
            int f1 = d.crossings()[v1].quadrant_face[yq1];
            int f2 = d.crossings()[v2].quadrant_face[yq2];
            int old1 = d.crossings()[v1].quadrant_face[xq1];
            int old2 = d.crossings()[v2].quadrant_face[xq2];
            bool ok1 = (f1 == old1 || f1 == old2 || !face_used[f1]) &&
                       f1 != d.face_a() && f1 != d.face_b();
            bool ok2 = (f2 == old1 || f2 == old2 || !face_used[f2]) &&
                       f2 != d.face_a() && f2 != d.face_b();
            if (ok1 && ok2 && f1 != f2) {
              auto y = x.quadrant;
              y[v1] = static_cast<std::uint8_t>(yq1);
              y[v2] = static_cast<std::uint8_t>(yq2);
              found.insert(std::move(y));
            }
          }
        }
        // continue straight through v2
        int out_slot = (s2 + 2) % 4;
        int next_label = d.crossings()[v2].edge[out_slot];
        if (next_label == d.marked_edge()) break;
        from_crossing = v2;
        from_slot = out_slot;
        label = next_label;
      }
    }
  }
  std::vector<KauffmanState> out;
  out.reserve(found.size());
  for (const auto& q : found) out.push_back(make_state(d, q));
  return out;
}

std::size_t clock_edge_count(const PlanarDiagram& d) {
  auto states = enumerate_states(d);
  std::size_t twice = 0;
  for (const auto& x : states) twice += transpositions(d, x).size();
  return twice / 2;
}

bool clock_connected(const PlanarDiagram& d) {
  auto states = enumerate_states(d);
  if (states.size() <= 1) return true;
  std::map<std::vector<std::uint8_t>, int> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i].quadrant] = static_cast<int>(i);
  std::vector<bool> visited(states.size(), false);
  std::vector<int> stack{0};
  visited[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (const auto& y : transpositions(d, states[i])) {
      auto it = index.find(y.quadrant);
      if (it == index.end())
        throw std::logic_error("transposition produced an unknown state");
      if (!visited[it->second]) {
        visited[it->second] = true;
        ++count;
        stack.push_back(it->second);
      }
    }
  }
  return count == states.size();
}

}  // namespace kstate
