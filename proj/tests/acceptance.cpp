// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout.  Exit code 0 iff everything passes.
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "kstate/batch.hpp"
#include "kstate/invariants.hpp"
#include "kstate/oracle.hpp"
#include "kstate/polynomial.hpp"
#include "kstate/states.hpp"

using kstate::BigInt;
using kstate::LaurentPolynomial;
using kstate::PlanarDiagram;
using testutil::corpus;
using testutil::corpus_lines;
using testutil::sym;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

bool check_9_42_certificate() {
  auto delta942 = sym({-1, 2, -1});
  auto rep = kstate::obstruction(delta942, 2);
  if (rep.pass) return false;
  if (rep.violations.size() != 1) return false;
  if (rep.violations[0].s != 0) return false;
  if (rep.violations[0].excess != 1) return false;
  // the bundled diagram reproduces the same certificate end to end
  auto d = corpus("9_42");
  if (d.is_alternating()) return false;
  auto gamma = kstate::state_sum(d);
  if (!(gamma == delta942)) return false;
  auto rep2 = kstate::obstruction(gamma, kstate::signature_goeritz(d));
  return !rep2.pass && rep2.violations.size() == 1 && rep2.violations[0].s == 0;
}

bool check_trefoil() {
  auto d = corpus("trefoil-right");
  if (!(kstate::state_sum(d) == sym({-1, 1}))) return false;
  if (kstate::signature_alternating(d) != -2) return false;
  auto table = kstate::hfk_table(d);
  if (table.size() != 3) return false;
  // ranks (1,1,1) at s = (1,0,-1) in Maslov gradings (0,-1,-2)
  int expect_s2[3] = {2, 0, -2};
  int expect_m2[3] = {0, -2, -4};
  for (int i = 0; i < 3; ++i)
    if (table[i].s2 != expect_s2[i] || table[i].m2 != expect_m2[i] ||
        table[i].rank != 1)
      return false;
  return kstate::d_one_surgery(d) == -2;
}

bool check_link() {
  auto d = corpus("resolved-link");
  if (d.component_count() != 2 || !d.is_alternating()) return false;
  if (!(kstate::hfk_polynomial(d) == sym({10, -6, 1}))) return false;
  if (kstate::signature_alternating(d) != -1) return false;
  if (kstate::signature_goeritz(d) != -1) return false;
  auto table = kstate::hfk_table(d);
  if (table.size() != 5) return false;
  long ranks[5] = {1, 6, 10, 6, 1};
  for (int i = 0; i < 5; ++i) {
    int s2 = 2 * (2 - i);
    if (table[i].s2 != s2 || table[i].rank != ranks[i]) return false;
    if (table[i].m2 != s2 - 1) return false;  // Maslov grading s - 1/2
  }
  return true;
}

bool check_figure_eight() {
  auto d = corpus("figure-eight");
  if (kstate::enumerate_states(d).size() != 5) return false;
  if (!(kstate::state_sum(d) == sym({3, -1}))) return false;
  auto h = kstate::hf_plus_zero_surgery(d);
  if (h.sigma != 0 || h.b0 != 1) return false;
  if (h.b0_degree2 != -1) return false;                          // degree -1/2
  if (h.tower1_bottom2 != -1 || h.tower2_bottom2 != 1) return false;  // -1/2, +1/2
  for (const auto& ps : h.per_s)
    if (ps.b != 0 || ps.delta_s != 0) return false;
  auto hopf = kstate::hopf_invariant(d);
  return hopf.h == -1 && !hopf.tight;
}

bool check_delta_torsion() {
  for (int q = 3; q <= 13; q += 2) {
    // two derivations of the torus knot polynomial: the bundled diagram's
    // state sum and the closed alternating-coefficient form
    auto gamma = kstate::state_sum(corpus("torus-2-" + std::to_string(q)));
    LaurentPolynomial closed;
    for (int k = 0; k <= q - 1; ++k)
      closed.add_term(q - 1 - 2 * k, (k % 2 == 0) ? 1 : -1);
    if (!(gamma == closed)) return false;
    auto t = kstate::torsion_coefficients(gamma);
    for (int sigma : {-(q - 1), q - 1})
      for (int s = 0; s <= q + 2; ++s) {
        BigInt ts = t.count(s) ? t.at(s) : BigInt(0);
        if (ts != kstate::delta(sigma, s)) return false;
      }
  }
  return true;
}

bool check_triple_count() {
  for (const auto& [name, line] : corpus_lines()) {
    auto d = PlanarDiagram::from_pd(line);
    if (!d.is_alternating() || d.crossing_count() > 12) continue;
    auto states = kstate::enumerate_states(d);
    auto trees = kstate::kirchhoff_count(d.black_graph(d.checkerboard()));
    auto gamma = kstate::state_sum(d);
    BigInt n = BigInt(states.size());
    if (trees != n) return false;
    if (gamma.sum_abs_coeffs() != n) return false;
    if (kstate::determinant(gamma) != n) return false;
  }
  return true;
}

bool check_decoration_invariance() {
  for (const auto& [name, line] : corpus_lines()) {
    auto d = PlanarDiagram::from_pd(line);
    if (d.crossing_count() > 9) continue;
    auto gamma = kstate::state_sum(d);
    auto count = kstate::enumerate_states(d).size();
    for (int e = 1; e <= d.edge_count(); ++e) {
      auto [f1, f2] = d.edge_faces(e);
      for (int outer : {f1, f2}) {
        auto d2 = d.with_decoration(e, outer);
        if (!(kstate::state_sum(d2) == gamma)) return false;
        if (kstate::enumerate_states(d2).size() != count) return false;
      }
    }
  }
  return true;
}

bool check_structural(std::string& detail) {
  for (const auto& [name, line] : corpus_lines()) {
    auto d = PlanarDiagram::from_pd(line);
    kstate::KauffmanState x0;
    try {
      x0 = kstate::canonical_state(d);  // asserts validity and M = 0
    } catch (const std::exception& e) {
      detail = name + ": " + e.what();
      return false;
    }
    if (x0.grading2 != 0 || !kstate::is_valid_state(d, x0.quadrant)) {
      detail = name + ": bad canonical state";
      return false;
    }
    // the canonical state is the unique one whose quadrants contain the
    // per-crossing penultimate edges
    auto vo = kstate::visit_order(d);
    auto matches = [&](const kstate::KauffmanState& x) {
      for (int c = 0; c < d.crossing_count(); ++c) {
        int s = vo.penultimate_slot[c];
        if (x.quadrant[c] != s && x.quadrant[c] != (s + 3) % 4) return false;
      }
      return true;
    };
    if (!matches(x0)) {
      detail = name + ": canonical state misses a penultimate edge";
      return false;
    }
    auto states = kstate::enumerate_states(d);
    if (d.crossing_count() <= 12) {
      int matching = 0;
      for (const auto& x : states)
        if (matches(x)) ++matching;
      if (matching != 1) {
        detail = name + ": penultimate property not unique";
        return false;
      }
    }
    bool alternating = d.is_alternating() && d.is_reduced();
    int sigma = alternating ? kstate::signature_alternating(d) : 0;
    if (alternating)
      for (const auto& x : states)
        if (x.grading2 - x.filtration2 != sigma) {
          detail = name + ": 2(M-S) differs from sigma";
          return false;
        }
    if (d.crossing_count() <= 9) {
      if (!kstate::clock_connected(d)) {
        detail = name + ": clock graph disconnected";
        return false;
      }
      for (const auto& x : states)
        for (const auto& y : kstate::transpositions(d, x))
          if (std::abs(x.grading2 - y.grading2) != 2) {
            detail = name + ": transposition grading step is not one";
            return false;
          }
    }
  }
  return true;
}

bool check_oracle_concordance() {
  for (const auto& [name, line] : corpus_lines()) {
    auto d = PlanarDiagram::from_pd(line);
    int oracle = kstate::signature_goeritz(d);
    if (d.is_alternating() && d.is_reduced())
      if (oracle != kstate::signature_alternating(d)) return false;
    if (kstate::signature_goeritz(d.mirror()) != -oracle) return false;
  }
  return kstate::signature_goeritz(corpus("9_42")) == 2;
}

}  // namespace

int main() {
  try {
    report(1, "9_42 non-alternating certificate (witness s=0)", check_9_42_certificate());
    report(2, "right trefoil: Gamma, sigma, hfk bigrading, d(S^3_1) = -2", check_trefoil());
    report(3, "two-component link: normalized polynomial, sigma = -1, hfk ranks",
           check_link());
    report(4, "figure-eight: states, Gamma, HF+ of zero-surgery, Hopf invariant",
           check_figure_eight());
    report(5, "delta equals torus knot torsion coefficients, |sigma| <= 12",
           check_delta_torsion());
    report(6, "state count = tree count = coefficient sum = determinant",
           check_triple_count());
    report(7, "state sum invariant under all decorations (<= 9 crossings)",
           check_decoration_invariance());
    std::string detail;
    bool structural = check_structural(detail);
    report(8, "canonical state, clock connectivity, grading steps, 2(M-S) = sigma",
           structural, detail);
    report(9, "Goeritz oracle concordance and mirror antisymmetry",
           check_oracle_concordance());
  } catch (const std::exception& e) {
    std::cout << "FAIL suite aborted: " << e.what() << "\n";
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
