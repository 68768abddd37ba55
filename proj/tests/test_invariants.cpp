#include <doctest.h>

#include "corpus.hpp"
#include "kstate/invariants.hpp"
#include "kstate/oracle.hpp"
#include "kstate/states.hpp"

using kstate::BigInt;
using kstate::LaurentPolynomial;
using kstate::NotApplicable;
using kstate::PlanarDiagram;
using testutil::corpus;
using testutil::sym;

TEST_SUITE("invariants") {
  TEST_CASE("signatures of bundled alternating diagrams") {
    CHECK(kstate::signature_alternating(corpus("trefoil-right")) == -2);
    CHECK(kstate::signature_alternating(corpus("trefoil-left")) == 2);
    CHECK(kstate::signature_alternating(corpus("figure-eight")) == 0);
    CHECK(kstate::signature_alternating(corpus("resolved-link")) == -1);
    CHECK(kstate::signature_alternating(corpus("8_16")) == -2);
    for (int q = 3; q <= 13; q += 2)
      CHECK(kstate::signature_alternating(corpus("torus-2-" + std::to_string(q))) ==
            -(q - 1));
    CHECK(kstate::signature_alternating(PlanarDiagram::from_pd("unknot")) == 0);
  }

  TEST_CASE("signature refuses bad input") {
    CHECK_THROWS_AS(kstate::signature_alternating(corpus("9_42")), NotApplicable);
    CHECK_THROWS_AS(kstate::signature_alternating(PlanarDiagram::from_pd("X[1,2,2,1]")),
                    NotApplicable);
  }

  TEST_CASE("delta formula") {
    CHECK(kstate::delta(-4, 1) == 1);
    CHECK(kstate::delta(-4, 0) == 1);
    CHECK(kstate::delta(2, 0) == 1);
    CHECK(kstate::delta(0, 0) == 0);
    for (int sigma = -12; sigma <= 12; sigma += 2)
      for (int s = -10; s <= 10; ++s) {
        int d = kstate::delta(sigma, s);
        CHECK(d >= 0);
        if (2 * std::abs(s) >= std::abs(sigma)) CHECK(d == 0);
        CHECK(kstate::delta(sigma, s) == kstate::delta(-sigma, -s));
        if (std::abs(s) > 0)
          CHECK(kstate::delta(sigma, s) <= kstate::delta(sigma, std::abs(s) - 1));
      }
    CHECK_THROWS_AS(kstate::delta(1, 0), std::invalid_argument);
  }

  TEST_CASE("delta equals torus knot torsion coefficients") {
    for (int q = 3; q <= 13; q += 2) {
      auto gamma = kstate::state_sum(corpus("torus-2-" + std::to_string(q)));
      auto t = kstate::torsion_coefficients(gamma);
      int sigma = -(q - 1);
      for (int s = 0; s <= q; ++s) {
        BigInt ts = t.count(s) ? t[s] : BigInt(0);
        CHECK(ts == kstate::delta(sigma, s));
        CHECK(ts == kstate::delta(-sigma, s));
      }
    }
  }

  TEST_CASE("hfk table of the right trefoil") {
    auto table = kstate::hfk_table(corpus("trefoil-right"));
    REQUIRE(table.size() == 3);
    CHECK(table[0].s2 == 2);
    CHECK(table[0].m2 == 0);
    CHECK(table[0].rank == 1);
    CHECK(table[1].s2 == 0);
    CHECK(table[1].m2 == -2);
    CHECK(table[1].rank == 1);
    CHECK(table[2].s2 == -2);
    CHECK(table[2].m2 == -4);
    CHECK(table[2].rank == 1);
  }

  TEST_CASE("hfk table of the figure-eight") {
    auto table = kstate::hfk_table(corpus("figure-eight"));
    REQUIRE(table.size() == 3);
    CHECK(table[0].s2 == 2);
    CHECK(table[0].m2 == 2);
    CHECK(table[0].rank == 1);
    CHECK(table[1].s2 == 0);
    CHECK(table[1].m2 == 0);
    CHECK(table[1].rank == 3);
    CHECK(table[2].s2 == -2);
    CHECK(table[2].m2 == -2);
    CHECK(table[2].rank == 1);
  }

  TEST_CASE("hfk table of the two-component link") {
    auto table = kstate::hfk_table(corpus("resolved-link"));
    REQUIRE(table.size() == 5);
    long expected_rank[5] = {1, 6, 10, 6, 1};
    for (int i = 0; i < 5; ++i) {
      CHECK(table[i].s2 == 2 * (2 - i));
      CHECK(table[i].m2 == table[i].s2 - 1);  // gradings s - 1/2
      CHECK(table[i].rank == expected_rank[i]);
    }
  }

  TEST_CASE("hfk refuses non-alternating input") {
    CHECK_THROWS_AS(kstate::hfk_table(corpus("9_42")), NotApplicable);
  }

  TEST_CASE("hfk symmetry and total rank across the corpus") {
    for (const auto& [name, line] : testutil::corpus_lines()) {
      auto d = PlanarDiagram::from_pd(line);
      if (!d.is_alternating() || !d.is_reduced()) continue;
      auto table = kstate::hfk_table(d);
      int sigma = kstate::signature_alternating(d);
      std::map<int, BigInt> rank_by_s;
      BigInt total = 0;
      for (const auto& e : table) {
        CHECK(e.m2 == e.s2 + sigma);
        CHECK(e.rank >= 1);
        rank_by_s[e.s2] = e.rank;
        total += e.rank;
      }
      for (const auto& [s2, r] : rank_by_s) CHECK(rank_by_s.at(-s2) == r);
      if (d.component_count() == 1)
        CHECK(total == BigInt(kstate::enumerate_states(d).size()));
    }
  }

  TEST_CASE("hf+ of zero-surgery on the figure-eight") {
    auto h = kstate::hf_plus_zero_surgery(corpus("figure-eight"));
    CHECK(h.sigma == 0);
    CHECK_FALSE(h.mirrored);
    CHECK(h.b0 == 1);
    CHECK(h.b0_degree2 == -1);
    CHECK(h.tower1_bottom2 == -1);
    CHECK(h.tower2_bottom2 == 1);
    for (const auto& ps : h.per_s) {
      CHECK(ps.b == 0);
      CHECK(ps.delta_s == 0);
    }
  }

  TEST_CASE("hf+ of zero-surgery on the right trefoil") {
    auto h = kstate::hf_plus_zero_surgery(corpus("trefoil-right"));
    CHECK(h.sigma == -2);
    CHECK_FALSE(h.mirrored);
    CHECK(h.b0 == 0);
    CHECK(h.b0_degree2 == -3);
    CHECK(h.tower1_bottom2 == -1);
    CHECK(h.tower2_bottom2 == -3);  // -2*delta(-2,0) + 1/2 doubled
    REQUIRE(!h.per_s.empty());
    CHECK(h.per_s[0].b == 0);
    CHECK(h.per_s[0].delta_s == 0);
  }

  TEST_CASE("hf+ mirrors positive-signature input") {
    auto h = kstate::hf_plus_zero_surgery(corpus("trefoil-left"));
    CHECK(h.mirrored);
    CHECK(h.sigma == -2);
  }

  TEST_CASE("hf+ of zero-surgery on the unknot") {
    auto h = kstate::hf_plus_zero_surgery(PlanarDiagram::from_pd("unknot"));
    CHECK(h.sigma == 0);
    CHECK(h.b0 == 0);
    CHECK(h.tower1_bottom2 == -1);
    CHECK(h.tower2_bottom2 == 1);  // towers at -1/2 and +1/2
  }

  TEST_CASE("hf+ refuses links") {
    CHECK_THROWS_AS(kstate::hf_plus_zero_surgery(corpus("resolved-link")),
                    NotApplicable);
  }

  TEST_CASE("hf+ per-s symmetry data is consistent with b_s formula") {
    for (const char* name : {"trefoil-right", "figure-eight", "torus-2-7", "8_16"}) {
      auto d = corpus(name);
      auto h = kstate::hf_plus_zero_surgery(d);
      auto t = kstate::torsion_coefficients(kstate::state_sum(d));
      for (const auto& ps : h.per_s) {
        BigInt ts = t.count(ps.s) ? t[ps.s] : BigInt(0);
        int sign = ((ps.s + h.sigma / 2) % 2 + 2) % 2 == 0 ? 1 : -1;
        CHECK(sign * ps.b == kstate::delta(h.sigma, ps.s) - ts);
      }
    }
  }

  TEST_CASE("d-invariant of +1 surgery") {
    CHECK(kstate::d_one_surgery(corpus("trefoil-right")) == -2);
    CHECK(kstate::d_one_surgery(corpus("trefoil-left")) == 0);
    CHECK(kstate::d_one_surgery(corpus("figure-eight")) == 0);
    CHECK(kstate::d_one_surgery(PlanarDiagram::from_pd("unknot")) == 0);
    CHECK(kstate::d_one_surgery(corpus("torus-2-7")) == -4);  // sigma = -6
    for (const char* name : {"trefoil-right", "trefoil-left", "figure-eight", "8_16"}) {
      auto d = corpus(name);
      int a = kstate::d_one_surgery(d);
      int b = kstate::d_one_surgery(d.mirror());
      CHECK(a <= 0);
      CHECK(b <= 0);
      CHECK((a == 0 || b == 0));
      int sigma = kstate::signature_alternating(d);
      if (sigma >= 0) CHECK(a == 0);
    }
  }

  TEST_CASE("obstruction certifies 9_42 as non-alternating") {
    auto rep = kstate::obstruction(sym({-1, 2, -1}), 2);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].s == 0);
    CHECK(rep.violations[0].excess == 1);
    // the sharpened top-coefficient bound fails too: |a_1| < 2|a_2| + 1
    CHECK_FALSE(rep.top_coefficient_bound_ok);
  }

  TEST_CASE("obstruction passes alternating data") {
    auto trefoil = kstate::state_sum(corpus("trefoil-right"));
    CHECK(kstate::obstruction(trefoil, -2).pass);
    CHECK(kstate::obstruction(sym({1}), 0).pass);
    for (const auto& [name, line] : testutil::corpus_lines()) {
      auto d = PlanarDiagram::from_pd(line);
      if (!d.is_alternating() || !d.is_reduced() || d.component_count() != 1) continue;
      auto rep = kstate::obstruction(kstate::state_sum(d),
                                     kstate::signature_alternating(d));
      CHECK(rep.pass);
    }
  }

  TEST_CASE("obstruction sees delta support beyond the polynomial degree") {
    // unknot polynomial with an impossible signature
    auto rep = kstate::obstruction(sym({1}), -4);
    CHECK_FALSE(rep.pass);
  }

  TEST_CASE("obstruction input validation") {
    CHECK_THROWS_AS(kstate::obstruction(sym({1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(kstate::obstruction(sym({2}), 0), std::invalid_argument);
    LaurentPolynomial asym;
    asym.add_term(0, 2);
    asym.add_term(2, -1);
    CHECK_THROWS_AS(kstate::obstruction(asym, 0), std::domain_error);
  }

  TEST_CASE("hopf invariant of fibered alternating knots") {
    auto fig8 = kstate::hopf_invariant(corpus("figure-eight"));
    CHECK(fig8.h == -1);
    CHECK_FALSE(fig8.tight);
    auto tref = kstate::hopf_invariant(corpus("trefoil-right"));
    CHECK(tref.h == 0);
    CHECK(tref.tight);
    // i-fold figure-eight sums realize Hopf invariant -i
    CHECK(kstate::hopf_invariant(corpus("figure-eight-sum-2")).h == -2);
    CHECK(kstate::hopf_invariant(corpus("figure-eight-sum-3")).h == -3);
    CHECK(kstate::hopf_invariant(corpus("figure-eight-sum-4")).h == -4);
    auto unknot = kstate::hopf_invariant(PlanarDiagram::from_pd("unknot"));
    CHECK(unknot.h == 0);
    CHECK(unknot.tight);
  }

  TEST_CASE("hopf fiberedness guard") {
    // torus-2-5 has monic top coefficient and is fibered
    CHECK(kstate::hopf_invariant(corpus("torus-2-5")).h == 0);
    CHECK(kstate::hopf_invariant(corpus("torus-2-5")).tight);
  }
}
