#include <doctest.h>

#include "kstate/polynomial.hpp"

using kstate::BigInt;
using kstate::LaurentPolynomial;

namespace {

// a_0 + sum a_s (T^s + T^-s) from integer coefficients, doubled exponents.
LaurentPolynomial symmetric_poly(const std::vector<long>& a) {
  LaurentPolynomial p;
  for (std::size_t s = 0; s < a.size(); ++s) {
    p.add_term(2 * static_cast<int>(s), a[s]);
    if (s > 0) p.add_term(-2 * static_cast<int>(s), a[s]);
  }
  return p;
}

// Deterministic LCG for small property checks.
struct Rng {
  unsigned long long state = 0x2545F4914F6CDD1DULL;
  int next(int lo, int hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<int>((state >> 33) % (hi - lo + 1));
  }
  LaurentPolynomial poly() {
    LaurentPolynomial p;
    int terms = next(0, 6);
    for (int i = 0; i < terms; ++i) p.add_term(next(-8, 8), next(-5, 5));
    return p;
  }
};

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("canonical form drops zero coefficients") {
    LaurentPolynomial p;
    p.add_term(2, 3);
    p.add_term(2, -3);
    CHECK(p.is_zero());
    p.add_term(0, 1);
    p.add_term(4, 2);
    CHECK(p.terms().size() == 2);
  }

  TEST_CASE("ring axioms on random sparse operands") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
      auto a = rng.poly(), b = rng.poly(), c = rng.poly();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      auto prod = a * b;
      for (const auto& [e, coeff] : prod.terms()) CHECK(coeff != 0);
    }
  }

  TEST_CASE("rendering") {
    LaurentPolynomial trefoil = symmetric_poly({-1, 1});
    CHECK(trefoil.to_string() == "T^-1 - 1 + T");
    LaurentPolynomial zero;
    CHECK(zero.to_string() == "0");
    LaurentPolynomial link;
    link.add_term(-3, 1);
    link.add_term(-1, -5);
    link.add_term(1, 5);
    link.add_term(3, -1);
    CHECK(link.to_string() == "T^(-3/2) - 5*T^(-1/2) + 5*T^(1/2) - T^(3/2)");
    CHECK(symmetric_poly({3, -1}).to_string() == "-T^-1 + 3 - T");
    CHECK(trefoil.to_json() == "[[-2,1],[0,-1],[2,1]]");
  }

  TEST_CASE("coefficients of the nine_42 polynomial") {
    // -1 + 2(T + T^-1) - (T^2 + T^-2)
    auto p = symmetric_poly({-1, 2, -1});
    auto a = kstate::coefficients(p);
    CHECK(a[0] == -1);
    CHECK(a[1] == 2);
    CHECK(a[2] == -1);
    CHECK(kstate::genus_bound(p) == 2);
  }

  TEST_CASE("coefficients reject asymmetric input") {
    LaurentPolynomial p;
    p.add_term(2, 1);
    CHECK_THROWS_AS(kstate::coefficients(p), std::domain_error);
  }

  TEST_CASE("torsion coefficients") {
    auto nine42 = symmetric_poly({-1, 2, -1});
    auto t = kstate::torsion_coefficients(nine42);
    CHECK(t[0] == 0);   // 1*2 + 2*(-1)
    CHECK(t[1] == -1);  // 1*(-1)
    CHECK(t[2] == 0);

    auto unknot = symmetric_poly({1});
    for (const auto& [s, ts] : kstate::torsion_coefficients(unknot)) CHECK(ts == 0);

    // T(2,5): T^-2 - T^-1 + 1 - T + T^2
    auto t25 = kstate::torsion_coefficients(symmetric_poly({1, -1, 1}));
    CHECK(t25[0] == 1);
    CHECK(t25[1] == 1);
    CHECK(t25[2] == 0);
  }

  TEST_CASE("determinant") {
    CHECK(kstate::determinant(symmetric_poly({-1, 1})) == 3);
    CHECK(kstate::determinant(symmetric_poly({3, -1})) == 5);
    CHECK(kstate::determinant(symmetric_poly({1})) == 1);
    // Half-integer exponents: T^(1/2) - T^(-1/2) has |p(-1)| = |2i| = 2.
    LaurentPolynomial hopf;
    hopf.add_term(1, 1);
    hopf.add_term(-1, -1);
    CHECK(kstate::determinant(hopf) == 2);
  }

  TEST_CASE("genus bound") {
    CHECK(kstate::genus_bound(symmetric_poly({-1, 1})) == 1);
    CHECK(kstate::genus_bound(symmetric_poly({3, -1})) == 1);
    CHECK(kstate::genus_bound(symmetric_poly({1})) == 0);
  }
}
