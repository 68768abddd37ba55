#include "kstate/polynomial.hpp"
#include "kstate/states.hpp"

namespace kstate {

LaurentPolynomial state_sum(const PlanarDiagram& d) {
  LaurentPolynomial gamma;
  for (const auto& x : enumerate_states(d)) {
    int m = x.grading2 / 2;
    gamma.add_term(x.filtration2, (m % 2 == 0) ? 1 : -1);
  }
  const int n = d.component_count();
  if (n == 1) {
    if (gamma.eval_at_one() != 1)
      throw std::logic_error("state sum of a knot diagram is not Conway-normalized");
    if (!gamma.is_symmetric())
      throw std::logic_error("state sum of a knot diagram is not symmetric");
  } else {
    // Conway polynomials of links satisfy p(1/T) = (-1)^(n-1) p(T) and
    // vanish at T = 1.
    LaurentPolynomial expected = gamma.reciprocal();
    if (n % 2 == 0) {
      LaurentPolynomial neg;
      neg -= expected;
      expected = neg;
    }
    if (!(expected == gamma))
      throw std::logic_error("state sum of a link diagram has wrong symmetry");
    if (gamma.eval_at_one() != 0)
      throw std::logic_error("state sum of a link diagram does not vanish at T=1");
  }
  return gamma;
}

LaurentPolynomial hfk_polynomial(const PlanarDiagram& d) {
  LaurentPolynomial p = state_sum(d);
  // (T^(-1/2) - T^(1/2))^(n-1)
  LaurentPolynomial z;
  z.add_term(-1, 1);
  z.add_term(1, -1);
  for (int i = 1; i < d.component_count(); ++i) p = p * z;
  return p;
}

}  // namespace kstate
