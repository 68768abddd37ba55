#ifndef KSTATE_POLYNOMIAL_HPP
#define KSTATE_POLYNOMIAL_HPP

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kstate {

using BigInt = boost::multiprecision::cpp_int;

class PlanarDiagram;

// Integer-coefficient Laurent polynomial in T with half-integer exponents.
// Exponents are stored doubled (T^(e/2) under key e), so link polynomials
// with half-integer powers stay in exact integer arithmetic.  Zero
// coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial constant(BigInt c);
  static LaurentPolynomial monomial(int exp2, BigInt c);

  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff2(int exp2) const;  // coefficient of T^(exp2/2)
  void add_term(int exp2, const BigInt& c);

  bool is_zero() const { return terms_.empty(); }
  int min_exp2() const;  // throws on zero polynomial
  int max_exp2() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // p(1/T); p is symmetric when this equals p.
  LaurentPolynomial reciprocal() const;
  bool is_symmetric() const { return reciprocal() == *this; }

  BigInt eval_at_one() const;
  BigInt sum_abs_coeffs() const;

  // "T^-1 - 1 + T"; odd doubled exponents render as halves, e.g. "T^(3/2)".
  std::string to_string() const;
  // JSON list of [exp2, coeff] pairs sorted by exponent; coefficients that
  // do not fit a double-safe integer are emitted as decimal strings.
  std::string to_json() const;

 private:
  std::map<int, BigInt> terms_;
};

// a_s for s >= 0 of a symmetric polynomial a_0 + sum a_s (T^s + T^-s).
// Requires all doubled exponents even; throws std::domain_error otherwise.
std::map<int, BigInt> coefficients(const LaurentPolynomial& p);

// Torsion coefficients t_s = sum_{j>=1} j*a_(s+j), for 0 <= s <= deg.
// Requires a symmetric knot polynomial with p(1) = 1.
std::map<int, BigInt> torsion_coefficients(const LaurentPolynomial& p);

// |p(-1)|.  With half-integer exponents present, T^(1/2) = i at T = -1 and
// the value is i^r times an integer; the integer's absolute value is returned.
BigInt determinant(const LaurentPolynomial& p);

// Top degree max{s : a_s != 0}; equals the Seifert genus when p is the
// Alexander polynomial of an alternating knot.
int genus_bound(const LaurentPolynomial& p);

// Kauffman state sum: sum over states of (-1)^M(x) T^S(x).  This is the
// Conway-normalized Alexander polynomial of the diagram's link.  For knots
// the result is checked to be symmetric with p(1) = 1; for n-component
// links it satisfies p(1/T) = (-1)^(n-1) p(T), and p(1) = 0 when n >= 2.
// A violation throws std::logic_error (sign-convention bug, not user error).
LaurentPolynomial state_sum(const PlanarDiagram& d);

// (T^(-1/2) - T^(1/2))^(n-1) * state_sum(d), the polynomial whose
// coefficients give the knot Floer ranks of an n-component alternating
// link.  Identical to state_sum for knots; always symmetric.
LaurentPolynomial hfk_polynomial(const PlanarDiagram& d);

}  // namespace kstate

#endif
