#include "kstate/polynomial.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace kstate {

LaurentPolynomial LaurentPolynomial::constant(BigInt c) {
  LaurentPolynomial p;
  p.add_term(0, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(int exp2, BigInt c) {
  LaurentPolynomial p;
  p.add_term(exp2, c);
  return p;
}

BigInt LaurentPolynomial::coeff2(int exp2) const {
  auto it = terms_.find(exp2);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(int exp2, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp2, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPolynomial::min_exp2() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exp2() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(-e, c);
  return r;
}

BigInt LaurentPolynomial::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

BigInt LaurentPolynomial::sum_abs_coeffs() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string power;
    if (e == 0) {
      out << a;
      continue;
    } else if (e == 2) {
      power = "T";
    } else if (e % 2 == 0) {
      power = "T^" + std::to_string(e / 2);
    } else {
      power = "T^(" + std::to_string(e) + "/2)";
    }
    if (a != 1) out << a << "*";
    out << power;
  }
  return out.str();
}

std::string LaurentPolynomial::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  // 2^53: largest magnitude faithfully representable downstream.
  static const BigInt kJsonSafe = BigInt(1) << 53;
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json term = nlohmann::ordered_json::array();
    term.push_back(e);
    if (abs(c) <= kJsonSafe)
      term.push_back(static_cast<std::int64_t>(c));
    else
      term.push_back(c.str());
    j.push_back(term);
  }
  return j.dump();
}

std::map<int, BigInt> coefficients(const LaurentPolynomial& p) {
  if (!p.is_symmetric()) throw std::domain_error("polynomial is not symmetric");
  std::map<int, BigInt> a;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw std::domain_error("polynomial has half-integer exponents");
    if (e >= 0) a[e / 2] = c;
  }
  return a;
}

std::map<int, BigInt> torsion_coefficients(const LaurentPolynomial& p) {
  if (p.eval_at_one() != 1)
    throw std::domain_error("torsion coefficients need a knot polynomial, p(1) = 1");
  auto a = coefficients(p);
  int deg = a.empty() ? 0 : a.rbegin()->first;
  std::map<int, BigInt> t;
  for (int s = 0; s <= deg; ++s) {
    BigInt ts = 0;
    for (int j = 1; s + j <= deg; ++j) {
      auto it = a.find(s + j);
      if (it != a.end()) ts += j * it->second;
    }
    t[s] = ts;
  }
  return t;
}

BigInt determinant(const LaurentPolynomial& p) {
  if (p.is_zero()) return 0;
  // All exponents share one parity r; p(-1) = i^r * sum c_e * (-1)^((e-r)/2).
  int r = ((p.min_exp2() % 2) + 2) % 2;
  BigInt v = 0;
  for (const auto& [e, c] : p.terms()) {
    if ((((e % 2) + 2) % 2) != r)
      throw std::domain_error("mixed exponent parities in determinant");
    v += (((e - r) / 2) % 2 == 0) ? c : -c;
  }
  return abs(v);
}

int genus_bound(const LaurentPolynomial& p) {
  auto a = coefficients(p);
  int g = 0;
  for (const auto& [s, c] : a)
    if (c != 0 && s > g) g = s;
  return g;
}

}  // namespace kstate
