#include "kstate/invariants.hpp"

#include <algorithm>

#include <json.hpp>

namespace kstate {

namespace {

int ceil_div(int a, int b) {
  // b > 0
  int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

int parity(int v) { return ((v % 2) + 2) % 2; }

void require_alternating_reduced(const PlanarDiagram& d, const char* op) {
  if (!d.is_alternating())
    throw NotApplicable(std::string(op) + ": diagram is not alternating");
  if (!d.is_reduced())
    throw NotApplicable(std::string(op) + ": diagram is not reduced");
}

}  // namespace

int signature_alternating(const PlanarDiagram& d) {
  require_alternating_reduced(d, "signature");
  Coloring c = d.checkerboard();
  int black = 0;
  for (auto col : c.face_color)
    if (col == FaceColor::black) ++black;
  int positive = 0;
  for (const auto& cr : d.crossings())
    if (cr.sign > 0) ++positive;
  int sigma = black - positive - 1;
  if (d.component_count() == 1 && parity(sigma) != 0)
    throw std::logic_error("knot signature came out odd");
  return sigma;
}

int delta(int sigma, int s) {
  if (parity(sigma) != 0) throw std::invalid_argument("delta: sigma must be even");
  int num = (sigma < 0 ? -sigma : sigma) - 2 * (s < 0 ? -s : s);
  if (num <= 0) return 0;
  return ceil_div(num, 4);
}

std::vector<HfkEntry> hfk_table(const PlanarDiagram& d) {
  require_alternating_reduced(d, "hfk");
  int sigma = signature_alternating(d);
  LaurentPolynomial p = hfk_polynomial(d);
  std::vector<HfkEntry> table;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    table.push_back({e, e + sigma, abs(c)});
  }
  return table;
}

HfPlusSummary hf_plus_zero_surgery(const PlanarDiagram& d) {
  if (d.component_count() != 1)
    throw NotApplicable("hfplus: zero-surgery formula applies to knots only");
  require_alternating_reduced(d, "hfplus");

  HfPlusSummary out;
  int sigma = signature_alternating(d);
  LaurentPolynomial p = state_sum(d);
  if (sigma > 0) {
    out.mirrored = true;
    sigma = -sigma;  // reflection negates sigma and preserves Delta
  }
  out.sigma = sigma;

  auto t = torsion_coefficients(p);
  auto t_at = [&](int s) {
    auto it = t.find(s);
    return it == t.end() ? BigInt(0) : it->second;
  };
  auto b_at = [&](int s) {
    int sign = parity(s + sigma / 2) == 0 ? 1 : -1;
    BigInt b = sign * (delta(sigma, s) - t_at(s));
    if (b < 0)
      throw std::logic_error("negative b_s; input cannot be an alternating knot");
    return b;
  };

  out.b0 = b_at(0);
  out.b0_degree2 = sigma - 1;
  out.tower1_bottom2 = -1;
  out.tower2_bottom2 = -4 * delta(sigma, 0) + 1;
  int g = genus_bound(p);
  int s_max = std::max(g, -sigma / 2);
  for (int s = 1; s <= s_max; ++s)
    out.per_s.push_back({s, b_at(s), parity(s + sigma / 2), delta(sigma, s)});
  return out;
}

int d_one_surgery(const PlanarDiagram& d) {
  if (d.component_count() != 1)
    throw NotApplicable("d1: correction term formula applies to knots only");
  int sigma = signature_alternating(d);
  return 2 * std::min(0, -ceil_div(-sigma, 4));
}

ObstructionReport obstruction(const LaurentPolynomial& p, int sigma) {
  if (parity(sigma) != 0)
    throw std::invalid_argument("obstruction: sigma must be even");
  if (p.eval_at_one() != 1)
    throw std::invalid_argument("obstruction: polynomial is not Conway-normalized");
  auto t = torsion_coefficients(p);  // also checks symmetry
  auto a = coefficients(p);
  auto a_at = [&](int s) {
    auto it = a.find(s);
    return it == a.end() ? BigInt(0) : it->second;
  };
  int g = genus_bound(p);
  int abs_sigma = sigma < 0 ? -sigma : sigma;

  ObstructionReport rep;
  // delta's support can extend past deg(p); check the whole range.
  int s_max = std::max(g, abs_sigma / 2);
  for (int s = 0; s <= s_max; ++s) {
    auto it = t.find(s);
    BigInt ts = it == t.end() ? BigInt(0) : it->second;
    int sign = parity(s + sigma / 2) == 0 ? 1 : -1;
    BigInt value = sign * (ts - delta(sigma, s));
    if (value > 0) rep.violations.push_back({s, value});
  }
  if (g >= 1) {
    int adjust = 0;
    if (abs_sigma == 2 * g)
      adjust = -1;
    else if (abs_sigma == 2 * g - 2)
      adjust = 1;
    rep.top_coefficient_bound_ok = abs(a_at(g - 1)) >= 2 * abs(a_at(g)) + adjust;
  }
  rep.pass = rep.violations.empty() && rep.top_coefficient_bound_ok;
  return rep;
}

std::string ObstructionReport::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = pass ? "pass" : "fail";
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) {
    nlohmann::ordered_json jv;
    jv["s"] = v.s;
    jv["excess"] = static_cast<std::int64_t>(v.excess);
    j["violations"].push_back(jv);
  }
  j["top_coefficient_bound_ok"] = top_coefficient_bound_ok;
  return j.dump();
}

HopfInvariant hopf_invariant(const PlanarDiagram& d, bool assume_fibered) {
  if (d.component_count() != 1)
    throw NotApplicable("hopf: contact invariant formula applies to knots only");
  require_alternating_reduced(d, "hopf");
  LaurentPolynomial p = state_sum(d);
  int g = genus_bound(p);
  auto a = coefficients(p);
  BigInt top = a.count(g) ? a[g] : BigInt(0);
  if (!assume_fibered && abs(top) != 1)
    throw NotApplicable(
        "hopf: top Alexander coefficient is not monic, knot may not be fibered "
        "(pass assume-fibered to override)");
  int sigma = signature_alternating(d);
  HopfInvariant h;
  h.h = -sigma / 2 - g;
  h.tight = (h.h == 0);
  return h;
}

}  // namespace kstate
