#include "kstate/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>

namespace kstate {

using Rational = boost::multiprecision::cpp_rational;

std::vector<KauffmanState> brute_force_states(const PlanarDiagram& d, int guard) {
  const int n = d.crossing_count();
  if (n > guard)
    throw GuardExceeded("brute force guard exceeded: " + std::to_string(n) +
                        " crossings > " + std::to_string(guard));
  std::vector<KauffmanState> out;
  if (n == 0) {
    KauffmanState x;
    out.push_back(x);
    return out;
  }
  std::vector<std::uint8_t> digits(n, 0);
  while (true) {
    // Validate the assignment; on failure at position k, skip the whole
    // 4^(n-1-k) block sharing that prefix.
    int fail_at = -1;
    {
      std::set<int> faces{d.face_a(), d.face_b()};
      for (int c = 0; c < n; ++c) {
        int f = d.crossings()[c].quadrant_face[digits[c]];
        if (!faces.insert(f).second) {
          fail_at = c;
          break;
        }
      }
    }
    if (fail_at == -1) {
      KauffmanState x;
      x.quadrant = digits;
      x.filtration2 = filtration2(d, digits);
      x.grading2 = grading2(d, digits);
      out.push_back(std::move(x));
    }
    int inc = (fail_at == -1) ? n - 1 : fail_at;
    for (int c = n - 1; c > inc; --c) digits[c] = 0;
    while (inc >= 0 && digits[inc] == 3) digits[inc--] = 0;
    if (inc < 0) break;
    ++digits[inc];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Fraction-free Bareiss determinant of an integer matrix.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

BigInt kirchhoff_count(const BlackGraph& g) {
  const int b = static_cast<int>(g.vertex_face.size());
  if (b <= 1) return 1;
  std::vector<std::vector<BigInt>> lap(b, std::vector<BigInt>(b, 0));
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    lap[u][u] += 1;
    lap[v][v] += 1;
    lap[u][v] -= 1;
    lap[v][u] -= 1;
  }
  std::vector<std::vector<BigInt>> minor(b - 1, std::vector<BigInt>(b - 1));
  for (int i = 1; i < b; ++i)
    for (int j = 1; j < b; ++j) minor[i - 1][j - 1] = lap[i][j];
  return bareiss_det(std::move(minor));
}

GoeritzData goeritz_data(const PlanarDiagram& d, const Coloring& c) {
  GoeritzData g;
  std::vector<int> white_index(d.face_count(), -1);
  for (int f = 0; f < d.face_count(); ++f)
    if (c.face_color[f] == FaceColor::white) {
      white_index[f] = static_cast<int>(g.white_faces.size());
      g.white_faces.push_back(f);
    }
  const int w = static_cast<int>(g.white_faces.size());
  std::vector<std::vector<BigInt>> full(w, std::vector<BigInt>(w, 0));
  for (const auto& cr : d.crossings()) {
    bool white02 = c.face_color[cr.quadrant_face[0]] == FaceColor::white;
    int eta = white02 ? -1 : +1;
    bool toward02 = cr.sign > 0;  // pointed-toward quadrant lies in {0,2}
    bool type_two = (white02 != toward02);
    if (type_two) g.mu += eta;
    int qa = white02 ? 0 : 1;
    int i = white_index[cr.quadrant_face[qa]];
    int j = white_index[cr.quadrant_face[qa + 2]];
    if (i == j) continue;  // nugatory crossing: no form contribution
    full[i][j] -= eta;
    full[j][i] -= eta;
    full[i][i] += eta;
    full[j][j] += eta;
  }
  g.matrix.assign(w == 0 ? 0 : w - 1, std::vector<BigInt>(w == 0 ? 0 : w - 1, 0));
  for (int i = 1; i < w; ++i)
    for (int j = 1; j < w; ++j) g.matrix[i - 1][j - 1] = full[i][j];
  return g;
}

int symmetric_signature(const std::vector<std::vector<BigInt>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);

  int sig = 0;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // Congruence moves that make the pivot nonzero: swap in a later
      // nonzero diagonal entry, else fold a row with a[j][k] != 0 into k.
      int swap_j = -1, fold_j = -1;
      for (int j = k + 1; j < n; ++j) {
        if (a[j][j] != 0 && swap_j == -1) swap_j = j;
        if (a[j][k] != 0 && fold_j == -1) fold_j = j;
      }
      if (swap_j != -1) {
        std::swap(a[k], a[swap_j]);
        for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][swap_j]);
      } else if (fold_j != -1) {
        for (int i = 0; i < n; ++i) a[k][i] += a[fold_j][i];
        for (int i = 0; i < n; ++i) a[i][k] += a[i][fold_j];
      } else {
        continue;  // row and column already zero
      }
    }
    if (a[k][k] == 0) continue;
    sig += (a[k][k] > 0) ? 1 : -1;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational factor = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
      for (int j = k; j < n; ++j) a[j][i] -= factor * a[j][k];
    }
  }
  return sig;
}

BigInt goeritz_determinant(const GoeritzData& g) {
  return abs(bareiss_det(g.matrix));
}

int signature_goeritz(const PlanarDiagram& d) {
  Coloring c = d.checkerboard();
  GoeritzData g = goeritz_data(d, c);
  return symmetric_signature(g.matrix) - g.mu;
}

}  // namespace kstate
