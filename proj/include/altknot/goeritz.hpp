#pragma once

// Checkerboard shading, Goeritz matrix and the knot determinant.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

struct GoeritzData {
  std::vector<int> shading;                 // face -> 0 (white) / 1 (black)
  std::vector<int> white_faces;             // matrix index -> face
  std::vector<std::vector<long long>> matrix;
};

// Two-colors faces so that faces across every edge differ. `flip` exchanges
// the colors.
inline std::vector<int> checkerboard(const PlanarMap& m, const Faces& f, bool flip = false) {
  std::vector<int> color(f.count(), -1);
  std::vector<int> stack;
  for (int s = 0; s < f.count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = flip ? 1 : 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (Dart d : f.darts[a]) {
        const int b = f.face_of[m.partner[d]];
        if (color[b] < 0) {
          color[b] = 1 - color[a];
          stack.push_back(b);
        } else if (color[b] == color[a]) {
          throw TopologyError("faces are not two-colorable");
        }
      }
    }
  }
  return color;
}

inline GoeritzData goeritz(const PlanarMap& m, bool flip = false) {
  const Faces f = compute_faces(m);
  GoeritzData g;
  g.shading = checkerboard(m, f, flip);
  std::vector<int> index(f.count(), -1);
  for (int a = 0; a < f.count(); ++a)
    if (g.shading[a] == 0) {
      index[a] = static_cast<int>(g.white_faces.size());
      g.white_faces.push_back(a);
    }
  const std::size_t n = g.white_faces.size();
  g.matrix.assign(n, std::vector<long long>(n, 0));
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (!m.is_crossing(v)) continue;
    // face_of[(v,p)] is the corner (p-1, p). White corners are opposite.
    const bool corners_01 = g.shading[f.face_of[make_dart(v, 1)]] == 0;
    const int a = corners_01 ? f.face_of[make_dart(v, 1)] : f.face_of[make_dart(v, 0)];
    const int b = corners_01 ? f.face_of[make_dart(v, 3)] : f.face_of[make_dart(v, 2)];
    if (a == b) continue;
    const long long eta = corners_01 ? 1 : -1;
    const int i = index[a], j = index[b];
    g.matrix[i][j] -= eta;
    g.matrix[j][i] -= eta;
    g.matrix[i][i] += eta;
    g.matrix[j][j] += eta;
  }
  return g;
}

// Fraction-free (Bareiss) determinant over the integers.
inline long long bareiss_determinant(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long long sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<long long>(num / prev);
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<long long>> delete_row_col(const std::vector<std::vector<long long>>& a, std::size_t r) {
  std::vector<std::vector<long long>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == r) continue;
    std::vector<long long> row;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != r) row.push_back(a[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

// |det| of the Goeritz matrix with one row and column removed. Defined for
// any diagram; for links it may be zero.
inline long long goeritz_determinant_of(const PlanarMap& m, bool flip = false, std::size_t deleted = 0) {
  const GoeritzData g = goeritz(m, flip);
  if (g.matrix.empty()) return 1;
  return std::llabs(bareiss_determinant(delete_row_col(g.matrix, deleted % g.matrix.size())));
}

inline long long goeritz_determinant(const Diagram& d) {
  if (component_count(d.map) != 1) throw ComponentError("determinant requested for a link diagram");
  return goeritz_determinant_of(d.map);
}

}  // namespace altknot
