#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "atheory/cubical.hpp"

namespace testing_support {

using atheory::CubeCell;
using atheory::GridMap;

// Nondegenerate counts as |cells(n)| minus the number of distinct images of
// all degeneracies from dimension n-1.
inline std::vector<std::uint64_t> brute_force_f_vector(const atheory::Graph& g, int max_dim) {
  std::vector<std::uint64_t> out;
  for (int n = 0; n <= max_dim; ++n) {
    const auto all = atheory::cells(g, n);
    std::set<CubeCell> degenerate;
    if (n > 0)
      for (const auto& c : atheory::cells(g, n - 1))
        for (int i = 1; i <= n; ++i) degenerate.insert(atheory::cell_degeneracy(c, i));
    out.push_back(all.size() - degenerate.size());
  }
  return out;
}

struct IdentityReport {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;
};

// The cubical identities on every cell of dimension <= max_n:
//   d_{i,e} d_{j,h} = d_{j-1,h} d_{i,e}               (i < j)
//   s_i s_j = s_{j+1} s_i                             (i <= j)
//   d_{i,e} s_j = s_{j-1} d_{i,e} (i < j), id (i = j), s_j d_{i-1,e} (i > j)
// plus: faces and degeneracies of cells are cells, s_j(c) is degenerate, and
// a face of a degenerate cell is degenerate or equal to the expected
// restriction.
inline IdentityReport check_cubical_identities(const atheory::Graph& g, int max_n) {
  using atheory::cell_degeneracy;
  using atheory::cell_face;
  IdentityReport r;
  auto fail = [&](const std::string& what, const CubeCell& c) {
    std::string labels;
    for (auto v : c.labels) labels += std::to_string(v) + " ";
    r.failures.push_back(what + " on cell [" + labels + "] dim " + std::to_string(c.dim));
  };
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& c : atheory::cells(g, n)) {
      for (int i = 1; i <= n; ++i)
        for (int e : {-1, 1}) {
          ++r.checked;
          if (!atheory::is_cell(g, cell_face(c, i, e))) fail("face is not a cell", c);
          for (int j = i + 1; j <= n; ++j)
            for (int h : {-1, 1}) {
              ++r.checked;
              if (cell_face(cell_face(c, j, h), i, e) != cell_face(cell_face(c, i, e), j - 1, h))
                fail("face-face identity", c);
            }
        }
      for (int j = 1; j <= n + 1; ++j) {
        const auto s = cell_degeneracy(c, j);
        ++r.checked;
        if (!atheory::is_cell(g, s) || !atheory::is_degenerate(s)) fail("degeneracy not a degenerate cell", c);
        for (int i = j; i <= n + 1; ++i) {
          ++r.checked;
          if (cell_degeneracy(cell_degeneracy(c, i), j) != cell_degeneracy(cell_degeneracy(c, j), i + 1))
            fail("degeneracy-degeneracy identity", c);
        }
        for (int i = 1; i <= n + 1; ++i)
          for (int e : {-1, 1}) {
            ++r.checked;
            const auto lhs = cell_face(s, i, e);
            if (i == j) {
              if (lhs != c) fail("face of degeneracy (same index)", c);
            } else if (i < j) {
              if (lhs != cell_degeneracy(cell_face(c, i, e), j - 1)) fail("face of degeneracy (i < j)", c);
            } else {
              if (lhs != cell_degeneracy(cell_face(c, i - 1, e), j)) fail("face of degeneracy (i > j)", c);
            }
            if (n >= 1 && i != j && !atheory::is_degenerate(lhs)) fail("face of degenerate cell", c);
          }
      }
    }
  }
  return r;
}

// The same identities for grid maps: stable faces undo degeneracies, slices
// of a degeneracy are the original map, degeneracies commute as above, and
// every stable face of a finitely supported map is constant.
inline IdentityReport check_grid_identities(const GridMap& f) {
  using atheory::degeneracy;
  using atheory::stable_face;
  IdentityReport r;
  const int n = f.dim();
  for (int i = 1; i <= n + 1; ++i) {
    const auto s = degeneracy(f, i);
    for (int e : {-1, 1}) {
      ++r.checked;
      if (!(stable_face(s, i, e) == f)) r.failures.push_back("stable face of degeneracy, i=" + std::to_string(i));
    }
    for (int t : {-3, 0, 2}) {
      ++r.checked;
      if (!(atheory::slice(s, i, t) == f)) r.failures.push_back("slice of degeneracy, i=" + std::to_string(i));
    }
    for (int j = i; j <= n + 1; ++j) {
      ++r.checked;
      if (!(degeneracy(degeneracy(f, j), i) == degeneracy(degeneracy(f, i), j + 1)))
        r.failures.push_back("degeneracy-degeneracy identity");
    }
  }
  if (f.finitely_supported())
    for (int i = 1; i <= n; ++i)
      for (int e : {-1, 1}) {
        ++r.checked;
        if (!stable_face(f, i, e).is_constant()) r.failures.push_back("stable face not constant");
      }
  return r;
}

// Plain BFS over every valid grid in the box, built by listing all value
// assignments and comparing pairs.
inline std::optional<int> naive_distance(const GridMap& f, const GridMap& g, const atheory::Point& lo,
                                         const std::vector<int>& extents, int max_layers) {
  const auto& graph = f.graph();
  std::vector<atheory::Point> points;
  const std::size_t dim = lo.size();
  std::size_t cells_count = 1;
  for (int e : extents) cells_count *= static_cast<std::size_t>(e);
  for (std::size_t c = 0; c < cells_count; ++c) {
    auto rest = c;
    atheory::Point q(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      q[a] = lo[a] + static_cast<int>(rest % static_cast<std::size_t>(extents[a]));
      rest /= static_cast<std::size_t>(extents[a]);
    }
    points.push_back(q);
  }
  const auto k = graph.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < points.size(); ++i) total *= k;
  std::vector<std::vector<atheory::Vertex>> states;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<atheory::Vertex> values(points.size());
    auto rest = code;
    std::map<atheory::Point, atheory::Vertex> support;
    for (std::size_t i = 0; i < points.size(); ++i) {
      values[i] = static_cast<atheory::Vertex>(rest % k);
      rest /= k;
      support.emplace(points[i], values[i]);
    }
    if (atheory::validate_grid(GridMap(graph, f.dim(), f.base_value(), support))) states.push_back(values);
  }
  auto index_of = [&](const GridMap& m) -> std::optional<std::size_t> {
    std::vector<atheory::Vertex> values;
    for (const auto& q : points) values.push_back(m.at(q));
    for (std::size_t s = 0; s < states.size(); ++s)
      if (states[s] == values) return s;
    return std::nullopt;
  };
  const auto from = index_of(f);
  const auto to = index_of(g);
  if (!from || !to) return std::nullopt;
  std::vector<int> dist(states.size(), -1);
  std::deque<std::size_t> queue{*from};
  dist[*from] = 0;
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    if (s == *to) return dist[s];
    if (dist[s] == max_layers) continue;
    for (std::size_t t = 0; t < states.size(); ++t) {
      if (dist[t] >= 0) continue;
      bool close = true;
      for (std::size_t i = 0; i < points.size() && close; ++i) close = graph.close(states[s][i], states[t][i]);
      if (close) {
        dist[t] = dist[s] + 1;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

}  // namespace testing_support
