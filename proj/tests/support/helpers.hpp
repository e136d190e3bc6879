#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "atheory/cubical.hpp"
#include "atheory/graph.hpp"

namespace testing_support {

inline atheory::Graph random_graph(int n, double p, std::mt19937& rng, bool based = true) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return atheory::Graph::from_indices(names, edges, based && n > 0 ? std::optional<int>(0) : std::nullopt);
}

inline atheory::Graph random_connected_graph(int n, double p, std::mt19937& rng) {
  while (true) {
    auto g = random_graph(n, p, rng);
    if (atheory::connected_components(g).size() == 1) return g;
  }
}

inline atheory::Graph random_tree(int n, std::mt19937& rng) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return atheory::Graph::from_indices(names, edges, 0);
}

// A valid finitely supported grid with support in [0, side)^n, grown one
// random point at a time.
inline atheory::GridMap random_valid_grid(const atheory::Graph& g, int n, int side, std::mt19937& rng) {
  std::map<atheory::Point, atheory::Vertex> support;
  for (int step = 0; step < 3 * side * side; ++step) {
    atheory::Point p(static_cast<std::size_t>(n));
    for (auto& x : p) x = static_cast<int>(rng() % static_cast<unsigned>(side));
    auto trial = support;
    trial[p] = static_cast<atheory::Vertex>(rng() % g.order());
    if (atheory::validate_grid(atheory::GridMap(g, n, 0, trial))) support = std::move(trial);
  }
  return atheory::GridMap(g, n, 0, support);
}

// A grid reached from f by `steps` one-layer moves inside [0, side)^n.
inline atheory::GridMap random_nearby_grid(const atheory::GridMap& f, int side, int steps, std::mt19937& rng) {
  const auto& g = f.graph();
  auto support = f.support();
  for (int s = 0; s < steps; ++s) {
    auto next = support;
    for (int tries = 0; tries < 4 * side; ++tries) {
      atheory::Point p(static_cast<std::size_t>(f.dim()));
      for (auto& x : p) x = static_cast<int>(rng() % static_cast<unsigned>(side));
      const auto old = support.count(p) ? support.at(p) : f.base_value();
      const auto v = static_cast<atheory::Vertex>(rng() % g.order());
      if (g.close(old, v)) next[p] = v;
    }
    std::erase_if(next, [&](const auto& kv) { return kv.second == f.base_value(); });
    if (atheory::validate_grid(atheory::GridMap(g, f.dim(), f.base_value(), next))) support = std::move(next);
  }
  return atheory::GridMap(g, f.dim(), f.base_value(), support);
}

}  // namespace testing_support
