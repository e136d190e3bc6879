#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atheory/error.hpp"

namespace atheory {

// Vertices are addressed by their position in the graph's vertex list.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with an optional base vertex.
///
/// Vertex identifiers are opaque strings; the order in which they were listed
/// fixes the index of each vertex and therefore every deterministic ordering
/// in the library. A Graph is immutable and cheap to copy (shared storage).
class Graph {
 public:
  Graph();

  /// Build from names and name pairs. Rejects loops, repeated (or reversed)
  /// edges, unknown endpoints and duplicate vertex names.
  static Graph from_names(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& edges,
                          std::optional<std::string> base = std::nullopt);

  /// Build from indices. Same rejection rules as from_names.
  static Graph from_indices(std::vector<std::string> vertices,
                            const std::vector<std::pair<Vertex, Vertex>>& edges,
                            std::optional<Vertex> base = std::nullopt);

  std::size_t order() const noexcept;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return order() == 0; }

  const std::string& name(Vertex v) const;
  const std::vector<std::string>& names() const noexcept;
  std::optional<Vertex> find(std::string_view name) const;
  Vertex index_of(std::string_view name) const;

  bool adjacent(Vertex u, Vertex v) const;
  // Equal or adjacent: the condition a graph map must satisfy on every edge.
  bool close(Vertex u, Vertex v) const { return u == v || adjacent(u, v); }

  std::span<const Vertex> neighbors(Vertex v) const;
  const std::vector<Edge>& edges() const noexcept;

  std::optional<Vertex> base() const noexcept;
  Vertex require_base() const;
  Graph with_base(std::optional<Vertex> base) const;

  /// Induced subgraph on `keep`, in the given order. Base is kept if present.
  Graph induced(std::span<const Vertex> keep) const;

  /// Same underlying storage (cheap identity test).
  bool same_as(const Graph& other) const noexcept { return impl_ == other.impl_; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Impl;
  explicit Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Complete graph on n vertices named "0".."n-1".
Graph complete_graph(int n, std::optional<Vertex> base = 0);
/// Cycle C_n named "0".."n-1" with edges i(i+1 mod n).
Graph cycle_graph(int n, std::optional<Vertex> base = 0);
/// Path I_n with vertices 0..n.
Graph path_graph(int n, std::optional<Vertex> base = 0);

/// Cartesian product. Vertex (i, j) has index i * |V(H)| + j and is named
/// "(a,b)". The base is (base(G), base(H)) when both are set.
Graph cartesian_product(const Graph& g, const Graph& h);

/// The cube I^n_m: vertices {0..m}^n with lattice adjacency, based at the
/// origin. The vertex with coordinates (x_1..x_n) has index
/// sum_i x_i (m+1)^(i-1), so the first coordinate varies fastest, and is
/// named "x_1,...,x_n".
Graph cube_graph(int n, int m);

/// Coordinates of cube vertex `index` in I^n_m.
std::vector<int> cube_coordinates(int n, int m, Vertex index);
/// Index of the cube vertex with the given coordinates in I^n_m.
Vertex cube_index(int m, std::span<const int> coords);

/// Vertices of I^n_m with some coordinate equal to 0 or m, ascending index.
std::vector<Vertex> cube_boundary(int n, int m);

/// A vertex assignment between two graphs; not necessarily a homomorphism.
struct VertexMap {
  Graph domain;
  Graph codomain;
  std::vector<Vertex> assignment;

  Vertex operator()(Vertex v) const { return assignment.at(static_cast<std::size_t>(v)); }
  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

bool is_graph_hom(const VertexMap& f);
bool is_based(const VertexMap& f);

/// Every graph homomorphism G -> H, lexicographic in (f(v_0), f(v_1), ...).
std::vector<VertexMap> enumerate_homs(const Graph& g, const Graph& h);

/// Extend a hom I^n_m -> Γ to I^n_p by clamping coordinates to m.
VertexMap extend_cube_hom(const VertexMap& f, int n, int m, int p);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Exact isomorphism test by backtracking; intended for small graphs.
bool isomorphic(const Graph& a, const Graph& b);

/// Lexicographically smallest upper-triangle adjacency string over all
/// vertex relabelings. Two graphs are isomorphic iff their forms match.
/// Only for graphs with at most 9 vertices.
std::string canonical_form(const Graph& g);

}  // namespace atheory
