#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atheory/cubical.hpp"
#include "atheory/graph.hpp"

namespace atheory {

/// A graph map I_m -> G starting at the base: walk[y] is the image of y.
struct PathVertex {
  std::vector<Vertex> walk;

  int length() const { return static_cast<int>(walk.size()) - 1; }
  friend bool operator==(const PathVertex&, const PathVertex&) = default;
  friend auto operator<=>(const PathVertex&, const PathVertex&) = default;
};

/// Throws unless the walk is nonempty, starts at `base` and every step is
/// equal-or-adjacent.
void validate_path(const Graph& g, Vertex base, const PathVertex& phi);

/// Extend to length m by repeating the last vertex.
PathVertex pad(const PathVertex& phi, int m);
/// Shortest walk with the same padding class (trailing repeats removed).
PathVertex normalize(const PathVertex& phi);
Vertex p_map(const PathVertex& phi);

/// A graph map Φ on I_m' x I_1 with the padded walks as its two rows exists,
/// i.e. after padding the shorter walk the two are pointwise equal or
/// adjacent.
bool path_adjacent(const Graph& g, const PathVertex& a, const PathVertex& b);

/// A truncated path graph PG or loop graph ΩG together with the walk each of
/// its vertices stands for.
///
/// With `collapsed` set, each padding class is one vertex represented by its
/// shortest walk; otherwise every walk of length <= max_length is its own
/// vertex. Vertices are ordered by (length, lexicographic walk) and named by
/// the comma-separated host vertex names of the walk. The base vertex is the
/// length-0 walk.
struct LoopGraph {
  Graph graph;
  Graph host;
  Vertex host_base = 0;
  std::vector<PathVertex> paths;
  bool collapsed = true;
  int max_length = 0;

  std::map<std::vector<Vertex>, Vertex> index;  // walk -> vertex

  std::optional<Vertex> find(const PathVertex& phi) const;
};

LoopGraph build_path_graph(const Graph& g, std::optional<Vertex> base, int max_length, bool collapse = true);
LoopGraph build_loop_graph(const Graph& g, std::optional<Vertex> base, int max_length, bool collapse = true);

/// Induced subgraph of the (collapsed) loop graph on the given loops and the
/// base loop. Loops are normalized and deduplicated.
LoopGraph loop_subgraph(const Graph& g, std::optional<Vertex> base, const std::vector<PathVertex>& loops);

/// Name of a walk: host vertex names joined with ','.
std::string path_name(const Graph& g, const PathVertex& phi);
/// Inverse of path_name.
PathVertex parse_path(const Graph& g, const std::string& text);

/// For a loop φ of length m: if φ is adjacent to the constant loop of length
/// m, it is adjacent to the length-0 loop as well. Returns whether that
/// implication holds for φ.
bool remark_constant_loop_check(const Graph& g, std::optional<Vertex> base, const PathVertex& phi);

/// α(f)(x, y) = f(x)(y) for y <= m_f(x) and the base otherwise, for a grid
/// f of dimension n into a loop graph. The last coordinate of the result is
/// y. Throws if the result is not a valid grid, if f does not map into
/// `omega`, or if a box is given and f's support leaves it.
GridMap alpha(const GridMap& f, const LoopGraph& omega,
              const std::optional<SearchBox>& box = std::nullopt);

struct LoopGrid {
  LoopGraph omega;
  GridMap map;
};

/// Reads h (dimension n+1, last coordinate as the loop parameter) as a grid
/// of loops f(x)(y) = h(x, y), with constant loops replaced by the base loop.
/// The y-range is shifted so that row 0 and row m lie just outside the
/// support. Throws if h is degenerate or has dimension 0.
LoopGrid loops_of(const GridMap& h);

/// Builds f' from h, checks it is a valid grid into the loop graph and that
/// α(f') reproduces h (up to the translation putting the y-range at 0).
bool alpha_surjectivity_roundtrip(const GridMap& h);

/// Ωψ on a single path: pointwise composition.
PathVertex omega_functor(const VertexMap& psi, const PathVertex& phi);
/// ψ_#: post-composition of a grid with ψ.
GridMap push_forward(const VertexMap& psi, const GridMap& f);
/// (Ωψ)_#: post-composition of a grid of loops with Ωψ. The result maps into
/// the loop subgraph of the codomain on the image loops.
LoopGrid omega_push_forward(const VertexMap& psi, const GridMap& f, const LoopGraph& omega);

struct PointedComponents {
  std::vector<std::vector<Vertex>> components;
  std::size_t base_component = 0;
};

PointedComponents a0(const Graph& g, std::optional<Vertex> base = std::nullopt);

}  // namespace atheory
