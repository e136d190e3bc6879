#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atheory/graph.hpp"

namespace atheory {

using Point = std::vector<int>;

/// A map Z^n -> V(Γ) that equals `base_value` outside a finite region,
/// optionally pulled back along coordinate projections.
///
/// The map is stored as a finitely supported `core` on Z^(n-k) together with
/// k degenerate axes (0-based, sorted) along which it is constant: the value
/// at x is core(x with the degenerate coordinates removed). Maps without
/// degenerate axes are exactly the finitely supported grids; degenerate ones
/// are the images of `degeneracy`, which are infinite cylinders. A map whose
/// core is empty is always stored without degenerate axes.
class GridMap {
 public:
  GridMap() = default;
  /// Constant map of dimension `dim`.
  GridMap(Graph graph, int dim, Vertex base_value);
  /// Entries equal to `base_value` are dropped.
  GridMap(Graph graph, int dim, Vertex base_value, std::map<Point, Vertex> support);

  /// The 1-dimensional grid with walk[i] at position i; base elsewhere.
  static GridMap from_walk(Graph graph, std::span<const Vertex> walk, Vertex base_value);

  int dim() const noexcept { return dim_; }
  Vertex base_value() const noexcept { return base_; }
  const Graph& graph() const noexcept { return graph_; }
  const std::map<Point, Vertex>& core() const noexcept { return core_; }
  const std::vector<int>& degenerate_axes() const noexcept { return degenerate_; }

  bool finitely_supported() const noexcept { return degenerate_.empty(); }
  bool is_constant() const noexcept { return core_.empty(); }

  /// The support of a finitely supported map (throws otherwise).
  const std::map<Point, Vertex>& support() const;

  Vertex at(std::span<const int> point) const;

  struct Bounds {
    Point lo;
    Point hi;  // inclusive
  };
  /// Bounding box of the support of a finitely supported, nonconstant map.
  std::optional<Bounds> bounds() const;

  GridMap translated(std::span<const int> offset) const;

  /// Translation-invariant key: the support shifted so its bounding box
  /// starts at the origin, written as text.
  std::string canonical_key() const;

  friend bool operator==(const GridMap& a, const GridMap& b);

 private:
  friend GridMap degeneracy(const GridMap&, int);
  friend GridMap stable_face(const GridMap&, int, int);
  friend GridMap slice(const GridMap&, int, int);
  friend GridMap reflect(const GridMap&, int);

  Graph graph_;
  int dim_ = 0;
  Vertex base_ = 0;
  std::map<Point, Vertex> core_;
  std::vector<int> degenerate_;
};

/// Adjacent lattice points map to equal or adjacent vertices, every value is
/// a vertex of the graph, and the support is finite in the core.
bool validate_grid(const GridMap& f);

// Directions are 1-based (i = 1..n) and sides are ε = -1 or +1 throughout.

/// The stable values of f in direction (i, ε) as a map of dimension n-1.
GridMap stable_face(const GridMap& f, int i, int epsilon);
/// β'_i: (a_1..a_{n+1}) -> f(a_1..â_i..a_{n+1}); result has dimension n+1.
GridMap degeneracy(const GridMap& f, int i);
/// The slice {x_i = t}, as a map of dimension n-1.
GridMap slice(const GridMap& f, int i, int t);
/// x_i -> -x_i.
GridMap reflect(const GridMap& f, int i);

/// Juxtaposition: g is translated along `direction` so that its support
/// starts two steps past the end of f's support (one column of base between
/// them). A constant factor is dropped.
GridMap grid_multiply(const GridMap& f, const GridMap& g, int direction = 1);

/// Stacks maps of dimension n as the layers t = 0..k of a map of dimension
/// n+1. All layers must be finitely supported.
GridMap stack_layers(std::span<const GridMap> layers);

struct HomotopyCertificate {
  GridMap f;
  GridMap g;
  GridMap h;  // dimension n+1
  /// The layers of h from f to g when the certificate came from a search.
  std::vector<GridMap> layers;
};

/// Checks the relation f ~ g witnessed by h. The certificate is read as a
/// stabilizing map: there are layers k, l with slice(h, n+1, k) = f and
/// slice(h, n+1, l) = g, and h stands for the map repeating slice k beyond k
/// and slice l beyond l (its values outside that band are ignored). That
/// map must be a grid, the stable faces of f and g must agree in every
/// direction i <= n, and every layer between k and l must have the same
/// stable faces, so the side faces are β'_n α'_{i,ε}(f).
bool check_certificate(const GridMap& f, const GridMap& g, const GridMap& h);
bool check_certificate(const HomotopyCertificate& c);
/// Layered form: layers[0] = f, layers.back() = g, consecutive layers
/// pointwise equal or adjacent.
bool check_certificate(const GridMap& f, const GridMap& g, std::span<const GridMap> layers);

/// The layers of h from the first layer equal to f to the first layer equal
/// to g, in that order. Empty when h does not connect them.
std::vector<GridMap> certificate_layers(const GridMap& f, const GridMap& g, const GridMap& h);

/// Witnesses for reflexivity, symmetry and transitivity of ~.
GridMap reflexivity_witness(const GridMap& f);
GridMap symmetry_witness(const GridMap& h);
GridMap transitivity_witness(const GridMap& f, const GridMap& g, const GridMap& h1,
                             const GridMap& e, const GridMap& h2);

struct SearchBox {
  Point lo;
  std::vector<int> extents;
};

struct SearchOptions {
  /// Use the dense frontier representation when |V|^cells is at most this.
  std::uint64_t dense_limit = std::uint64_t{1} << 22;
  bool force_sparse = false;
};

/// Breadth-first search over the valid grids supported in a box, where two
/// grids are joined when they are pointwise equal or adjacent (a one-layer
/// certificate). Layers are explored in increasing order; among several
/// predecessors the one with the smallest encoding is used, so certificates
/// are deterministic and identical between the dense and sparse routes.
class BoundedSearch {
 public:
  BoundedSearch(GridMap source, SearchBox box, int max_layers, SearchOptions options = {});
  ~BoundedSearch();
  BoundedSearch(BoundedSearch&&) noexcept;
  BoundedSearch& operator=(BoundedSearch&&) noexcept;

  /// Certificate from the source to `target`, if reached within max_layers.
  std::optional<HomotopyCertificate> certificate_to(const GridMap& target);
  /// Number of layers needed to reach `target`, if reached.
  std::optional<int> distance_to(const GridMap& target);

  bool dense() const noexcept;
  std::uint64_t states_visited() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Searches for a certificate f ~ g among grids supported in a box with the
/// given extents, placed at the smallest corner of the supports of f and g.
/// Absence of a result is not a proof that f and g are inequivalent.
std::optional<HomotopyCertificate> bounded_homotopy_search(const GridMap& f, const GridMap& g,
                                                           const std::vector<int>& extents,
                                                           int max_layers,
                                                           SearchOptions options = {});

/// An element of M_n(Γ) = Hom(I_1^n, Γ). labels[mask] is the value at the
/// corner whose i-th coordinate is bit i-1 of mask.
struct CubeCell {
  int dim = 0;
  std::vector<Vertex> labels;
  friend bool operator==(const CubeCell&, const CubeCell&) = default;
  friend auto operator<=>(const CubeCell&, const CubeCell&) = default;
};

bool is_cell(const Graph& g, const CubeCell& c);
/// All of M_n(Γ), lexicographic in the label tuple.
std::vector<CubeCell> cells(const Graph& g, int n);
/// α_{i,ε}: restriction to the face x_i = (ε+1)/2.
CubeCell cell_face(const CubeCell& c, int i, int epsilon);
/// β_i: pull back along the projection forgetting coordinate i of I_1^{n+1}.
CubeCell cell_degeneracy(const CubeCell& c, int i);
/// True if c lies in the image of some β_i.
bool is_degenerate(const CubeCell& c);
/// Number of nondegenerate cells in each dimension 0..max_dim.
std::vector<std::uint64_t> f_vector(const Graph& g, int max_dim);

/// The unit cubes of the box [origin, origin + side]^n, each labelled by the
/// restriction of f, in lexicographic order of their lowest corner (first
/// coordinate fastest).
std::vector<CubeCell> realize_cells(const GridMap& f, const Point& origin, int side);
/// Box chosen as the support bounding box grown by one on each side and
/// squared up to its largest side.
std::vector<CubeCell> realize_cells(const GridMap& f);

}  // namespace atheory
