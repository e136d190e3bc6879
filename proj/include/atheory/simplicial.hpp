#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atheory/graph.hpp"

namespace atheory {

// A simplex is a sorted list of vertex indices into the complex's universe.
using Simplex = std::vector<int>;

/// Simplicial complex given by its facets (maximal simplices).
///
/// Vertex tokens are indexed in order of first appearance. Faces of other
/// facets and repeated facets are dropped at load time and reported through
/// `dropped()`.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(const std::vector<std::vector<std::string>>& facets);

  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::vector<std::vector<std::string>>& dropped() const noexcept { return dropped_; }
  bool empty() const noexcept { return facets_.empty(); }

  std::optional<int> find_vertex(std::string_view token) const;
  /// Sorted simplex from tokens; throws if a token is not a vertex.
  Simplex simplex_of(const std::vector<std::string>& tokens) const;
  /// Tokens joined with ',' in vertex order.
  std::string label(const Simplex& s) const;

 private:
  std::vector<std::string> names_;
  std::vector<Simplex> facets_;
  std::vector<std::vector<std::string>> dropped_;
};

/// One facet per line, whitespace-separated tokens, '#' starts a comment line.
SimplicialComplex parse_facets(std::string_view text);

int dimension(const SimplicialComplex& complex);

/// All nonempty faces, ordered by (dimension, lexicographic).
std::vector<Simplex> face_closure(const SimplicialComplex& complex);

enum class GammaMode { maximal, all };

/// The graph Γ_q(Δ): simplices of dimension >= q, adjacent when they share at
/// least q+1 vertices. In maximal mode only facets are vertices. If `sigma0`
/// is given the base vertex is the first simplex (in vertex order) containing
/// it.
Graph gamma_q(const SimplicialComplex& complex, int q, GammaMode mode = GammaMode::maximal,
              const std::optional<std::vector<std::string>>& sigma0 = std::nullopt);

}  // namespace atheory
