#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atheory/cubical.hpp"
#include "atheory/graph.hpp"

namespace atheory {

/// A word in a free group: letter +k stands for generator k-1, -k for its
/// inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
/// Free reduction followed by removal of letters cancelling cyclically.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
/// Smallest word, in lexicographic order of letters, among the rotations of
/// w and of its inverse. Assumes w is cyclically reduced.
Word cyclic_canonical(const Word& w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Every letter names a listed generator and every relator is freely
  /// reduced.
  bool valid() const;
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Words as space-separated generator names, inverses suffixed with "^-1";
/// the empty word is "1".
std::string format_word(const GroupPresentation& p, const Word& w);
/// "< x1, x2 | r1, r2 >".
std::string format_presentation(const GroupPresentation& p);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // each entry >= 2 and divides the next
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Diagonal of the Smith normal form of an integer matrix (rows x cols),
/// nonnegative, each entry dividing the next, trailing zeros omitted.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> matrix);

AbelianInvariants abelianization(const GroupPresentation& p);
std::string format_invariants(const AbelianInvariants& a);

/// Simple cycles of length 3 and 4. Each is listed once, starting at its
/// smallest vertex and continuing toward the smaller of that vertex's two
/// cycle neighbors; triangles come first, each group in lexicographic order.
std::vector<std::vector<Vertex>> small_cycles(const Graph& g);

/// A based closed walk: consecutive entries are equal or adjacent.
struct LoopWalk {
  std::vector<Vertex> vertices;
};

/// Throws unless `walk` starts and ends at `base` and every step is valid.
void validate_loop(const Graph& g, Vertex base, const LoopWalk& walk);

/// Presentation of A_1(Γ, v0): π_1 of Γ with 2-cells on all 3- and 4-cycles.
///
/// Spanning tree: breadth-first from the base, neighbors in vertex order.
/// Generators are the non-tree edges in edge order, oriented from the
/// smaller to the larger vertex index and named x1, x2, ...; each small
/// cycle contributes the word of non-tree edges it traverses. Disconnected
/// graphs are restricted to the component of the base.
class A1Presentation {
 public:
  explicit A1Presentation(const Graph& g, std::optional<Vertex> base = std::nullopt);

  const GroupPresentation& presentation() const noexcept { return presentation_; }
  /// Whether vertices outside the base component were discarded.
  bool restricted() const noexcept { return restricted_; }
  const Graph& graph() const noexcept { return graph_; }
  Vertex base() const noexcept { return base_; }
  /// Edge (in the input graph) that generator k stands for.
  const std::vector<Edge>& generator_edges() const noexcept { return generator_edges_; }
  /// Parent in the spanning tree, -1 for the base and for vertices outside
  /// the base component.
  const std::vector<Vertex>& tree_parent() const noexcept { return parent_; }

  /// Non-tree edges traversed by the walk, signed by direction, freely
  /// reduced. Throws if the walk uses a non-edge.
  Word word_of(const LoopWalk& walk) const;

 private:
  Graph graph_;
  Vertex base_;
  bool restricted_ = false;
  std::vector<Vertex> parent_;
  std::vector<Edge> generator_edges_;
  std::vector<int> edge_generator_;  // per edge index in graph_.edges(), or -1
  GroupPresentation presentation_;

  int generator_of(Vertex u, Vertex v) const;
};

GroupPresentation a1_presentation(const Graph& g, std::optional<Vertex> base = std::nullopt);
Word loop_to_word(const LoopWalk& walk, const Graph& g, std::optional<Vertex> base = std::nullopt);

/// Result of Tietze simplification together with the image of every
/// original generator as a word in the remaining generators.
struct SimplifiedPresentation {
  GroupPresentation presentation;
  std::vector<Word> images;
};

/// Applies free and cyclic reduction, removal of empty relators, elimination
/// of a generator that occurs exactly once in some relator, and removal of
/// relators that agree up to rotation and inversion, until none applies.
SimplifiedPresentation tietze_reduce(const GroupPresentation& p);
GroupPresentation tietze_simplify(const GroupPresentation& p);

/// Rewrites w through the generator images of a simplification.
Word substitute(const Word& w, const std::vector<Word>& images);

enum class Verdict { equal, distinct, unknown };
std::string to_string(Verdict v);

struct EquivalenceOptions {
  /// Grid search fallback when the presentation does not decide.
  bool grid_search = true;
  /// Extra room on each side of the loops in the search box.
  int box_margin = 1;
  int max_layers = 6;
};

/// Decides whether two based loops represent the same element of A_1.
/// `equal` and `distinct` are proofs; `unknown` means neither the simplified
/// presentation nor the bounded grid search settled it.
Verdict loops_equivalent(const LoopWalk& a, const LoopWalk& b, const Graph& g,
                         std::optional<Vertex> base = std::nullopt, const EquivalenceOptions& options = {});

}  // namespace atheory
