#pragma once

#include <string>
#include <string_view>

#include "atheory/cubical.hpp"
#include "atheory/fundamental.hpp"
#include "atheory/graph.hpp"
#include "atheory/loopspace.hpp"

namespace atheory {

std::string read_text_file(const std::string& path);

/// {"vertices": [...], "edges": [[a, b], ...], "base": a}. Syntax errors
/// carry line and column; structural errors name the offending entry.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
/// Inverse of parse_graph, two-space indented, newline terminated.
std::string format_graph(const Graph& g);

/// {"dim": n, "base": v, "support": {"i1,...,in": v, ...}} with values named
/// by vertices of `g`. An optional "degenerate": [i, ...] lists 1-based axes
/// along which the map is constant; the support keys then omit them.
GridMap parse_grid(std::string_view text, const Graph& g);
GridMap read_grid_file(const std::string& path, const Graph& g);
std::string format_grid(const GridMap& f);

/// A grid whose values are loops in `host`, each written as a comma
/// separated walk; the base is the host base vertex (the length-0 loop).
/// The loop graph is the loop subgraph on the loops that occur.
LoopGrid parse_loop_grid(std::string_view text, const Graph& host);

std::string point_key(const Point& p);
Point parse_point_key(std::string_view key, int dim);

/// Comma separated vertex names.
LoopWalk parse_loop(const Graph& g, std::string_view text);
std::string format_walk(const Graph& g, const std::vector<Vertex>& walk);

}  // namespace atheory
