#include "atheory/loopspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace atheory {

namespace {

bool walk_order(const PathVertex& a, const PathVertex& b) {
  if (a.walk.size() != b.walk.size()) return a.walk.size() < b.walk.size();
  return a.walk < b.walk;
}

}  // namespace

void validate_path(const Graph& g, Vertex base, const PathVertex& phi) {
  if (phi.walk.empty()) throw Error("empty path");
  if (phi.walk.front() != base) throw Error("path must start at the base vertex");
  const auto n = static_cast<Vertex>(g.order());
  for (auto v : phi.walk)
    if (v < 0 || v >= n) throw Error("path vertex out of range");
  for (std::size_t i = 1; i < phi.walk.size(); ++i)
    if (!g.close(phi.walk[i - 1], phi.walk[i]))
      throw Error("path step " + g.name(phi.walk[i - 1]) + " -> " + g.name(phi.walk[i]) + " is not an edge");
}

PathVertex pad(const PathVertex& phi, int m) {
  if (phi.walk.empty()) throw Error("empty path");
  if (m < phi.length()) throw Error("cannot pad a path of length " + std::to_string(phi.length()) +
                                    " to length " + std::to_string(m));
  PathVertex out = phi;
  out.walk.resize(static_cast<std::size_t>(m) + 1, phi.walk.back());
  return out;
}

PathVertex normalize(const PathVertex& phi) {
  PathVertex out = phi;
  while (out.walk.size() > 1 && out.walk[out.walk.size() - 1] == out.walk[out.walk.size() - 2])
    out.walk.pop_back();
  return out;
}

Vertex p_map(const PathVertex& phi) {
  if (phi.walk.empty()) throw Error("empty path");
  return phi.walk.back();
}

bool path_adjacent(const Graph& g, const PathVertex& a, const PathVertex& b) {
  const int m = std::max(a.length(), b.length());
  const auto pa = pad(a, m);
  const auto pb = pad(b, m);
  for (std::size_t y = 0; y < pa.walk.size(); ++y)
    if (!g.close(pa.walk[y], pb.walk[y])) return false;
  return true;
}

std::optional<Vertex> LoopGraph::find(const PathVertex& phi) const {
  auto it = index.find(phi.walk);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::string path_name(const Graph& g, const PathVertex& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.walk.size(); ++i) {
    if (i) out += ',';
    out += g.name(phi.walk[i]);
  }
  return out;
}

PathVertex parse_path(const Graph& g, const std::string& text) {
  PathVertex out;
  std::istringstream in(text);
  for (std::string token; std::getline(in, token, ',');) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error("empty vertex in walk '" + text + "'");
    out.walk.push_back(g.index_of(token.substr(first, last - first + 1)));
  }
  if (out.walk.empty()) throw Error("empty walk");
  return out;
}

namespace {

// `paths` sorted by walk_order and distinct.
LoopGraph make_loop_graph(const Graph& host, Vertex base, std::vector<PathVertex> paths, bool collapsed,
                          int max_length) {
  LoopGraph out;
  out.host = host;
  out.host_base = base;
  out.collapsed = collapsed;
  out.max_length = max_length;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    names.push_back(path_name(host, paths[i]));
    out.index.emplace(paths[i].walk, static_cast<Vertex>(i));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      if (path_adjacent(host, paths[i], paths[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  const auto root = out.index.find(std::vector<Vertex>{base});
  if (root == out.index.end()) throw Error("base loop missing");
  out.graph = Graph::from_indices(std::move(names), edges, root->second);
  out.paths = std::move(paths);
  return out;
}

LoopGraph build(const Graph& g, std::optional<Vertex> base, int max_length, bool collapse, bool loops_only) {
  if (max_length < 0) throw Error("max length must be nonnegative");
  const Vertex b = base ? *base : g.require_base();
  if (b < 0 || static_cast<std::size_t>(b) >= g.order()) throw Error("base vertex out of range");
  std::vector<PathVertex> kept;
  std::vector<std::vector<Vertex>> level{{b}};
  for (int m = 0; m <= max_length; ++m) {
    for (const auto& w : level) {
      if (loops_only && w.back() != b) continue;
      if (collapse && w.size() > 1 && w[w.size() - 1] == w[w.size() - 2]) continue;
      kept.push_back({w});
    }
    if (m == max_length) break;
    std::vector<std::vector<Vertex>> next;
    for (const auto& w : level) {
      const auto last = w.back();
      std::vector<Vertex> options(g.neighbors(last).begin(), g.neighbors(last).end());
      options.push_back(last);
      std::sort(options.begin(), options.end());
      for (auto v : options) {
        next.push_back(w);
        next.back().push_back(v);
      }
    }
    level = std::move(next);
  }
  return make_loop_graph(g, b, std::move(kept), collapse, max_length);
}

}  // namespace

LoopGraph build_path_graph(const Graph& g, std::optional<Vertex> base, int max_length, bool collapse) {
  return build(g, base, max_length, collapse, false);
}

LoopGraph build_loop_graph(const Graph& g, std::optional<Vertex> base, int max_length, bool collapse) {
  return build(g, base, max_length, collapse, true);
}

LoopGraph loop_subgraph(const Graph& g, std::optional<Vertex> base, const std::vector<PathVertex>& loops) {
  const Vertex b = base ? *base : g.require_base();
  std::vector<PathVertex> paths{{{b}}};
  int longest = 0;
  for (const auto& phi : loops) {
    validate_path(g, b, phi);
    if (p_map(phi) != b) throw Error("walk " + path_name(g, phi) + " does not end at the base");
    paths.push_back(normalize(phi));
    longest = std::max(longest, phi.length());
  }
  std::sort(paths.begin(), paths.end(), walk_order);
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return make_loop_graph(g, b, std::move(paths), true, longest);
}

bool remark_constant_loop_check(const Graph& g, std::optional<Vertex> base, const PathVertex& phi) {
  const Vertex b = base ? *base : g.require_base();
  validate_path(g, b, phi);
  if (p_map(phi) != b) throw Error("not a loop");
  const PathVertex constant_m{std::vector<Vertex>(phi.walk.size(), b)};
  const PathVertex constant_0{{b}};
  return !path_adjacent(g, phi, constant_m) || path_adjacent(g, phi, constant_0);
}

GridMap alpha(const GridMap& f, const LoopGraph& omega, const std::optional<SearchBox>& box) {
  if (!(f.graph() == omega.graph)) throw Error("grid does not map into the loop graph");
  const auto root = omega.find(PathVertex{{omega.host_base}});
  if (!root || f.base_value() != *root) throw Error("grid base value must be the constant loop");
  const auto& support = f.support();
  if (box) {
    if (box->lo.size() != static_cast<std::size_t>(f.dim()) || box->extents.size() != box->lo.size())
      throw Error("box dimension mismatch");
    for (const auto& [x, v] : support)
      for (std::size_t a = 0; a < x.size(); ++a)
        if (x[a] < box->lo[a] || x[a] >= box->lo[a] + box->extents[a])
          throw Error("grid is not supported within the declared box");
  }
  std::map<Point, Vertex> out;
  for (const auto& [x, v] : support) {
    const auto& walk = omega.paths.at(static_cast<std::size_t>(v)).walk;
    Point p = x;
    p.push_back(0);
    for (std::size_t y = 0; y < walk.size(); ++y) {
      p.back() = static_cast<int>(y);
      if (walk[y] != omega.host_base) out.emplace(p, walk[y]);
    }
  }
  GridMap result(omega.host, f.dim() + 1, omega.host_base, std::move(out));
  if (!validate_grid(result)) throw Error("alpha produced an invalid grid; input is not a grid map");
  return result;
}

namespace {

struct LoopRead {
  std::vector<std::pair<Point, PathVertex>> loops;  // nonconstant, normalized
  int y0 = 0;                                        // row mapped to y = 0
};

LoopRead read_loops(const GridMap& h) {
  if (h.dim() < 1) throw Error("grid must have dimension at least 1");
  const auto& support = h.support();
  LoopRead out;
  const auto b = h.bounds();
  if (!b) return out;
  const auto n = static_cast<std::size_t>(h.dim()) - 1;
  out.y0 = b->lo[n] - 1;
  const int m = b->hi[n] + 1 - out.y0;
  std::set<Point> columns;
  for (const auto& [p, v] : support) columns.insert(Point(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)));
  for (const auto& x : columns) {
    PathVertex phi;
    Point p = x;
    p.push_back(0);
    for (int y = 0; y <= m; ++y) {
      p.back() = out.y0 + y;
      phi.walk.push_back(h.at(p));
    }
    phi = normalize(phi);
    if (phi.walk.size() > 1) out.loops.emplace_back(x, std::move(phi));
  }
  return out;
}

}  // namespace

LoopGrid loops_of(const GridMap& h) {
  const auto read = read_loops(h);
  std::vector<PathVertex> loops;
  for (const auto& [x, phi] : read.loops) loops.push_back(phi);
  auto omega = loop_subgraph(h.graph(), h.base_value(), loops);
  std::map<Point, Vertex> support;
  for (const auto& [x, phi] : read.loops) support.emplace(x, *omega.find(phi));
  GridMap map(omega.graph, h.dim() - 1, *omega.find(PathVertex{{h.base_value()}}), std::move(support));
  return {std::move(omega), std::move(map)};
}

bool alpha_surjectivity_roundtrip(const GridMap& h) {
  if (!validate_grid(h)) return false;
  const auto read = read_loops(h);
  for (const auto& [x, phi] : read.loops)
    if (!remark_constant_loop_check(h.graph(), h.base_value(), phi)) return false;
  const auto f = loops_of(h);
  if (!validate_grid(f.map)) return false;
  Point shift(static_cast<std::size_t>(h.dim()), 0);
  shift.back() = -read.y0;
  return alpha(f.map, f.omega) == h.translated(shift);
}

PathVertex omega_functor(const VertexMap& psi, const PathVertex& phi) {
  if (!is_graph_hom(psi)) throw Error("map is not a graph homomorphism");
  if (!is_based(psi)) throw Error("map is not based");
  validate_path(psi.domain, *psi.domain.base(), phi);
  PathVertex out;
  for (auto v : phi.walk) out.walk.push_back(psi(v));
  return out;
}

GridMap push_forward(const VertexMap& psi, const GridMap& f) {
  if (!(psi.domain == f.graph())) throw Error("grid does not live in the domain of the map");
  std::map<Point, Vertex> support;
  for (const auto& [p, v] : f.support()) support.emplace(p, psi(v));
  return GridMap(psi.codomain, f.dim(), psi(f.base_value()), std::move(support));
}

LoopGrid omega_push_forward(const VertexMap& psi, const GridMap& f, const LoopGraph& omega) {
  if (!(psi.domain == omega.host)) throw Error("loop graph is not over the domain of the map");
  if (!(f.graph() == omega.graph)) throw Error("grid does not map into the loop graph");
  std::vector<std::pair<Point, PathVertex>> images;
  for (const auto& [x, v] : f.support())
    images.emplace_back(x, normalize(omega_functor(psi, omega.paths.at(static_cast<std::size_t>(v)))));
  std::vector<PathVertex> loops;
  for (const auto& [x, phi] : images) loops.push_back(phi);
  const Vertex base = *psi.codomain.base();
  auto target = loop_subgraph(psi.codomain, base, loops);
  std::map<Point, Vertex> support;
  for (const auto& [x, phi] : images) support.emplace(x, *target.find(phi));
  GridMap map(target.graph, f.dim(), *target.find(PathVertex{{base}}), std::move(support));
  return {std::move(target), std::move(map)};
}

PointedComponents a0(const Graph& g, std::optional<Vertex> base) {
  const Vertex b = base ? *base : g.require_base();
  PointedComponents out{connected_components(g), 0};
  for (std::size_t i = 0; i < out.components.size(); ++i)
    if (std::binary_search(out.components[i].begin(), out.components[i].end(), b)) out.base_component = i;
  return out;
}

}  // namespace atheory
