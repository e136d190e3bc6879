#include "atheory/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace atheory {

struct Graph::Impl {
  std::vector<std::string> names;
  std::map<std::string, Vertex, std::less<>> index;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adjacency;
  std::vector<std::uint8_t> matrix;  // order * order
  std::optional<Vertex> base;

  std::size_t n() const { return names.size(); }
};

Graph::Graph() {
  static const auto empty = std::make_shared<const Impl>();
  impl_ = empty;
}

Graph Graph::from_indices(std::vector<std::string> vertices,
                          const std::vector<std::pair<Vertex, Vertex>>& edges,
                          std::optional<Vertex> base) {
  auto impl = std::make_shared<Impl>();
  const auto n = static_cast<Vertex>(vertices.size());
  for (Vertex v = 0; v < n; ++v) {
    auto [it, inserted] = impl->index.emplace(vertices[static_cast<std::size_t>(v)], v);
    if (!inserted) throw Error("duplicate vertex '" + it->first + "'");
  }
  impl->names = std::move(vertices);
  impl->adjacency.resize(impl->n());
  impl->matrix.assign(impl->n() * impl->n(), 0);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("edge endpoint out of range");
    if (a == b) throw Error("loop at vertex '" + impl->names[static_cast<std::size_t>(a)] + "'");
    auto& cell = impl->matrix[static_cast<std::size_t>(a) * impl->n() + static_cast<std::size_t>(b)];
    if (cell) {
      throw Error("repeated edge {" + impl->names[static_cast<std::size_t>(a)] + ", " +
                  impl->names[static_cast<std::size_t>(b)] + "}");
    }
    cell = 1;
    impl->matrix[static_cast<std::size_t>(b) * impl->n() + static_cast<std::size_t>(a)] = 1;
    impl->edges.push_back({std::min(a, b), std::max(a, b)});
    impl->adjacency[static_cast<std::size_t>(a)].push_back(b);
    impl->adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  std::sort(impl->edges.begin(), impl->edges.end());
  for (auto& adj : impl->adjacency) std::sort(adj.begin(), adj.end());
  if (base) {
    if (*base < 0 || *base >= n) throw Error("base vertex out of range");
    impl->base = base;
  }
  return Graph(std::move(impl));
}

Graph Graph::from_names(std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges,
                        std::optional<std::string> base) {
  std::map<std::string, Vertex, std::less<>> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<Vertex>(i));
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error("unknown vertex '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<Vertex, Vertex>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) indexed.emplace_back(lookup(a), lookup(b));
  std::optional<Vertex> b;
  if (base) b = lookup(*base);
  return from_indices(std::move(vertices), indexed, b);
}

std::size_t Graph::order() const noexcept { return impl_->n(); }
std::size_t Graph::size() const noexcept { return impl_->edges.size(); }

const std::string& Graph::name(Vertex v) const { return impl_->names.at(static_cast<std::size_t>(v)); }
const std::vector<std::string>& Graph::names() const noexcept { return impl_->names; }

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = impl_->index.find(name);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error("unknown vertex '" + std::string(name) + "'");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto n = impl_->n();
  return impl_->matrix[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] != 0;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return impl_->adjacency.at(static_cast<std::size_t>(v));
}

const std::vector<Edge>& Graph::edges() const noexcept { return impl_->edges; }

std::optional<Vertex> Graph::base() const noexcept { return impl_->base; }

Vertex Graph::require_base() const {
  if (!impl_->base) throw MissingBaseError();
  return *impl_->base;
}

Graph Graph::with_base(std::optional<Vertex> base) const {
  if (base && (*base < 0 || static_cast<std::size_t>(*base) >= order()))
    throw Error("base vertex out of range");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->base = base;
  return Graph(std::move(impl));
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> position(order(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    position[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
    names.push_back(name(keep[i]));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : impl_->edges) {
    auto a = position[static_cast<std::size_t>(e.u)];
    auto b = position[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  std::optional<Vertex> b;
  if (impl_->base && position[static_cast<std::size_t>(*impl_->base)] >= 0)
    b = position[static_cast<std::size_t>(*impl_->base)];
  return from_indices(std::move(names), edges, b);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.same_as(b)) return true;
  return a.impl_->names == b.impl_->names && a.impl_->edges == b.impl_->edges &&
         a.impl_->base == b.impl_->base;
}

namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Graph complete_graph(int n, std::optional<Vertex> base) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  if (n == 0) base.reset();
  return Graph::from_indices(numbered(n), edges, base);
}

Graph cycle_graph(int n, std::optional<Vertex> base) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_indices(numbered(n), edges, base);
}

Graph path_graph(int n, std::optional<Vertex> base) {
  if (n < 0) throw Error("path length must be nonnegative");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i - 1, i);
  return Graph::from_indices(numbered(n + 1), edges, base);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto ng = static_cast<Vertex>(g.order());
  const auto nh = static_cast<Vertex>(h.order());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(ng) * static_cast<std::size_t>(nh));
  for (Vertex a = 0; a < ng; ++a)
    for (Vertex b = 0; b < nh; ++b) names.push_back("(" + g.name(a) + "," + h.name(b) + ")");
  auto id = [nh](Vertex a, Vertex b) { return a * nh + b; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < ng; ++a)
    for (const auto& e : h.edges()) edges.emplace_back(id(a, e.u), id(a, e.v));
  for (const auto& e : g.edges())
    for (Vertex b = 0; b < nh; ++b) edges.emplace_back(id(e.u, b), id(e.v, b));
  std::optional<Vertex> base;
  if (g.base() && h.base()) base = id(*g.base(), *h.base());
  return Graph::from_indices(std::move(names), edges, base);
}

std::vector<int> cube_coordinates(int n, int m, Vertex index) {
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (auto& c : coords) {
    c = index % (m + 1);
    index /= (m + 1);
  }
  return coords;
}

Vertex cube_index(int m, std::span<const int> coords) {
  Vertex index = 0;
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) index = index * (m + 1) + *it;
  return index;
}

Graph cube_graph(int n, int m) {
  if (n < 1) throw Error("cube dimension must be positive");
  if (m < 0) throw Error("cube height must be nonnegative");
  Vertex total = 1;
  for (int i = 0; i < n; ++i) total *= (m + 1);
  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex stride = 1;
  std::vector<Vertex> strides;
  for (int i = 0; i < n; ++i) {
    strides.push_back(stride);
    stride *= (m + 1);
  }
  for (Vertex v = 0; v < total; ++v) {
    auto coords = cube_coordinates(n, m, v);
    std::string name;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) name += ',';
      name += std::to_string(coords[i]);
    }
    names.push_back(std::move(name));
    for (int i = 0; i < n; ++i)
      if (coords[static_cast<std::size_t>(i)] < m) edges.emplace_back(v, v + strides[static_cast<std::size_t>(i)]);
  }
  return Graph::from_indices(std::move(names), edges, 0);
}

std::vector<Vertex> cube_boundary(int n, int m) {
  if (n < 1 || m < 1) throw Error("cube boundary needs n >= 1 and m >= 1");
  Vertex total = 1;
  for (int i = 0; i < n; ++i) total *= (m + 1);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < total; ++v) {
    auto coords = cube_coordinates(n, m, v);
    if (std::any_of(coords.begin(), coords.end(), [m](int c) { return c == 0 || c == m; }))
      out.push_back(v);
  }
  return out;
}

bool is_graph_hom(const VertexMap& f) {
  if (f.assignment.size() != f.domain.order()) return false;
  const auto target = static_cast<Vertex>(f.codomain.order());
  for (auto v : f.assignment)
    if (v < 0 || v >= target) return false;
  return std::all_of(f.domain.edges().begin(), f.domain.edges().end(), [&](const Edge& e) {
    return f.codomain.close(f(e.u), f(e.v));
  });
}

bool is_based(const VertexMap& f) {
  auto from = f.domain.base();
  auto to = f.codomain.base();
  return from && to && f(*from) == *to;
}

std::vector<VertexMap> enumerate_homs(const Graph& g, const Graph& h) {
  std::vector<VertexMap> out;
  const auto n = static_cast<Vertex>(g.order());
  const auto k = static_cast<Vertex>(h.order());
  if (n == 0) {
    out.push_back({g, h, {}});
    return out;
  }
  if (k == 0) return out;
  // Earlier neighbors of each vertex: the constraints checked when it is set.
  std::vector<std::vector<Vertex>> earlier(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) earlier[static_cast<std::size_t>(e.v)].push_back(e.u);

  std::vector<Vertex> assignment(static_cast<std::size_t>(n), 0);
  auto fits = [&](Vertex v) {
    const auto value = assignment[static_cast<std::size_t>(v)];
    for (auto u : earlier[static_cast<std::size_t>(v)])
      if (!h.close(assignment[static_cast<std::size_t>(u)], value)) return false;
    return true;
  };
  Vertex depth = 0;
  assignment[0] = -1;
  while (depth >= 0) {
    auto& value = assignment[static_cast<std::size_t>(depth)];
    ++value;
    if (value >= k) {
      --depth;
      continue;
    }
    if (!fits(depth)) continue;
    if (depth + 1 == n) {
      out.push_back({g, h, assignment});
    } else {
      ++depth;
      assignment[static_cast<std::size_t>(depth)] = -1;
    }
  }
  return out;
}

VertexMap extend_cube_hom(const VertexMap& f, int n, int m, int p) {
  if (p < m) throw Error("extension height must be at least the original height");
  Vertex expected = 1;
  for (int i = 0; i < n; ++i) expected *= (m + 1);
  if (f.domain.order() != static_cast<std::size_t>(expected))
    throw Error("map domain is not the cube I^n_m");
  auto target = cube_graph(n, p);
  VertexMap out{target, f.codomain, {}};
  out.assignment.resize(target.order());
  for (Vertex v = 0; v < static_cast<Vertex>(target.order()); ++v) {
    auto coords = cube_coordinates(n, p, v);
    for (auto& c : coords) c = std::min(c, m);
    out.assignment[static_cast<std::size_t>(v)] = f(cube_index(m, coords));
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const auto id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    label[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (auto w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const auto n = static_cast<Vertex>(a.order());
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) d.push_back(g.neighbors(v).size());
    return d;
  };
  const auto da = degrees(a);
  const auto db = degrees(b);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || da[static_cast<std::size_t>(v)] != db[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        ok = a.adjacent(u, v) == b.adjacent(image[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (self(self, v + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

std::string canonical_form(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  if (n > 9) throw Error("canonical_form supports at most 9 vertices");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        code += g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? '1' : '0';
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

}  // namespace atheory
