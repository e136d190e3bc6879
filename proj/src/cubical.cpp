#include "atheory/cubical.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace atheory {

namespace {

void check_direction(int n, int i) {
  if (i < 1 || i > n)
    throw Error("direction " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

void check_side(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw Error("side must be -1 or +1");
}

Point without(std::span<const int> p, std::size_t axis) {
  Point out;
  out.reserve(p.size() - 1);
  for (std::size_t a = 0; a < p.size(); ++a)
    if (a != axis) out.push_back(p[a]);
  return out;
}

}  // namespace

GridMap::GridMap(Graph graph, int dim, Vertex base_value)
    : graph_(std::move(graph)), dim_(dim), base_(base_value) {
  if (dim < 0) throw Error("grid dimension must be nonnegative");
}

GridMap::GridMap(Graph graph, int dim, Vertex base_value, std::map<Point, Vertex> support)
    : GridMap(std::move(graph), dim, base_value) {
  for (auto& [p, v] : support) {
    if (p.size() != static_cast<std::size_t>(dim))
      throw Error("grid point has " + std::to_string(p.size()) + " coordinates, expected " +
                  std::to_string(dim));
    if (v != base_) core_.emplace(p, v);
  }
}

GridMap GridMap::from_walk(Graph graph, std::span<const Vertex> walk, Vertex base_value) {
  std::map<Point, Vertex> support;
  for (std::size_t i = 0; i < walk.size(); ++i) support[{static_cast<int>(i)}] = walk[i];
  return GridMap(std::move(graph), 1, base_value, std::move(support));
}

const std::map<Point, Vertex>& GridMap::support() const {
  if (!finitely_supported()) throw Error("map is degenerate along an axis and has infinite support");
  return core_;
}

Vertex GridMap::at(std::span<const int> point) const {
  if (point.size() != static_cast<std::size_t>(dim_)) throw Error("point dimension mismatch");
  Point key;
  key.reserve(point.size());
  std::size_t next = 0;
  for (std::size_t a = 0; a < point.size(); ++a) {
    if (next < degenerate_.size() && degenerate_[next] == static_cast<int>(a)) {
      ++next;
      continue;
    }
    key.push_back(point[a]);
  }
  auto it = core_.find(key);
  return it == core_.end() ? base_ : it->second;
}

std::optional<GridMap::Bounds> GridMap::bounds() const {
  if (core_.empty()) return std::nullopt;
  const auto& s = support();
  Bounds b{s.begin()->first, s.begin()->first};
  for (const auto& [p, v] : s) {
    for (std::size_t a = 0; a < p.size(); ++a) {
      b.lo[a] = std::min(b.lo[a], p[a]);
      b.hi[a] = std::max(b.hi[a], p[a]);
    }
  }
  return b;
}

GridMap GridMap::translated(std::span<const int> offset) const {
  if (offset.size() != static_cast<std::size_t>(dim_)) throw Error("offset dimension mismatch");
  GridMap out = *this;
  out.core_.clear();
  // Offsets along degenerate axes have no effect.
  Point core_offset;
  std::size_t next = 0;
  for (std::size_t a = 0; a < offset.size(); ++a) {
    if (next < degenerate_.size() && degenerate_[next] == static_cast<int>(a)) {
      ++next;
      continue;
    }
    core_offset.push_back(offset[a]);
  }
  for (const auto& [p, v] : core_) {
    Point q = p;
    for (std::size_t a = 0; a < q.size(); ++a) q[a] += core_offset[a];
    out.core_.emplace(std::move(q), v);
  }
  return out;
}

std::string GridMap::canonical_key() const {
  std::ostringstream out;
  out << dim_ << '|' << base_ << '|';
  for (auto a : degenerate_) out << a << ' ';
  out << '|';
  if (core_.empty()) return out.str();
  Point lo = core_.begin()->first;
  for (const auto& [p, v] : core_)
    for (std::size_t a = 0; a < p.size(); ++a) lo[a] = std::min(lo[a], p[a]);
  for (const auto& [p, v] : core_) {
    for (std::size_t a = 0; a < p.size(); ++a) out << (a ? "," : "") << p[a] - lo[a];
    out << ':' << v << ';';
  }
  return out.str();
}

bool operator==(const GridMap& a, const GridMap& b) {
  return a.dim_ == b.dim_ && a.base_ == b.base_ && a.degenerate_ == b.degenerate_ &&
         a.core_ == b.core_ && a.graph_ == b.graph_;
}

bool validate_grid(const GridMap& f) {
  const auto& g = f.graph();
  const auto order = static_cast<Vertex>(g.order());
  if (f.base_value() < 0 || f.base_value() >= order) return false;
  for (const auto& [p, v] : f.core()) {
    if (v < 0 || v >= order) return false;
    Point q = p;
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (int step : {-1, 1}) {
        q[a] += step;
        auto it = f.core().find(q);
        const Vertex w = it == f.core().end() ? f.base_value() : it->second;
        q[a] -= step;
        if (!g.close(v, w)) return false;
      }
    }
  }
  return true;
}

GridMap stable_face(const GridMap& f, int i, int epsilon) {
  check_direction(f.dim(), i);
  check_side(epsilon);
  const int axis = i - 1;
  auto it = std::find(f.degenerate_.begin(), f.degenerate_.end(), axis);
  if (it == f.degenerate_.end()) {
    // The core has finite support, so far out along a core axis the map is
    // the base value.
    return GridMap(f.graph(), f.dim() - 1, f.base_value());
  }
  GridMap out = f;
  out.dim_ = f.dim() - 1;
  out.degenerate_.clear();
  for (auto a : f.degenerate_) {
    if (a < axis) out.degenerate_.push_back(a);
    if (a > axis) out.degenerate_.push_back(a - 1);
  }
  return out;
}

GridMap slice(const GridMap& f, int i, int t) {
  check_direction(f.dim(), i);
  const int axis = i - 1;
  if (std::find(f.degenerate_.begin(), f.degenerate_.end(), axis) != f.degenerate_.end())
    return stable_face(f, i, 1);
  const auto before = static_cast<std::size_t>(
      std::count_if(f.degenerate_.begin(), f.degenerate_.end(), [axis](int a) { return a < axis; }));
  const std::size_t core_axis = static_cast<std::size_t>(axis) - before;
  GridMap out(f.graph(), f.dim() - 1, f.base_value());
  for (auto a : f.degenerate_) out.degenerate_.push_back(a < axis ? a : a - 1);
  for (const auto& [p, v] : f.core_)
    if (p[core_axis] == t) out.core_.emplace(without(p, core_axis), v);
  if (out.core_.empty()) out.degenerate_.clear();
  return out;
}

GridMap degeneracy(const GridMap& f, int i) {
  check_direction(f.dim() + 1, i);
  const int axis = i - 1;
  GridMap out = f;
  out.dim_ = f.dim() + 1;
  if (f.core_.empty()) return out;
  out.degenerate_.clear();
  for (auto a : f.degenerate_) out.degenerate_.push_back(a < axis ? a : a + 1);
  out.degenerate_.push_back(axis);
  std::sort(out.degenerate_.begin(), out.degenerate_.end());
  return out;
}

GridMap reflect(const GridMap& f, int i) {
  check_direction(f.dim(), i);
  const int axis = i - 1;
  if (std::find(f.degenerate_.begin(), f.degenerate_.end(), axis) != f.degenerate_.end()) return f;
  const auto before = static_cast<std::size_t>(
      std::count_if(f.degenerate_.begin(), f.degenerate_.end(), [axis](int a) { return a < axis; }));
  const std::size_t core_axis = static_cast<std::size_t>(axis) - before;
  GridMap out = f;
  out.core_.clear();
  for (const auto& [p, v] : f.core_) {
    Point q = p;
    q[core_axis] = -q[core_axis];
    out.core_.emplace(std::move(q), v);
  }
  return out;
}

namespace {

void require_compatible(const GridMap& f, const GridMap& g) {
  if (f.dim() != g.dim()) throw Error("grid dimension mismatch");
  if (!(f.graph() == g.graph())) throw Error("grids live in different graphs");
  if (f.base_value() != g.base_value()) throw Error("grids have different base values");
}

}  // namespace

GridMap grid_multiply(const GridMap& f, const GridMap& g, int direction) {
  require_compatible(f, g);
  if (f.dim() == 0) throw Error("multiplication is undefined in dimension 0");
  check_direction(f.dim(), direction);
  const auto fb = f.bounds();
  const auto gb = g.bounds();
  if (!gb) return f;
  if (!fb) return g;
  const auto axis = static_cast<std::size_t>(direction - 1);
  Point offset(static_cast<std::size_t>(f.dim()), 0);
  offset[axis] = fb->hi[axis] + 2 - gb->lo[axis];
  auto support = f.support();
  const auto moved = g.translated(offset);
  for (const auto& [p, v] : moved.support()) support.emplace(p, v);
  return GridMap(f.graph(), f.dim(), f.base_value(), std::move(support));
}

GridMap stack_layers(std::span<const GridMap> layers) {
  if (layers.empty()) throw Error("cannot stack zero layers");
  const auto& first = layers.front();
  std::map<Point, Vertex> support;
  for (std::size_t t = 0; t < layers.size(); ++t) {
    require_compatible(first, layers[t]);
    for (const auto& [p, v] : layers[t].support()) {
      Point q = p;
      q.push_back(static_cast<int>(t));
      support.emplace(std::move(q), v);
    }
  }
  return GridMap(first.graph(), first.dim() + 1, first.base_value(), std::move(support));
}

namespace {

// Candidate layers for slices of h along its last axis: every distinct slice
// occurs at one of these.
std::vector<int> layer_candidates(const GridMap& h) {
  const int axis = h.dim() - 1;
  const auto& deg = h.degenerate_axes();
  if (std::find(deg.begin(), deg.end(), axis) != deg.end() || h.core().empty()) return {0};
  const std::size_t core_axis = static_cast<std::size_t>(axis) - deg.size();
  int lo = h.core().begin()->first[core_axis];
  int hi = lo;
  for (const auto& [p, v] : h.core()) {
    lo = std::min(lo, p[core_axis]);
    hi = std::max(hi, p[core_axis]);
  }
  std::vector<int> out;
  for (int t = lo - 1; t <= hi + 1; ++t) out.push_back(t);
  return out;
}

// Two maps of the same dimension whose values agree up to adjacency at every
// point. Slices of one map share their degenerate axes unless constant.
bool pointwise_close(const GridMap& a, const GridMap& b) {
  const auto& g = a.graph();
  if (a.is_constant() && b.is_constant()) return g.close(a.base_value(), b.base_value());
  if (!a.is_constant() && !b.is_constant() && a.degenerate_axes() != b.degenerate_axes()) return false;
  const auto value = [](const GridMap& m, const Point& p) {
    auto it = m.core().find(p);
    return it == m.core().end() ? m.base_value() : it->second;
  };
  if (!g.close(a.base_value(), b.base_value())) return false;
  for (const auto& [p, v] : a.core())
    if (!g.close(v, value(b, p))) return false;
  for (const auto& [p, v] : b.core())
    if (!g.close(value(a, p), v)) return false;
  return true;
}

// h read as a stabilizing map: slice k below k, slice l above l. Checks that
// this map is a grid whose side faces are β'_n α'_{i,ε}(f), which holds
// exactly when every layer in between is a grid with the faces of f and
// consecutive layers are pointwise close.
bool band_valid(const GridMap& f, const GridMap& h, int k, int l) {
  const int n = f.dim();
  const int lo = std::min(k, l);
  const int hi = std::max(k, l);
  std::optional<GridMap> previous;
  for (int t = lo; t <= hi; ++t) {
    auto layer = slice(h, n + 1, t);
    if (!validate_grid(layer)) return false;
    for (int i = 1; i <= n; ++i)
      for (int e : {-1, 1})
        if (!(stable_face(layer, i, e) == stable_face(f, i, e))) return false;
    if (previous && !pointwise_close(*previous, layer)) return false;
    previous = std::move(layer);
  }
  return true;
}

struct LayerMatch {
  int k;
  int l;
};

// Layers of h equal to f and to g, nearest pairs first, such that the band
// between them is valid.
std::optional<LayerMatch> match_layers(const GridMap& f, const GridMap& g, const GridMap& h) {
  const int last = h.dim();
  std::vector<int> ks;
  std::vector<int> ls;
  for (int t : layer_candidates(h)) {
    auto s = slice(h, last, t);
    if (s == f) ks.push_back(t);
    if (s == g) ls.push_back(t);
  }
  std::vector<LayerMatch> pairs;
  for (int k : ks)
    for (int l : ls) pairs.push_back({k, l});
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const LayerMatch& a, const LayerMatch& b) { return std::abs(a.k - a.l) < std::abs(b.k - b.l); });
  for (const auto& m : pairs)
    if (band_valid(f, h, m.k, m.l)) return m;
  return std::nullopt;
}

}  // namespace

bool check_certificate(const GridMap& f, const GridMap& g, const GridMap& h) {
  const int n = f.dim();
  if (g.dim() != n || h.dim() != n + 1) throw Error("certificate dimension mismatch");
  if (!(f.graph() == g.graph()) || !(f.graph() == h.graph())) return false;
  if (f.base_value() != g.base_value() || f.base_value() != h.base_value()) return false;
  if (!validate_grid(f) || !validate_grid(g)) return false;

  for (int i = 1; i <= n; ++i)
    for (int e : {-1, 1})
      if (!(stable_face(f, i, e) == stable_face(g, i, e))) return false;

  return match_layers(f, g, h).has_value();
}

bool check_certificate(const HomotopyCertificate& c) { return check_certificate(c.f, c.g, c.h); }

bool check_certificate(const GridMap& f, const GridMap& g, std::span<const GridMap> layers) {
  if (layers.empty()) return false;
  if (!(layers.front() == f) || !(layers.back() == g)) return false;
  for (const auto& layer : layers)
    if (layer.dim() != f.dim() || !layer.finitely_supported()) return false;
  try {
    return check_certificate(f, g, stack_layers(layers));
  } catch (const Error&) {
    return false;
  }
}

std::vector<GridMap> certificate_layers(const GridMap& f, const GridMap& g, const GridMap& h) {
  if (h.dim() != f.dim() + 1) throw Error("certificate dimension mismatch");
  const auto match = match_layers(f, g, h);
  if (!match) return {};
  std::vector<GridMap> out;
  const int step = match->k <= match->l ? 1 : -1;
  for (int t = match->k;; t += step) {
    out.push_back(slice(h, h.dim(), t));
    if (t == match->l) break;
  }
  return out;
}

GridMap reflexivity_witness(const GridMap& f) { return degeneracy(f, f.dim() + 1); }

GridMap symmetry_witness(const GridMap& h) { return reflect(h, h.dim()); }

GridMap transitivity_witness(const GridMap& f, const GridMap& g, const GridMap& h1,
                             const GridMap& e, const GridMap& h2) {
  auto first = certificate_layers(f, g, h1);
  auto second = certificate_layers(g, e, h2);
  if (first.empty() || second.empty()) throw Error("witness does not connect the given maps");
  first.insert(first.end(), second.begin() + 1, second.end());
  return stack_layers(first);
}

// ---------------------------------------------------------------------------
// M_*(Γ)

bool is_cell(const Graph& g, const CubeCell& c) {
  if (c.dim < 0 || c.labels.size() != (std::size_t{1} << c.dim)) return false;
  const auto order = static_cast<Vertex>(g.order());
  for (auto v : c.labels)
    if (v < 0 || v >= order) return false;
  for (std::size_t mask = 0; mask < c.labels.size(); ++mask)
    for (int b = 0; b < c.dim; ++b)
      if (!(mask >> b & 1U) && !g.close(c.labels[mask], c.labels[mask | (std::size_t{1} << b)]))
        return false;
  return true;
}

std::vector<CubeCell> cells(const Graph& g, int n) {
  if (n < 0) throw Error("cell dimension must be nonnegative");
  std::vector<CubeCell> out;
  const auto corners = std::size_t{1} << n;
  const auto k = static_cast<Vertex>(g.order());
  if (k == 0) return out;
  std::vector<Vertex> labels(corners, -1);
  // Corners are filled in increasing mask order; each lower neighbor of a
  // corner (mask with one bit cleared) is already set.
  std::ptrdiff_t depth = 0;
  while (depth >= 0) {
    auto& value = labels[static_cast<std::size_t>(depth)];
    ++value;
    if (value >= k) {
      value = -1;
      --depth;
      continue;
    }
    const auto mask = static_cast<std::size_t>(depth);
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      if (mask >> b & 1U) ok = g.close(labels[mask ^ (std::size_t{1} << b)], value);
    if (!ok) continue;
    if (mask + 1 == corners) {
      out.push_back({n, labels});
    } else {
      ++depth;
    }
  }
  return out;
}

CubeCell cell_face(const CubeCell& c, int i, int epsilon) {
  check_direction(c.dim, i);
  check_side(epsilon);
  const auto bit = static_cast<unsigned>(i - 1);
  const std::size_t fixed = epsilon > 0 ? 1 : 0;
  CubeCell out{c.dim - 1, std::vector<Vertex>(std::size_t{1} << (c.dim - 1))};
  for (std::size_t m = 0; m < out.labels.size(); ++m) {
    const std::size_t low = m & ((std::size_t{1} << bit) - 1);
    const std::size_t high = (m >> bit) << (bit + 1);
    out.labels[m] = c.labels[high | (fixed << bit) | low];
  }
  return out;
}

CubeCell cell_degeneracy(const CubeCell& c, int i) {
  check_direction(c.dim + 1, i);
  const auto bit = static_cast<unsigned>(i - 1);
  CubeCell out{c.dim + 1, std::vector<Vertex>(std::size_t{1} << (c.dim + 1))};
  for (std::size_t m = 0; m < out.labels.size(); ++m) {
    const std::size_t low = m & ((std::size_t{1} << bit) - 1);
    const std::size_t high = (m >> (bit + 1)) << bit;
    out.labels[m] = c.labels[high | low];
  }
  return out;
}

bool is_degenerate(const CubeCell& c) {
  for (int b = 0; b < c.dim; ++b) {
    bool constant_along = true;
    for (std::size_t m = 0; m < c.labels.size() && constant_along; ++m)
      if (!(m >> b & 1U)) constant_along = c.labels[m] == c.labels[m | (std::size_t{1} << b)];
    if (constant_along) return true;
  }
  return false;
}

std::vector<std::uint64_t> f_vector(const Graph& g, int max_dim) {
  if (max_dim < 0) throw Error("max_dim must be nonnegative");
  std::vector<std::uint64_t> out;
  for (int n = 0; n <= max_dim; ++n) {
    std::uint64_t count = 0;
    for (const auto& c : cells(g, n))
      if (!is_degenerate(c)) ++count;
    out.push_back(count);
  }
  return out;
}

std::vector<CubeCell> realize_cells(const GridMap& f, const Point& origin, int side) {
  const int n = f.dim();
  if (origin.size() != static_cast<std::size_t>(n)) throw Error("origin dimension mismatch");
  if (side < 1) throw Error("box side must be positive");
  std::vector<CubeCell> out;
  std::vector<int> offset(static_cast<std::size_t>(n), 0);
  Point corner(static_cast<std::size_t>(n));
  while (true) {
    CubeCell c{n, std::vector<Vertex>(std::size_t{1} << n)};
    for (std::size_t m = 0; m < c.labels.size(); ++m) {
      for (std::size_t a = 0; a < corner.size(); ++a)
        corner[a] = origin[a] + offset[a] + static_cast<int>(m >> a & 1U);
      c.labels[m] = f.at(corner);
    }
    out.push_back(std::move(c));
    std::size_t a = 0;
    for (; a < offset.size(); ++a) {
      if (++offset[a] < side) break;
      offset[a] = 0;
    }
    if (a == offset.size()) break;
  }
  return out;
}

std::vector<CubeCell> realize_cells(const GridMap& f) {
  const auto b = f.bounds();
  if (!b) return realize_cells(f, Point(static_cast<std::size_t>(f.dim()), 0), 1);
  int side = 1;
  Point origin = b->lo;
  for (std::size_t a = 0; a < origin.size(); ++a) {
    origin[a] -= 1;
    side = std::max(side, b->hi[a] - b->lo[a] + 2);
  }
  return realize_cells(f, origin, side);
}

}  // namespace atheory
