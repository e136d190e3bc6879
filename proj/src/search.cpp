#include <algorithm>
#include <limits>
#include <set>

#include "atheory/cubical.hpp"

namespace atheory {

namespace {

constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();

}  // namespace

struct BoundedSearch::Impl {
  GridMap source;
  SearchBox box;
  int max_layers;
  Graph graph;
  Vertex base;
  std::size_t values;  // |V|
  std::size_t cells;
  std::vector<Point> coords;                       // per cell, relative to box.lo
  std::vector<std::vector<std::size_t>> lower;     // per cell: cells one step below
  std::vector<bool> on_border;                     // per cell
  std::vector<std::vector<Vertex>> closed;         // closed neighborhoods, ascending
  bool use_dense = false;

  // Dense route.
  std::vector<std::uint64_t> weight;
  std::uint64_t states = 0;
  std::vector<std::uint8_t> dist;

  // Sparse route. Keys list cell values from the last cell to the first, so
  // lexicographic order on keys equals numeric order on dense indices.
  using Key = std::vector<Vertex>;
  std::map<Key, int> layer_of;
  std::vector<std::vector<Key>> layers;
  bool exhausted = false;

  Impl(GridMap src, SearchBox b, int layers_limit, SearchOptions options)
      : source(std::move(src)), box(std::move(b)), max_layers(layers_limit), graph(source.graph()),
        base(source.base_value()), values(graph.order()) {
    const auto n = static_cast<std::size_t>(source.dim());
    if (box.lo.size() != n || box.extents.size() != n) throw Error("search box dimension mismatch");
    if (max_layers < 0) throw Error("max_layers must be nonnegative");
    if (max_layers >= kUnreached) throw Error("max_layers too large");
    if (!source.finitely_supported()) throw Error("search source must be finitely supported");
    cells = 1;
    for (auto e : box.extents) {
      if (e < 1) throw Error("box extents must be positive");
      cells *= static_cast<std::size_t>(e);
    }
    for (std::size_t c = 0; c < cells; ++c) {
      Point p(n);
      std::size_t rest = c;
      for (std::size_t a = 0; a < n; ++a) {
        p[a] = static_cast<int>(rest % static_cast<std::size_t>(box.extents[a]));
        rest /= static_cast<std::size_t>(box.extents[a]);
      }
      coords.push_back(p);
    }
    std::size_t stride = 1;
    std::vector<std::size_t> strides;
    for (std::size_t a = 0; a < n; ++a) {
      strides.push_back(stride);
      stride *= static_cast<std::size_t>(box.extents[a]);
    }
    lower.resize(cells);
    on_border.resize(cells);
    for (std::size_t c = 0; c < cells; ++c) {
      bool border = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (coords[c][a] > 0) lower[c].push_back(c - strides[a]);
        if (coords[c][a] == 0 || coords[c][a] == box.extents[a] - 1) border = true;
      }
      on_border[c] = border;
    }
    for (Vertex v = 0; v < static_cast<Vertex>(values); ++v) {
      std::vector<Vertex> nb(graph.neighbors(v).begin(), graph.neighbors(v).end());
      nb.push_back(v);
      std::sort(nb.begin(), nb.end());
      closed.push_back(std::move(nb));
    }

    auto digits = encode(source);
    if (!digits) throw Error("search source is not supported in the box");
    if (!valid(*digits)) throw Error("search source is not a valid grid");

    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t c = 0; c < cells && !overflow; ++c) {
      if (total > options.dense_limit / std::max<std::uint64_t>(values, 1)) overflow = true;
      total *= values;
    }
    use_dense = !options.force_sparse && !overflow && total <= options.dense_limit && values <= 64;
    if (use_dense) {
      states = total;
      std::uint64_t w = 1;
      for (std::size_t c = 0; c < cells; ++c) {
        weight.push_back(w);
        w *= values;
      }
      run_dense(index_of(*digits));
    } else {
      auto key = to_key(*digits);
      layer_of.emplace(key, 0);
      layers.push_back({key});
    }
  }

  std::optional<std::vector<Vertex>> encode(const GridMap& f) const {
    if (f.dim() != source.dim() || !f.finitely_supported()) return std::nullopt;
    std::vector<Vertex> digits(cells, base);
    for (const auto& [p, v] : f.support()) {
      std::size_t c = 0;
      std::size_t stride = 1;
      for (std::size_t a = 0; a < p.size(); ++a) {
        const int rel = p[a] - box.lo[a];
        if (rel < 0 || rel >= box.extents[a]) return std::nullopt;
        c += static_cast<std::size_t>(rel) * stride;
        stride *= static_cast<std::size_t>(box.extents[a]);
      }
      digits[c] = v;
    }
    return digits;
  }

  GridMap decode(const std::vector<Vertex>& digits) const {
    std::map<Point, Vertex> support;
    for (std::size_t c = 0; c < cells; ++c) {
      if (digits[c] == base) continue;
      Point p = coords[c];
      for (std::size_t a = 0; a < p.size(); ++a) p[a] += box.lo[a];
      support.emplace(std::move(p), digits[c]);
    }
    return GridMap(graph, source.dim(), base, std::move(support));
  }

  bool valid(const std::vector<Vertex>& d) const {
    for (std::size_t c = 0; c < cells; ++c) {
      if (on_border[c] && !graph.close(d[c], base)) return false;
      for (auto l : lower[c])
        if (!graph.close(d[c], d[l])) return false;
    }
    return true;
  }

  bool pointwise_close(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
    for (std::size_t c = 0; c < cells; ++c)
      if (!graph.close(a[c], b[c])) return false;
    return true;
  }

  std::uint64_t index_of(const std::vector<Vertex>& d) const {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < cells; ++c) s += static_cast<std::uint64_t>(d[c]) * weight[c];
    return s;
  }

  std::vector<Vertex> digits_of(std::uint64_t s) const {
    std::vector<Vertex> d(cells);
    for (std::size_t c = 0; c < cells; ++c) {
      d[c] = static_cast<Vertex>(s % values);
      s /= values;
    }
    return d;
  }

  static Key to_key(const std::vector<Vertex>& d) { return Key(d.rbegin(), d.rend()); }
  static std::vector<Vertex> from_key(const Key& k) { return std::vector<Vertex>(k.rbegin(), k.rend()); }

  void run_dense(std::uint64_t start) {
    std::vector<std::uint8_t> valid_state(states);
    {
      std::vector<Vertex> d(cells, 0);
      for (std::uint64_t s = 0; s < states; ++s) {
        valid_state[s] = valid(d) ? 1 : 0;
        for (std::size_t c = 0; c < cells; ++c) {
          if (++d[c] < static_cast<Vertex>(values)) break;
          d[c] = 0;
        }
      }
    }
    std::vector<std::uint64_t> closed_mask(values);
    for (std::size_t v = 0; v < values; ++v)
      for (auto w : closed[v]) closed_mask[v] |= std::uint64_t{1} << w;

    dist.assign(states, kUnreached);
    dist[start] = 0;
    std::vector<std::uint8_t> reached(states, 0);
    reached[start] = 1;
    for (int layer = 1; layer <= max_layers; ++layer) {
      // Image of the reached set under the product relation "pointwise equal
      // or adjacent", one coordinate at a time.
      std::vector<std::uint8_t> grown = reached;
      for (std::size_t c = 0; c < cells; ++c) {
        const auto w = weight[c];
        const auto block = w * values;
        for (std::uint64_t hi = 0; hi < states; hi += block) {
          for (std::uint64_t lo = 0; lo < w; ++lo) {
            const auto b = hi + lo;
            std::uint64_t present = 0;
            for (std::size_t v = 0; v < values; ++v)
              if (grown[b + v * w]) present |= closed_mask[v];
            if (!present) continue;
            for (std::size_t v = 0; v < values; ++v)
              if (present >> v & 1U) grown[b + v * w] = 1;
          }
        }
      }
      bool changed = false;
      for (std::uint64_t s = 0; s < states; ++s) {
        if (grown[s] && valid_state[s] && !reached[s]) {
          reached[s] = 1;
          dist[s] = static_cast<std::uint8_t>(layer);
          changed = true;
        }
      }
      if (!changed) break;
    }
  }

  std::vector<std::vector<Vertex>> dense_path(std::uint64_t target) const {
    std::vector<std::vector<Vertex>> path{digits_of(target)};
    for (int d = dist[target] - 1; d >= 0; --d) {
      for (std::uint64_t s = 0; s < states; ++s) {
        if (dist[s] != d) continue;
        auto digits = digits_of(s);
        if (pointwise_close(digits, path.back())) {
          path.push_back(std::move(digits));
          break;
        }
      }
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  void neighbors(const std::vector<Vertex>& x, std::set<Key>& out) const {
    std::vector<Vertex> y(cells);
    auto fill = [&](auto&& self, std::size_t c) -> void {
      if (c == cells) {
        out.insert(to_key(y));
        return;
      }
      for (auto v : closed[static_cast<std::size_t>(x[c])]) {
        if (on_border[c] && !graph.close(v, base)) continue;
        bool ok = true;
        for (auto l : lower[c])
          if (!graph.close(v, y[l])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        y[c] = v;
        self(self, c + 1);
      }
    };
    fill(fill, 0);
  }

  // Expands one more layer; false when nothing new was found.
  bool expand() {
    if (exhausted || static_cast<int>(layers.size()) > max_layers) return false;
    std::set<Key> found;
    for (const auto& key : layers.back()) neighbors(from_key(key), found);
    std::vector<Key> next;
    const int layer = static_cast<int>(layers.size());
    for (const auto& key : found) {
      if (layer_of.emplace(key, layer).second) next.push_back(key);
    }
    if (next.empty()) {
      exhausted = true;
      return false;
    }
    layers.push_back(std::move(next));
    return true;
  }

  std::optional<int> sparse_distance(const Key& key) {
    while (true) {
      if (auto it = layer_of.find(key); it != layer_of.end()) return it->second;
      if (!expand()) return std::nullopt;
    }
  }

  std::vector<std::vector<Vertex>> sparse_path(const Key& key, int distance) const {
    std::vector<std::vector<Vertex>> path{from_key(key)};
    for (int d = distance - 1; d >= 0; --d) {
      for (const auto& k : layers[static_cast<std::size_t>(d)]) {
        auto digits = from_key(k);
        if (pointwise_close(digits, path.back())) {
          path.push_back(std::move(digits));
          break;
        }
      }
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  std::optional<std::vector<Vertex>> target_digits(const GridMap& target) const {
    if (!(target.graph() == graph) || target.base_value() != base)
      throw Error("search target lives in a different graph or has a different base value");
    if (target.dim() != source.dim()) throw Error("search target dimension mismatch");
    auto digits = encode(target);
    if (!digits || !valid(*digits)) return std::nullopt;
    return digits;
  }
};

BoundedSearch::BoundedSearch(GridMap source, SearchBox box, int max_layers, SearchOptions options)
    : impl_(std::make_unique<Impl>(std::move(source), std::move(box), max_layers, options)) {}
BoundedSearch::~BoundedSearch() = default;
BoundedSearch::BoundedSearch(BoundedSearch&&) noexcept = default;
BoundedSearch& BoundedSearch::operator=(BoundedSearch&&) noexcept = default;

bool BoundedSearch::dense() const noexcept { return impl_->use_dense; }

std::uint64_t BoundedSearch::states_visited() const {
  if (impl_->use_dense)
    return static_cast<std::uint64_t>(
        std::count_if(impl_->dist.begin(), impl_->dist.end(), [](std::uint8_t d) { return d != kUnreached; }));
  return impl_->layer_of.size();
}

std::optional<int> BoundedSearch::distance_to(const GridMap& target) {
  auto digits = impl_->target_digits(target);
  if (!digits) return std::nullopt;
  if (impl_->use_dense) {
    const auto d = impl_->dist[impl_->index_of(*digits)];
    if (d == kUnreached) return std::nullopt;
    return static_cast<int>(d);
  }
  return impl_->sparse_distance(Impl::to_key(*digits));
}

std::optional<HomotopyCertificate> BoundedSearch::certificate_to(const GridMap& target) {
  const auto distance = distance_to(target);
  if (!distance) return std::nullopt;
  const auto digits = *impl_->target_digits(target);
  const auto path = impl_->use_dense ? impl_->dense_path(impl_->index_of(digits))
                                     : impl_->sparse_path(Impl::to_key(digits), *distance);
  HomotopyCertificate cert{impl_->source, target, {}, {}};
  for (const auto& d : path) cert.layers.push_back(impl_->decode(d));
  cert.h = stack_layers(cert.layers);
  return cert;
}

std::optional<HomotopyCertificate> bounded_homotopy_search(const GridMap& f, const GridMap& g,
                                                           const std::vector<int>& extents,
                                                           int max_layers, SearchOptions options) {
  if (f.dim() != g.dim()) throw Error("grid dimension mismatch");
  if (extents.size() != static_cast<std::size_t>(f.dim()))
    throw Error("box has " + std::to_string(extents.size()) + " extents for a grid of dimension " +
                std::to_string(f.dim()));
  const auto fb = f.bounds();
  const auto gb = g.bounds();
  Point lo(static_cast<std::size_t>(f.dim()), 0);
  Point hi = lo;
  if (fb || gb) {
    lo = fb ? fb->lo : gb->lo;
    hi = fb ? fb->hi : gb->hi;
    if (fb && gb) {
      for (std::size_t a = 0; a < lo.size(); ++a) {
        lo[a] = std::min(fb->lo[a], gb->lo[a]);
        hi[a] = std::max(fb->hi[a], gb->hi[a]);
      }
    }
  }
  for (std::size_t a = 0; a < lo.size(); ++a)
    if (hi[a] - lo[a] + 1 > extents[a]) throw Error("box is smaller than the supports");
  BoundedSearch search(f, SearchBox{lo, extents}, max_layers, options);
  return search.certificate_to(g);
}

}  // namespace atheory
