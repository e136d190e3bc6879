#include "atheory/fundamental.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace atheory {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& letter : out) letter = -letter;
  return out;
}

namespace {

// Letters ordered x1 < x1^-1 < x2 < x2^-1 < ...
bool letter_less(int a, int b) {
  if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
  return a > b;
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

}  // namespace

Word cyclic_canonical(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    Word r = base;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (word_less(r, best)) best = r;
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
  }
  return best;
}

bool GroupPresentation::valid() const {
  const auto n = static_cast<int>(generators.size());
  for (const auto& r : relators) {
    for (int letter : r)
      if (letter == 0 || std::abs(letter) > n) return false;
    if (free_reduce(r) != r) return false;
  }
  return true;
}

std::string format_word(const GroupPresentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += p.generators.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

std::string format_presentation(const GroupPresentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i ? ", " : " ") + p.generators[i];
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) out += (i ? ", " : " ") + format_word(p, p.relators[i]);
  out += " >";
  return out;
}

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw Error("ragged matrix");

  auto min_nonzero = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!best || std::llabs(a[i][j]) < std::llabs(a[best->first][best->second])))
          best = std::pair{i, j};
    return best;
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto pivot = min_nonzero(t);
    if (!pivot) break;
    std::swap(a[t], a[pivot->first]);
    swap_cols(t, pivot->second);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const auto q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const auto q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // Bring the smallest remainder in row t or column t to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && std::llabs(a[i][t]) < std::llabs(a[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && std::llabs(a[t][j]) < std::llabs(a[bi][bj])) bi = t, bj = j;
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // The pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return diag;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  const auto n = p.generators.size();
  std::vector<std::vector<std::int64_t>> matrix;
  for (const auto& r : p.relators) {
    std::vector<std::int64_t> row(n, 0);
    for (int letter : r) row.at(static_cast<std::size_t>(std::abs(letter) - 1)) += letter > 0 ? 1 : -1;
    matrix.push_back(std::move(row));
  }
  AbelianInvariants out;
  const auto diag = n ? smith_diagonal(std::move(matrix)) : std::vector<std::int64_t>{};
  out.free_rank = static_cast<int>(n - diag.size());
  for (auto d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::string format_invariants(const AbelianInvariants& a) {
  std::string out = "free_rank=" + std::to_string(a.free_rank) + " torsion=[";
  for (std::size_t i = 0; i < a.torsion.size(); ++i) out += (i ? "," : "") + std::to_string(a.torsion[i]);
  return out + "]";
}

std::vector<std::vector<Vertex>> small_cycles(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<std::vector<Vertex>> triangles;
  std::vector<std::vector<Vertex>> squares;
  for (Vertex a = 0; a < n; ++a) {
    std::vector<Vertex> up;
    for (auto v : g.neighbors(a))
      if (v > a) up.push_back(v);
    for (std::size_t i = 0; i < up.size(); ++i) {
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        const Vertex b = up[i];
        const Vertex d = up[j];
        if (g.adjacent(b, d)) triangles.push_back({a, b, d});
        for (auto c : g.neighbors(b))
          if (c > a && c != d && g.adjacent(c, d)) squares.push_back({a, b, c, d});
      }
    }
  }
  std::sort(triangles.begin(), triangles.end());
  std::sort(squares.begin(), squares.end());
  triangles.insert(triangles.end(), squares.begin(), squares.end());
  return triangles;
}

void validate_loop(const Graph& g, Vertex base, const LoopWalk& walk) {
  const auto& w = walk.vertices;
  if (w.empty()) throw Error("empty loop");
  if (w.front() != base || w.back() != base) throw Error("loop must start and end at the base vertex");
  const auto n = static_cast<Vertex>(g.order());
  for (auto v : w)
    if (v < 0 || v >= n) throw Error("loop vertex out of range");
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!g.close(w[i - 1], w[i]))
      throw Error("loop step " + g.name(w[i - 1]) + " -> " + g.name(w[i]) + " is not an edge");
}

A1Presentation::A1Presentation(const Graph& g, std::optional<Vertex> base)
    : graph_(g), base_(base ? *base : g.require_base()) {
  const auto n = g.order();
  if (base_ < 0 || static_cast<std::size_t>(base_) >= n) throw Error("base vertex out of range");
  parent_.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::set<Edge> tree;
  std::deque<Vertex> queue{base_};
  seen[static_cast<std::size_t>(base_)] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++reached;
      parent_[static_cast<std::size_t>(w)] = v;
      tree.insert({std::min(v, w), std::max(v, w)});
      queue.push_back(w);
    }
  }
  restricted_ = reached < n;

  edge_generator_.assign(g.size(), -1);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    if (!seen[static_cast<std::size_t>(edge.u)] || tree.contains(edge)) continue;
    edge_generator_[e] = static_cast<int>(generator_edges_.size());
    generator_edges_.push_back(edge);
    presentation_.generators.push_back("x" + std::to_string(generator_edges_.size()));
  }

  for (const auto& cycle : small_cycles(g)) {
    if (!seen[static_cast<std::size_t>(cycle.front())]) continue;
    Word r;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto u = cycle[i];
      const auto v = cycle[(i + 1) % cycle.size()];
      const int k = generator_of(u, v);
      if (k >= 0) r.push_back(u < v ? k + 1 : -(k + 1));
    }
    presentation_.relators.push_back(free_reduce(r));
  }
}

int A1Presentation::generator_of(Vertex u, Vertex v) const {
  const Edge e{std::min(u, v), std::max(u, v)};
  const auto& edges = graph_.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) throw Error("not an edge");
  return edge_generator_[static_cast<std::size_t>(it - edges.begin())];
}

Word A1Presentation::word_of(const LoopWalk& walk) const {
  Word w;
  const auto n = static_cast<Vertex>(graph_.order());
  for (std::size_t i = 1; i < walk.vertices.size(); ++i) {
    const auto u = walk.vertices[i - 1];
    const auto v = walk.vertices[i];
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("walk vertex out of range");
    if (u == v) continue;
    if (!graph_.adjacent(u, v))
      throw Error("walk step " + graph_.name(u) + " -> " + graph_.name(v) + " is not an edge");
    const int k = generator_of(u, v);
    if (k >= 0) w.push_back(u < v ? k + 1 : -(k + 1));
  }
  return free_reduce(w);
}

GroupPresentation a1_presentation(const Graph& g, std::optional<Vertex> base) {
  return A1Presentation(g, base).presentation();
}

Word loop_to_word(const LoopWalk& walk, const Graph& g, std::optional<Vertex> base) {
  const A1Presentation p(g, base);
  validate_loop(g, p.base(), walk);
  return p.word_of(walk);
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int letter : w) {
    const auto& image = images.at(static_cast<std::size_t>(std::abs(letter) - 1));
    if (letter > 0)
      out.insert(out.end(), image.begin(), image.end());
    else {
      auto inv = inverse(image);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

namespace {

void normalize_relators(std::vector<Word>& relators) {
  std::vector<Word> kept;
  std::set<Word> seen;
  for (const auto& r : relators) {
    auto c = cyclic_canonical(cyclic_reduce(r));
    if (c.empty()) continue;
    if (seen.insert(c).second) kept.push_back(std::move(c));
  }
  relators = std::move(kept);
}

// Replaces generator `gen` (0-based) by `value` everywhere and renumbers the
// generators above it.
Word eliminate(const Word& w, int gen, const Word& value) {
  Word out;
  const auto inv = inverse(value);
  for (int letter : w) {
    const int index = std::abs(letter) - 1;
    if (index == gen) {
      const auto& part = letter > 0 ? value : inv;
      for (int x : part) out.push_back(std::abs(x) - 1 > gen ? (x > 0 ? x - 1 : x + 1) : x);
    } else if (index > gen) {
      out.push_back(letter > 0 ? letter - 1 : letter + 1);
    } else {
      out.push_back(letter);
    }
  }
  return free_reduce(out);
}

}  // namespace

SimplifiedPresentation tietze_reduce(const GroupPresentation& p) {
  if (!p.valid()) throw Error("invalid presentation");
  SimplifiedPresentation s{p, {}};
  for (int k = 1; k <= static_cast<int>(p.generators.size()); ++k) s.images.push_back({k});

  while (true) {
    normalize_relators(s.presentation.relators);
    auto& rels = s.presentation.relators;

    std::vector<std::size_t> order(rels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rels[a].size() < rels[b].size(); });
    std::optional<std::pair<std::size_t, int>> move;
    for (auto r : order) {
      std::vector<int> count(s.presentation.generators.size(), 0);
      for (int letter : rels[r]) ++count[static_cast<std::size_t>(std::abs(letter) - 1)];
      for (std::size_t k = 0; k < count.size(); ++k) {
        if (count[k] == 1) {
          move = std::pair{r, static_cast<int>(k)};
          break;
        }
      }
      if (move) break;
    }
    if (!move) break;

    // r = w1 x^e w2, so x^e = w1^-1 w2^-1 and x = (w2 w1)^-e.
    const auto [r, gen] = *move;
    Word rel = rels[r];
    const auto pos = static_cast<std::size_t>(
        std::find_if(rel.begin(), rel.end(), [gen](int l) { return std::abs(l) - 1 == gen; }) - rel.begin());
    const int e = rel[pos] > 0 ? 1 : -1;
    Word rest(rel.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rel.end());
    rest.insert(rest.end(), rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word value = e > 0 ? inverse(rest) : rest;

    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(r));
    for (auto& other : rels) other = eliminate(other, gen, value);
    for (auto& image : s.images) image = eliminate(image, gen, value);
    s.presentation.generators.erase(s.presentation.generators.begin() + gen);
  }
  return s;
}

GroupPresentation tietze_simplify(const GroupPresentation& p) { return tietze_reduce(p).presentation; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "equal";
    case Verdict::distinct:
      return "distinct";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

Verdict loops_equivalent(const LoopWalk& a, const LoopWalk& b, const Graph& g, std::optional<Vertex> base,
                         const EquivalenceOptions& options) {
  const A1Presentation pres(g, base);
  const auto v0 = pres.base();
  validate_loop(g, v0, a);
  validate_loop(g, v0, b);

  auto difference = pres.word_of(a);
  const auto wb = inverse(pres.word_of(b));
  difference.insert(difference.end(), wb.begin(), wb.end());
  difference = free_reduce(difference);
  if (difference.empty()) return Verdict::equal;

  const auto simplified = tietze_reduce(pres.presentation());
  const auto word = substitute(difference, simplified.images);
  if (word.empty()) return Verdict::equal;
  const auto& group = simplified.presentation;
  // No relators left: a free group, where reduced words are distinct.
  if (group.relators.empty()) return Verdict::distinct;

  auto extended = group;
  extended.relators.push_back(cyclic_reduce(word));
  if (!(abelianization(extended) == abelianization(group))) return Verdict::distinct;
  // A group on at most one generator is cyclic, so the abelian image decides.
  if (group.generators.size() <= 1) return Verdict::equal;

  if (options.grid_search) {
    const auto longest = static_cast<int>(std::max(a.vertices.size(), b.vertices.size()));
    const auto f = GridMap::from_walk(g, a.vertices, v0);
    const auto h = GridMap::from_walk(g, b.vertices, v0);
    BoundedSearch search(f, SearchBox{{-options.box_margin}, {longest + 2 * options.box_margin}},
                         options.max_layers);
    if (search.distance_to(h)) return Verdict::equal;
  }
  return Verdict::unknown;
}

}  // namespace atheory
