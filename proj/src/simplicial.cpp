#include "atheory/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace atheory {

SimplicialComplex::SimplicialComplex(const std::vector<std::vector<std::string>>& facets) {
  std::vector<Simplex> candidates;
  for (const auto& tokens : facets) {
    if (tokens.empty()) throw Error("empty facet");
    Simplex s;
    for (const auto& t : tokens) {
      auto v = find_vertex(t);
      if (!v) {
        v = static_cast<int>(names_.size());
        names_.push_back(t);
      }
      s.push_back(*v);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("facet repeats a vertex");
    candidates.push_back(std::move(s));
  }
  // Keep a candidate unless another candidate strictly contains it, or an
  // identical one appeared earlier.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& s = candidates[i];
    bool redundant = false;
    for (std::size_t j = 0; j < candidates.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& t = candidates[j];
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      redundant = t.size() > s.size() || j < i;
    }
    if (redundant) {
      std::vector<std::string> tokens;
      for (auto v : s) tokens.push_back(names_[static_cast<std::size_t>(v)]);
      dropped_.push_back(std::move(tokens));
    } else {
      facets_.push_back(s);
    }
  }
}

std::optional<int> SimplicialComplex::find_vertex(std::string_view token) const {
  auto it = std::find(names_.begin(), names_.end(), token);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& tokens) const {
  Simplex s;
  for (const auto& t : tokens) {
    auto v = find_vertex(t);
    if (!v) throw Error("unknown vertex '" + t + "' in simplex");
    s.push_back(*v);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string SimplicialComplex::label(const Simplex& s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += names_[static_cast<std::size_t>(s[i])];
  }
  return out;
}

SimplicialComplex parse_facets(std::string_view text) {
  std::vector<std::vector<std::string>> facets;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> facet;
    for (std::string t; tokens >> t;) facet.push_back(t);
    std::set<std::string> distinct(facet.begin(), facet.end());
    if (distinct.size() != facet.size()) throw ParseError("facet repeats a vertex", number);
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex(facets);
}

int dimension(const SimplicialComplex& complex) {
  if (complex.empty()) throw Error("dimension of an empty complex");
  std::size_t largest = 0;
  for (const auto& f : complex.facets()) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

std::vector<Simplex> face_closure(const SimplicialComplex& complex) {
  std::set<Simplex> faces;
  for (const auto& f : complex.facets()) {
    const auto k = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(f[i]);
      faces.insert(std::move(s));
    }
  }
  std::vector<Simplex> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  return out;
}

namespace {

std::size_t shared(const Simplex& a, const Simplex& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

Graph gamma_q(const SimplicialComplex& complex, int q, GammaMode mode,
              const std::optional<std::vector<std::string>>& sigma0) {
  const int d = dimension(complex);
  if (q < 0 || q > d) throw Error("q must lie in [0, " + std::to_string(d) + "]");
  const auto need = static_cast<std::size_t>(q) + 1;

  std::vector<Simplex> nodes;
  const auto& pool = mode == GammaMode::maximal ? complex.facets() : face_closure(complex);
  for (const auto& s : pool)
    if (s.size() >= need) nodes.push_back(s);

  std::vector<std::string> names;
  for (const auto& s : nodes) names.push_back(complex.label(s));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (shared(nodes[i], nodes[j]) >= need) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));

  std::optional<Vertex> base;
  if (sigma0) {
    const auto s0 = complex.simplex_of(*sigma0);
    if (s0.size() < need)
      throw Error("base simplex has dimension " + std::to_string(static_cast<int>(s0.size()) - 1) +
                  " < q = " + std::to_string(q));
    for (std::size_t i = 0; i < nodes.size() && !base; ++i)
      if (std::includes(nodes[i].begin(), nodes[i].end(), s0.begin(), s0.end()))
        base = static_cast<Vertex>(i);
    if (!base) throw Error("base simplex is not a simplex of the complex");
  }
  return Graph::from_indices(std::move(names), edges, base);
}

}  // namespace atheory
