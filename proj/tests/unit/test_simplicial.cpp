#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "atheory/io.hpp"
#include "atheory/simplicial.hpp"

using namespace atheory;

namespace {

SimplicialComplex complex_of(std::vector<std::vector<std::string>> facets) { return SimplicialComplex(facets); }

SimplicialComplex cone5() {
  return complex_of({{"5", "0", "1"}, {"5", "1", "2"}, {"5", "2", "3"}, {"5", "3", "4"}, {"5", "4", "0"}});
}

// Pairwise-intersection oracle for maximal mode.
std::vector<std::pair<int, int>> intersection_edges(const SimplicialComplex& c, int q) {
  std::vector<std::pair<int, int>> out;
  std::vector<int> nodes;
  const auto& f = c.facets();
  for (int i = 0; i < static_cast<int>(f.size()); ++i)
    if (static_cast<int>(f[static_cast<std::size_t>(i)].size()) >= q + 1) nodes.push_back(i);
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const auto& s = f[static_cast<std::size_t>(nodes[a])];
      const auto& t = f[static_cast<std::size_t>(nodes[b])];
      int shared = 0;
      for (int v : s) shared += static_cast<int>(std::count(t.begin(), t.end(), v));
      if (shared >= q + 1) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

TEST_CASE("dimension") {
  CHECK(dimension(complex_of({{"0", "1", "2"}})) == 2);
  CHECK(dimension(complex_of({{"0"}})) == 0);
  CHECK(dimension(complex_of({{"0", "1"}, {"1", "2", "3"}})) == 2);
  CHECK_THROWS_AS(dimension(SimplicialComplex{}), Error);
}

TEST_CASE("non-maximal and repeated facets are dropped") {
  auto c = complex_of({{"0", "1", "2"}, {"1", "2"}, {"2", "1", "0"}, {"3"}});
  CHECK(c.facets().size() == 2);
  CHECK(c.dropped().size() == 2);
  CHECK_THROWS_AS(complex_of({{}}), Error);
  CHECK_THROWS_AS(complex_of({{"0", "0"}}), Error);
}

TEST_CASE("facet parser") {
  auto c = parse_facets("# comment\n0 1 2\n\n  2 3\n");
  CHECK(c.facets().size() == 2);
  CHECK(c.vertex_names() == std::vector<std::string>{"0", "1", "2", "3"});
  try {
    parse_facets("0 1\n1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("face closure") {
  CHECK(face_closure(complex_of({{"0", "1", "2"}})).size() == 7);
  auto faces = face_closure(complex_of({{"0", "1"}, {"1", "2"}}));
  CHECK(faces == std::vector<Simplex>{{0}, {1}, {2}, {0, 1}, {1, 2}});
  CHECK(face_closure(complex_of({{"0"}})).size() == 1);
}

TEST_CASE("gamma_q on the cone over C5") {
  auto c = cone5();
  auto g1 = gamma_q(c, 1, GammaMode::maximal);
  CHECK(g1.order() == 5);
  CHECK(isomorphic(g1, cycle_graph(5)));
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g1.edges()) edges.emplace_back(e.u, e.v);
  CHECK(edges == intersection_edges(c, 1));

  auto g0 = gamma_q(c, 0, GammaMode::maximal);
  CHECK(isomorphic(g0, complete_graph(5)));

  auto two = complex_of({{"0", "1", "2"}, {"2", "3", "4"}});
  auto g = gamma_q(two, 1, GammaMode::maximal);
  CHECK(g.order() == 2);
  CHECK(g.size() == 0);
}

TEST_CASE("gamma_q base and errors") {
  auto c = cone5();
  auto g = gamma_q(c, 1, GammaMode::maximal, std::vector<std::string>{"1", "2"});
  CHECK(g.name(*g.base()) == "5,1,2");
  CHECK_THROWS_AS(gamma_q(c, 3), Error);
  CHECK_THROWS_AS(gamma_q(c, -1), Error);
  CHECK_THROWS_AS(gamma_q(c, 1, GammaMode::maximal, std::vector<std::string>{"1"}), Error);
  CHECK_THROWS_AS(gamma_q(c, 1, GammaMode::maximal, std::vector<std::string>{"0", "2"}), Error);
}

TEST_CASE("gamma_q properties on random complexes") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<std::string>> facets;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < count; ++k) {
      std::vector<std::string> f;
      for (int v = 0; v < 7; ++v)
        if (rng() % 3 == 0) f.push_back(std::to_string(v));
      if (f.empty()) f.push_back(std::to_string(rng() % 7));
      facets.push_back(f);
    }
    SimplicialComplex c(facets);
    const int d = dimension(c);
    for (int q = 0; q <= d; ++q) {
      for (auto mode : {GammaMode::maximal, GammaMode::all}) {
        auto g = gamma_q(c, q, mode);
        for (const auto& e : g.edges()) CHECK(e.u != e.v);
        for (Vertex u = 0; u < static_cast<Vertex>(g.order()); ++u)
          for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        if (mode == GammaMode::all) {
          auto faces = face_closure(c);
          auto expected = std::count_if(faces.begin(), faces.end(),
                                        [&](const Simplex& s) { return static_cast<int>(s.size()) >= q + 1; });
          CHECK(static_cast<long>(g.order()) == expected);
        }
      }
    }
    // q = 0 components match union-find over shared vertices.
    auto g0 = gamma_q(c, 0, GammaMode::maximal);
    UnionFind uf(c.vertex_names().size());
    for (const auto& f : c.facets())
      for (int v : f) uf.join(v, f.front());
    std::set<int> roots;
    for (const auto& f : c.facets()) roots.insert(uf.find(f.front()));
    CHECK(connected_components(g0).size() == roots.size());
  }
}

TEST_CASE("fixture complexes give C5") {
  for (const char* name : {"ring5.facets", "cone5.facets"}) {
    auto c = parse_facets(read_text_file(std::string(ATHEORY_FIXTURES) + "/" + name));
    CHECK(isomorphic(gamma_q(c, 1), cycle_graph(5)));
  }
}
