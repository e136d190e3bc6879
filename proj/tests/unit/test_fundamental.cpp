#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "atheory/fundamental.hpp"
#include "helpers.hpp"

using namespace atheory;

namespace {

// Triangles and 4-cycles counted from vertex subsets.
std::pair<int, int> brute_force_cycle_counts(const Graph& g) {
  const int n = static_cast<int>(g.order());
  int triangles = 0;
  int squares = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++triangles;
        for (int d = c + 1; d < n; ++d) {
          // The three ways to close a, b, c, d into a 4-cycle.
          const int orders[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
          for (const auto& o : orders) {
            bool ok = true;
            for (int i = 0; i < 4; ++i) ok = ok && g.adjacent(o[i], o[(i + 1) % 4]);
            if (ok) ++squares;
          }
        }
      }
  return {triangles, squares};
}

LoopWalk walk(std::vector<Vertex> v) { return LoopWalk{std::move(v)}; }

GroupPresentation random_presentation(std::mt19937& rng) {
  GroupPresentation p;
  const int gens = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < gens; ++i) p.generators.push_back("x" + std::to_string(i + 1));
  const int rels = static_cast<int>(rng() % 5);
  for (int r = 0; r < rels; ++r) {
    Word w;
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(gens));
      w.push_back(rng() % 2 ? g : -g);
    }
    w = free_reduce(w);
    if (!w.empty()) p.relators.push_back(w);
  }
  return p;
}

}  // namespace

TEST_CASE("word reduction") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(inverse({1, -2}) == Word{2, -1});
  CHECK(cyclic_canonical({2, 1}) == Word{1, 2});
  CHECK(cyclic_canonical({-1, -2}) == Word{1, 2});
}

TEST_CASE("small cycles examples") {
  CHECK(small_cycles(cycle_graph(5)).empty());
  auto k4 = small_cycles(complete_graph(4));
  CHECK(k4.size() == 7);
  CHECK(std::count_if(k4.begin(), k4.end(), [](const auto& c) { return c.size() == 3; }) == 4);
  auto c4 = small_cycles(cycle_graph(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0] == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("small cycles agree with the subset oracle") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing_support::random_graph(1 + static_cast<int>(rng() % 8), 0.45, rng);
    auto cycles = small_cycles(g);
    auto [t, s] = brute_force_cycle_counts(g);
    CHECK(std::count_if(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() == 3; }) == t);
    CHECK(std::count_if(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() == 4; }) == s);
    std::set<std::vector<Vertex>> distinct(cycles.begin(), cycles.end());
    CHECK(distinct.size() == cycles.size());
  }
}

TEST_CASE("A1 presentation examples") {
  auto c5 = a1_presentation(cycle_graph(5));
  CHECK(c5.generators.size() == 1);
  CHECK(c5.relators.empty());
  CHECK(abelianization(c5) == AbelianInvariants{1, {}});

  auto c4 = a1_presentation(cycle_graph(4));
  CHECK(c4.generators.size() == 1);
  CHECK(c4.relators.size() == 1);
  CHECK(tietze_simplify(c4).generators.empty());

  std::mt19937 rng(1);
  CHECK(a1_presentation(testing_support::random_tree(9, rng)).generators.empty());
  CHECK_THROWS_AS(a1_presentation(cycle_graph(5, std::nullopt)), MissingBaseError);
}

TEST_CASE("generator count is the cycle rank") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing_support::random_connected_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
    auto p = a1_presentation(g);
    CHECK(p.valid());
    CHECK(p.generators.size() == g.size() - g.order() + 1);
  }
}

TEST_CASE("disconnected graphs restrict to the base component") {
  auto g = Graph::from_indices({"a", "b", "c", "d", "e", "f", "g"},
                               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 6}}, 0);
  A1Presentation a(g);
  CHECK(a.restricted());
  CHECK(a.presentation().generators.size() == 1);
}

TEST_CASE("trees and complete graphs are trivial; long cycles give Z") {
  std::mt19937 rng(2);
  for (int i = 0; i < 5; ++i) CHECK(tietze_simplify(a1_presentation(testing_support::random_tree(10, rng))).generators.empty());
  for (int n = 1; n <= 7; ++n) CHECK(tietze_simplify(a1_presentation(complete_graph(n))).generators.empty());
  for (int n = 5; n <= 10; ++n) CHECK(abelianization(a1_presentation(cycle_graph(n))) == AbelianInvariants{1, {}});
}

TEST_CASE("tietze examples") {
  GroupPresentation a{{"a"}, {{1}}};
  CHECK(tietze_simplify(a) == GroupPresentation{});
  GroupPresentation comm{{"a", "b"}, {{1, 2, -1, -2}}};
  auto s = tietze_simplify(comm);
  CHECK(s.generators.size() == 2);
  CHECK(s.relators.size() == 1);
  CHECK(abelianization(s) == AbelianInvariants{2, {}});
  CHECK(tietze_simplify(a1_presentation(complete_graph(4))).generators.empty());
}

TEST_CASE("tietze images rewrite words consistently") {
  // < a, b | a b^-1 >: b is eliminated, its image is a.
  GroupPresentation p{{"a", "b"}, {{1, -2}}};
  auto r = tietze_reduce(p);
  REQUIRE(r.presentation.generators.size() == 1);
  CHECK(free_reduce(substitute({1, -2}, r.images)).empty());
  CHECK(free_reduce(substitute({2, 2}, r.images)).size() == 2);
}

TEST_CASE("tietze preserves abelian invariants") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_presentation(rng);
    auto before = abelianization(p);
    auto simple = tietze_simplify(p);
    CHECK(simple.valid());
    CHECK(simple.generators.size() <= p.generators.size());
    CHECK(abelianization(simple) == before);
  }
}

TEST_CASE("abelianization and Smith normal form") {
  CHECK(abelianization(GroupPresentation{{"a"}, {}}) == AbelianInvariants{1, {}});
  CHECK(abelianization(GroupPresentation{{"a"}, {{1, 1, 1}}}) == AbelianInvariants{0, {3}});
  CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
  CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<std::int64_t>{2, 6, 12});
  CHECK(smith_diagonal({{0, 0}}).empty());
  CHECK(format_invariants(AbelianInvariants{1, {}}) == "free_rank=1 torsion=[]");
  CHECK(format_invariants(AbelianInvariants{0, {2, 4}}) == "free_rank=0 torsion=[2,4]");
}

TEST_CASE("Smith diagonal is invariant under unimodular operations") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);
    auto d = smith_diagonal(m);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    for (auto x : d) CHECK(x > 0);
    auto t = m;
    const auto a = rng() % rows, b = rng() % rows;
    if (a != b)
      for (std::size_t j = 0; j < cols; ++j) t[a][j] += 2 * t[b][j];
    std::swap(t[0], t[rows - 1]);
    CHECK(smith_diagonal(t) == d);
  }
}

TEST_CASE("loop words") {
  auto c5 = cycle_graph(5);
  CHECK(loop_to_word(walk({0}), c5).empty());
  auto w = loop_to_word(walk({0, 1, 2, 3, 4, 0}), c5);
  CHECK(w.size() == 1);
  CHECK(std::abs(w[0]) == 1);
  CHECK(loop_to_word(walk({0, 1, 2, 2, 1, 0}), c5).empty());
  CHECK_THROWS_AS(loop_to_word(walk({0, 2, 0}), c5), Error);
  CHECK_THROWS_AS(loop_to_word(walk({0, 1}), c5), Error);
}

TEST_CASE("loops_equivalent examples") {
  auto c5 = cycle_graph(5);
  auto wind = walk({0, 1, 2, 3, 4, 0});
  CHECK(loops_equivalent(wind, wind, c5) == Verdict::equal);
  CHECK(loops_equivalent(wind, walk({0}), c5) == Verdict::distinct);
  CHECK(loops_equivalent(walk({0, 1, 2, 3, 0}), walk({0}), cycle_graph(4)) == Verdict::equal);
  CHECK(loops_equivalent(wind, walk({0, 4, 3, 2, 1, 0}), c5) == Verdict::distinct);
  CHECK(loops_equivalent(walk({0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0}), walk({0}), c5) == Verdict::distinct);
}

TEST_CASE("loops_equivalent on a free group of rank two") {
  // Two pentagons glued at the base: A_1 is free on two generators.
  auto g = Graph::from_indices({"0", "1", "2", "3", "4", "5", "6", "7", "8"},
                               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {0, 8}}, 0);
  auto a = walk({0, 1, 2, 3, 4, 0});
  auto b = walk({0, 5, 6, 7, 8, 0});
  std::vector<Vertex> ab = a.vertices, ba = b.vertices;
  ab.insert(ab.end(), b.vertices.begin() + 1, b.vertices.end());
  ba.insert(ba.end(), a.vertices.begin() + 1, a.vertices.end());
  CHECK(loops_equivalent(walk(ab), walk(ba), g) == Verdict::distinct);
  CHECK(loops_equivalent(walk(ab), walk(ab), g) == Verdict::equal);
}
