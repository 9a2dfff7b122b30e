#include "turancount/coloring.hpp"
#include "turancount/random.hpp"

#include <doctest.h>

using namespace turancount;

namespace {

// Every proper k-coloring by scanning all k^n assignments, in
// lexicographic order.
std::vector<coloring> brute_colorings(const graph& g, int k, const std::map<vertex, int>& fixed = {})
{
  std::vector<coloring> out;
  int n = g.order();
  coloring c(n, 1);
  if (k == 0)
    return n == 0 ? std::vector<coloring>{c} : out;
  for (;;) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      ok = ok && c[u] != c[v];
    for (auto [v, col] : fixed)
      ok = ok && c[v] == col;
    if (ok)
      out.push_back(c);
    int i = n - 1;
    while (i >= 0 && c[i] == k)
      c[i--] = 1;
    if (i < 0)
      break;
    ++c[i];
  }
  return out;
}

int brute_chromatic(const graph& g)
{
  for (int k = 0;; ++k)
    if (!brute_colorings(g, k).empty())
      return k;
}

graph random_graph(rng& gen, int n, double density)
{
  graph g(n);
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (gen.unit() < density)
        g.add_edge(u, v);
  return g;
}

std::vector<coloring> collect(constrained_colorings& it)
{
  std::vector<coloring> out;
  while (it.next())
    out.push_back(it.current());
  return out;
}

} // namespace

TEST_CASE("chromatic numbers")
{
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(turan_graph(9, 3)) == 3);
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(chromatic_number(graph(0)) == 0);
  CHECK(chromatic_number(graph(3)) == 1);
  CHECK(chromatic_number(petersen()) == 3);
  CHECK(chromatic_number(cycle(64)) == 2);
}

TEST_CASE("k-colorability")
{
  CHECK_FALSE(is_k_colorable(cycle(5), 2));
  CHECK(is_k_colorable(cycle(5), 3));
  CHECK(is_k_colorable(petersen(), 3));
  CHECK_FALSE(is_k_colorable(petersen(), 2));
  // a witness exists by direct search
  CHECK_FALSE(brute_colorings(petersen(), 3).empty());
  CHECK(is_k_colorable(graph(0), 0));
  CHECK_FALSE(is_k_colorable(graph(1), 0));
}

TEST_CASE("is_k_colorable agrees with scanning all assignments")
{
  rng gen(11);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(gen.below(trial < 120 ? 8 : 10));
    graph g = random_graph(gen, n, 0.2 + 0.7 * gen.unit());
    int top = n <= 8 ? 4 : 3;
    for (int k = 0; k <= top; ++k)
      REQUIRE(is_k_colorable(g, k) == !brute_colorings(g, k).empty());
    if (n <= 8)
      REQUIRE(chromatic_number(g) == brute_chromatic(g));
  }
}

TEST_CASE("criticality of the named patterns")
{
  auto c5 = analyze_pattern(cycle(5));
  REQUIRE(c5);
  CHECK(c5->r == 2);
  CHECK(c5->chi == 3);
  CHECK(c5->good_edges.size() == 5);
  CHECK(c5->aut == 10);

  auto k4me = analyze_pattern(k4_minus_edge());
  REQUIRE(k4me);
  CHECK(k4me->r == 2);
  REQUIRE(k4me->good_edges.size() == 1);
  auto [u, v] = k4me->good_edges[0];
  CHECK(k4me->g.degree(u) == 3);
  CHECK(k4me->g.degree(v) == 3);

  CHECK_FALSE(analyze_pattern(cycle(4)));

  auto k4 = analyze_pattern(complete(4));
  REQUIRE(k4);
  CHECK(k4->r == 3);
  CHECK(k4->good_edges.size() == 6);

  CHECK_THROWS_AS(analyze_pattern(graph(3)), std::invalid_argument);
  CHECK_THROWS_AS(analyze_pattern(cycle(11)), std::invalid_argument);
  CHECK_THROWS_AS(require_critical(cycle(4)), std::invalid_argument);
  CHECK_THROWS_AS(require_critical(complete(2)), std::invalid_argument);  // r = 1
}

TEST_CASE("good edges drop chi to r, all others keep r+1")
{
  rng gen(5);
  int critical_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(gen.below(5));
    graph g = random_graph(gen, n, 0.3 + 0.6 * gen.unit());
    if (g.size() == 0)
      continue;
    auto p = analyze_pattern(g);
    if (!p)
      continue;
    ++critical_seen;
    for (auto e : g.edges()) {
      bool good = std::find(p->good_edges.begin(), p->good_edges.end(), e) != p->good_edges.end();
      REQUIRE(brute_chromatic(g.without_edge(e.u, e.v)) == (good ? p->r : p->r + 1));
    }
  }
  CHECK(critical_seen > 20);
}

TEST_CASE("constrained coloring enumeration")
{
  // C5 minus the edge 0-4 is the path 0-1-2-3-4
  graph path = cycle(5).without_edge(0, 4);
  constrained_colorings forced(path, 2, {{0, 1}, {4, 1}});
  auto only = collect(forced);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == coloring{1, 2, 1, 2, 1});

  constrained_colorings k3(complete(3), 3);
  CHECK(collect(k3).size() == 6);
  constrained_colorings k3_two(complete(3), 2);
  CHECK(collect(k3_two).empty());

  CHECK_THROWS_AS(constrained_colorings(complete(3), 3, {{0, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(constrained_colorings(complete(3), 3, {{0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(constrained_colorings(complete(3), 3, {{5, 1}}), std::invalid_argument);

  // restartable
  k3.restart();
  CHECK(collect(k3).size() == 6);
}

TEST_CASE("enumeration matches brute force, in order, with properness per item")
{
  rng gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(gen.below(7));
    graph g = random_graph(gen, n, gen.unit());
    int k = 1 + static_cast<int>(gen.below(3));
    std::map<vertex, int> fixed;
    if (gen.unit() < 0.5)
      fixed[static_cast<vertex>(gen.below(n))] = 1 + static_cast<int>(gen.below(k));
    constrained_colorings it(g, k, fixed);
    auto got = collect(it);
    for (const auto& c : got) {
      for (auto [u, v] : g.edges())
        REQUIRE(c[u] != c[v]);
      for (auto [v, col] : fixed)
        REQUIRE(c[v] == col);
    }
    REQUIRE(got == brute_colorings(g, k, fixed));
  }
}

TEST_CASE("every r-coloring of F - uv gives u and v the same color")
{
  for (graph F : {cycle(3), cycle(5), cycle(7), complete(4), k4_minus_edge(), complete(5)}) {
    auto p = require_critical(F);
    for (auto [u, v] : p.good_edges) {
      constrained_colorings it(F.without_edge(u, v), p.r);
      int count = 0;
      while (it.next()) {
        REQUIRE(it.current()[u] == it.current()[v]);
        ++count;
      }
      CHECK(count > 0);
    }
  }
}

TEST_CASE("class profiles")
{
  coloring c{1, 2, 1, 2, 1};
  CHECK(class_profile(c, 2, 0, 4) == std::vector<int>{1, 2});
  auto x = class_profile(coloring{1, 1, 2, 3}, 3, 0, 1);
  CHECK(x == std::vector<int>{0, 1, 1});
}
