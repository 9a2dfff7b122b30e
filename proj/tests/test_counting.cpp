#include "turancount/coloring.hpp"
#include "turancount/counting.hpp"
#include "turancount/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

using namespace turancount;

namespace {

// Loops over every injective tuple (phi(0), ..., phi(f-1)).
std::uint64_t naive_injections(const graph& F, const graph& H)
{
  int f = F.order(), n = H.order();
  if (f > n)
    return 0;
  std::vector<vertex> phi(f);
  std::vector<bool> used(n, false);
  std::uint64_t count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == f) {
      for (auto [u, v] : F.edges())
        if (!H.has_edge(phi[u], phi[v]))
          return;
      ++count;
      return;
    }
    for (vertex x = 0; x < n; ++x) {
      if (used[x])
        continue;
      used[x] = true;
      phi[i] = x;
      rec(i + 1);
      used[x] = false;
    }
  };
  rec(0);
  return count;
}

std::uint64_t naive_automorphisms(const graph& F)
{
  std::vector<vertex> perm(F.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (vertex u = 0; u < F.order() && ok; ++u)
      for (vertex v = u + 1; v < F.order() && ok; ++v)
        ok = F.has_edge(u, v) == F.has_edge(perm[u], perm[v]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
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

std::vector<graph> named_patterns() { return {cycle(3), cycle(5), complete(4), k4_minus_edge()}; }

} // namespace

TEST_CASE("injection counts")
{
  CHECK(count_injections(cycle(3), complete(4)) == 24);
  graph k2 = complete(2);
  CHECK(count_injections(k2, petersen()) == 2 * petersen().size());
  CHECK(count_injections(k2, turan_graph(9, 3)) == 2 * 27);
  CHECK(naive_injections(cycle(5), petersen()) == 120);
  CHECK(count_injections(cycle(5), petersen()) == 120);
  CHECK(count_injections(complete(5), complete(4)) == 0);
  CHECK(count_injections(graph(0), complete(3)) == 1);
}

TEST_CASE("automorphism counts")
{
  CHECK(automorphism_count(cycle(5)) == 10);
  CHECK(automorphism_count(complete(4)) == 24);
  CHECK(automorphism_count(k4_minus_edge()) == 4);
  CHECK(automorphism_count(petersen()) == 120);
  CHECK(automorphism_count(graph(3)) == 6);  // non-edges must be preserved too

  rng gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    graph F = random_graph(gen, 2 + static_cast<int>(gen.below(6)), gen.unit());
    REQUIRE(automorphism_count(F) == naive_automorphisms(F));
  }
}

TEST_CASE("copy counts")
{
  for (int n = 3; n <= 20; ++n)
    REQUIRE(count_copies(cycle(3), turan_graph(n, 2)).copies == 0);
  auto k4 = count_copies(cycle(3), complete(4));
  CHECK(k4.copies == 4);
  CHECK(k4.injections == 24);
  CHECK(count_copies(cycle(5), petersen()).copies == 12);
}

TEST_CASE("copies through an edge")
{
  graph t6 = turan_graph(6, 2).with_edge(0, 1);
  CHECK(copies_through_edge(cycle(3), t6, {0, 1}) == 3);
  graph t10 = turan_graph(10, 2).with_edge(0, 1);
  CHECK(copies_through_edge(cycle(5), t10, {0, 1}) == 60);
  CHECK(copies_through_edge_by_deletion(cycle(5), t10, {0, 1}) == 60);
  for (auto e : complete(4).edges())
    CHECK(copies_through_edge(cycle(3), complete(4), e) == 2);
  CHECK_THROWS_AS(copies_through_edge(cycle(3), t6, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(copies_through_edge_by_deletion(cycle(3), t6, {0, 2}), std::invalid_argument);

  auto p = require_critical(cycle(5));
  CHECK(copies_through_edge(p, t10, {0, 1}) == 60);
}

TEST_CASE("copies through a vertex")
{
  for (vertex v = 0; v < 4; ++v)
    CHECK(copies_through_vertex(cycle(3), complete(4), v) == 3);
  graph t10 = turan_graph(10, 2).with_edge(0, 1);
  CHECK(copies_through_vertex(cycle(5), t10, 0) == 60);
  for (vertex v = 0; v < 8; ++v)
    CHECK(copies_through_vertex(cycle(3), turan_graph(8, 2), v) == 0);
  CHECK_THROWS(copies_through_vertex(cycle(3), complete(4), 4));
}

TEST_CASE("backtracking agrees with the all-tuples loop on small hosts")
{
  rng gen(99);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(gen.below(8));
    graph H = random_graph(gen, n, 0.3 + 0.7 * gen.unit());
    for (const auto& F : named_patterns())
      REQUIRE(count_injections(F, H) == naive_injections(F, H));
  }
}

TEST_CASE("edge counts sum to |E(F)| times the copy count; both routes agree")
{
  rng gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 5 + static_cast<int>(gen.below(5));
    graph H = random_graph(gen, n, 0.4 + 0.5 * gen.unit());
    for (const auto& F : named_patterns()) {
      pattern_counter counter(F);
      big_int sum = 0;
      for (auto e : H.edges()) {
        big_int anchored = counter.copies_through_edge(H, e);
        REQUIRE(anchored == copies_through_edge_by_deletion(F, H, e));
        sum += anchored;
      }
      REQUIRE(sum == counter.copies(H).copies * F.size());
    }
  }
}

TEST_CASE("adding an edge never lowers the copy count")
{
  rng gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    graph H = random_graph(gen, 8, gen.unit());
    auto missing = H.non_edges();
    if (missing.empty())
      continue;
    auto e = missing[gen.below(missing.size())];
    for (const auto& F : named_patterns())
      REQUIRE(count_copies(F, H.with_edge(e.u, e.v)).copies >= count_copies(F, H).copies);
  }
}

TEST_CASE("totals do not depend on the thread count")
{
  graph H = turan_graph(14, 2).with_edge(0, 1).with_edge(2, 3);
  big_int one = count_injections(cycle(5), H, 1);
  for (int t = 2; t <= 5; ++t)
    CHECK(count_injections(cycle(5), H, t) == one);
  CHECK(count_injections(complete(4), complete(12), 3) == 12 * 11 * 10 * 9);
}

TEST_CASE("patterns above ten vertices are rejected")
{
  CHECK_THROWS_AS(count_injections(cycle(11), complete(12)), std::invalid_argument);
}
