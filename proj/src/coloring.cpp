#include "turancount/coloring.hpp"
#include "turancount/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace turancount {

namespace {

// Backtracking over a static vertex order; classes[c] holds the vertices
// already given color c.
bool extend_coloring(const graph& g, const std::vector<vertex>& order, std::size_t pos,
                     std::vector<vertex_set>& classes, int used, int k)
{
  if (pos == order.size())
    return true;
  vertex v = order[pos];
  int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if (classes[c] & g.neighbors(v))
      continue;
    classes[c] |= bit(v);
    bool ok = extend_coloring(g, order, pos + 1, classes, std::max(used, c + 1), k);
    classes[c] &= ~bit(v);
    if (ok)
      return true;
  }
  return false;
}

int greedy_color_count(const graph& g, const std::vector<vertex>& order)
{
  std::vector<vertex_set> classes;
  for (vertex v : order) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](vertex_set cls) { return (cls & g.neighbors(v)) == 0; });
    if (it == classes.end())
      classes.push_back(bit(v));
    else
      *it |= bit(v);
  }
  return static_cast<int>(classes.size());
}

// Clique vertices first, then the rest by descending degree.
std::vector<vertex> search_order(const graph& g, const std::vector<vertex>& clique)
{
  vertex_set in_clique = 0;
  for (vertex v : clique)
    in_clique |= bit(v);
  std::vector<vertex> rest;
  for (vertex v = 0; v < g.order(); ++v)
    if (!(in_clique & bit(v)))
      rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(),
                   [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<vertex> order = clique;
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

} // namespace

std::vector<vertex> greedy_clique(const graph& g)
{
  if (g.order() == 0)
    return {};
  std::vector<vertex> by_degree(g.order());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<vertex> clique;
  vertex_set candidates = g.vertices();
  for (vertex v : by_degree) {
    if (!(candidates & bit(v)))
      continue;
    clique.push_back(v);
    candidates &= g.neighbors(v);
  }
  return clique;
}

bool is_k_colorable(const graph& g, int k)
{
  if (g.order() == 0)
    return true;
  if (k <= 0)
    return false;
  auto clique = greedy_clique(g);
  if (static_cast<int>(clique.size()) > k)
    return false;
  auto order = search_order(g, clique);
  // The clique is precolored 0..w-1, which also breaks color symmetry.
  std::vector<vertex_set> classes(k, 0);
  for (std::size_t i = 0; i < clique.size(); ++i)
    classes[i] = bit(clique[i]);
  return extend_coloring(g, order, clique.size(), classes, static_cast<int>(clique.size()), k);
}

int chromatic_number(const graph& g)
{
  if (g.order() == 0)
    return 0;
  auto clique = greedy_clique(g);
  int upper = greedy_color_count(g, search_order(g, clique));
  for (int k = static_cast<int>(clique.size()); k < upper; ++k)
    if (is_k_colorable(g, k))
      return k;
  return upper;
}

constrained_colorings::constrained_colorings(const graph& g, int k, std::map<vertex, int> fixed)
    : g_(g), k_(k), fixed_(g.order(), 0), colors_(g.order(), 0)
{
  if (k < 0)
    throw std::invalid_argument("negative color count");
  for (auto [v, c] : fixed) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("fixed vertex out of range");
    if (c < 1 || c > k)
      throw std::invalid_argument("fixed color outside 1..k");
    fixed_[v] = c;
  }
  for (auto [u, v] : g.edges())
    if (fixed_[u] != 0 && fixed_[u] == fixed_[v])
      throw std::invalid_argument("inconsistent fixed map: adjacent vertices " +
                                  std::to_string(u) + " and " + std::to_string(v) +
                                  " share color " + std::to_string(fixed_[u]));
}

int constrained_colorings::next_color(vertex v, int after) const
{
  for (int c = after + 1; c <= k_; ++c) {
    if (fixed_[v] != 0 && fixed_[v] != c)
      continue;
    bool clash = false;
    for (vertex_set earlier = g_.neighbors(v) & first_vertices(v); earlier; earlier &= earlier - 1)
      if (colors_[std::countr_zero(earlier)] == c) {
        clash = true;
        break;
      }
    if (!clash)
      return c;
  }
  return 0;
}

bool constrained_colorings::next()
{
  if (done_)
    return false;
  int n = g_.order();
  int i;
  if (!started_) {
    started_ = true;
    if (n == 0)
      return true;
    i = 0;
    colors_[0] = 0;
  } else {
    if (n == 0) {
      done_ = true;
      return false;
    }
    i = n - 1;
  }
  while (i >= 0) {
    int c = next_color(i, colors_[i]);
    if (c == 0) {
      colors_[i] = 0;
      --i;
      continue;
    }
    colors_[i] = c;
    if (i == n - 1)
      return true;
    ++i;
    colors_[i] = 0;
  }
  done_ = true;
  return false;
}

void constrained_colorings::restart()
{
  std::fill(colors_.begin(), colors_.end(), 0);
  started_ = done_ = false;
}

std::vector<int> class_profile(const coloring& c, int k, vertex u, vertex v)
{
  std::vector<int> counts(k, 0);
  for (vertex w = 0; w < static_cast<vertex>(c.size()); ++w)
    if (w != u && w != v)
      ++counts[c[w] - 1];
  return counts;
}

std::optional<critical_pattern> analyze_pattern(const graph& g)
{
  if (g.size() == 0)
    throw std::invalid_argument("pattern has no edges");
  if (g.order() > max_pattern_vertices)
    throw std::invalid_argument("pattern has " + std::to_string(g.order()) +
                                " vertices; criticality analysis supports at most 10");
  critical_pattern p;
  p.g = g;
  p.f = g.order();
  p.chi = chromatic_number(g);
  p.r = p.chi - 1;
  for (auto e : g.edges())
    if (chromatic_number(g.without_edge(e.u, e.v)) == p.r)
      p.good_edges.push_back(e);
  if (p.good_edges.empty())
    return std::nullopt;
  p.aut = automorphism_count(g);
  return p;
}

critical_pattern require_critical(const graph& g)
{
  auto p = analyze_pattern(g);
  if (!p)
    throw std::invalid_argument("pattern is not r-critical");
  if (p->r < 2)
    throw std::invalid_argument("pattern is " + std::to_string(p->r) +
                                "-critical; at least r = 2 is required");
  return *p;
}

} // namespace turancount
