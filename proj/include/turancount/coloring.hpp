#pragma once

#include "turancount/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace turancount {

inline constexpr int max_pattern_vertices = 10;

// Color per vertex, labels 1..k.
using coloring = std::vector<int>;

bool is_k_colorable(const graph& g, int k);
int chromatic_number(const graph& g);

// Greedy clique grown from the highest-degree vertex.
std::vector<vertex> greedy_clique(const graph& g);

// Enumerates every proper k-coloring extending a fixed partial assignment,
// in lexicographic order of the color vector. Colors are distinguishable.
//
//   constrained_colorings it(g, 2, {{u, 1}, {v, 1}});
//   while (it.next()) use(it.current());
class constrained_colorings {
public:
  // Throws std::invalid_argument if the fixed map names a bad vertex or
  // color, or gives two adjacent vertices the same color.
  constrained_colorings(const graph& g, int k, std::map<vertex, int> fixed = {});

  bool next();
  const coloring& current() const { return colors_; }
  void restart();

private:
  int next_color(vertex v, int after) const;

  graph g_;
  int k_;
  std::vector<int> fixed_;  // 0 = free
  coloring colors_;
  bool started_ = false;
  bool done_ = false;
};

// Number of vertices per color (index 0 is color 1), skipping u and v.
std::vector<int> class_profile(const coloring& c, int k, vertex u, vertex v);

// A pattern F with chromatic number r+1 and at least one good edge uv,
// i.e. chi(F - uv) = r.
struct critical_pattern {
  graph g;
  int f = 0;
  int chi = 0;
  int r = 0;
  std::vector<edge> good_edges;
  std::uint64_t aut = 1;
};

// Empty optional when no edge deletion lowers the chromatic number.
// Throws std::invalid_argument for edgeless patterns or f > 10.
std::optional<critical_pattern> analyze_pattern(const graph& g);

// Like analyze_pattern, but throws when the pattern is not critical or
// r < 2 (the Turán machinery needs at least two classes).
critical_pattern require_critical(const graph& g);

} // namespace turancount
