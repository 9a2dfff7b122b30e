#pragma once

#include "turancount/coloring.hpp"
#include "turancount/exact.hpp"
#include "turancount/graph.hpp"

#include <cstdint>
#include <vector>

namespace turancount {

struct search_options {
  int n = 10;
  int q = 1;
  std::uint64_t iterations = 10000;
  std::uint64_t seed = 0;
  int chains = 1;   // chain i runs with seed + i
  int threads = 1;
  // Geometric cooling from t_start to t_end; t_start <= 0 means c(n,F) / 2.
  double t_start = 0;
  double t_end = 0.05;
};

struct chain_result {
  std::uint64_t seed = 0;
  graph best;
  big_int best_copies;
  std::uint64_t accepted = 0;
};

// Lowest #F found among graphs on n vertices with t_r(n) + q edges.
struct search_result {
  int n = 0;
  int q = 0;
  std::int64_t edges = 0;
  graph best;
  big_int best_copies;
  big_int c_value;
  big_int bound;             // q c(n,F)
  bool below_bound = false;  // some visited graph had #F < q c(n,F)
  bool exhaustive = false;
  std::uint64_t best_seed = 0;
  std::uint64_t graphs_scanned = 0;
  std::vector<chain_result> chains;
};

// Simulated annealing over edge swaps at a fixed edge count. Never proves
// that no counterexample exists.
search_result counterexample_search(const critical_pattern& F, const search_options& opts);

inline constexpr std::uint64_t exhaustive_cap = 10'000'000;

// Scans every graph with t_r(n) + q edges on n <= 11 vertices; throws
// std::invalid_argument when more than `cap` edge sets would be visited.
search_result exhaustive_search(const critical_pattern& F, int n, int q,
                                std::uint64_t cap = exhaustive_cap);

} // namespace turancount
