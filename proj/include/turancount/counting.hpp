#pragma once

#include "turancount/exact.hpp"
#include "turancount/graph.hpp"

#include <cstdint>
#include <vector>

namespace turancount {

struct critical_pattern;

// Subgraph (non-induced) copies of a pattern in a host.
struct copy_count {
  big_int copies;
  big_int injections;
};

namespace detail {

// Mapping order for pattern vertices plus, per position, the earlier
// positions adjacent to it.
struct search_plan {
  std::vector<vertex> order;
  std::vector<std::vector<int>> back;
  std::vector<int> min_degree;

  search_plan() = default;
  search_plan(const graph& pattern, std::vector<vertex> prefix);
};

} // namespace detail

// Precomputed search plans and |Aut| for one pattern; reuse across hosts.
class pattern_counter {
public:
  explicit pattern_counter(const graph& pattern);

  const graph& pattern() const { return pattern_; }
  std::uint64_t aut() const { return aut_; }

  big_int injections(const graph& host, int threads = 1) const;
  big_int injections_through_edge(const graph& host, edge e) const;
  copy_count copies(const graph& host, int threads = 1) const;
  big_int copies_through_edge(const graph& host, edge e) const;

private:
  graph pattern_;
  detail::search_plan full_;
  std::vector<detail::search_plan> anchored_;  // one per oriented pattern edge
  std::uint64_t aut_ = 1;
};

// Edge-preserving injections V(pattern) -> V(host). Zero when the pattern
// has more vertices than the host. `threads` splits the first branching
// level; the total does not depend on it.
big_int count_injections(const graph& pattern, const graph& host, int threads = 1);

// Injections that send some pattern edge onto the host edge e.
big_int count_injections_through_edge(const graph& pattern, const graph& host, edge e);

std::uint64_t automorphism_count(const graph& pattern);

// Throws std::logic_error if the injection count is not divisible by
// |Aut(pattern)|.
copy_count count_copies(const graph& pattern, const graph& host, int threads = 1);

// Copies whose edge set contains e, by anchored backtracking. Throws
// std::invalid_argument when e is not an edge of the host.
big_int copies_through_edge(const graph& pattern, const graph& host, edge e);
big_int copies_through_edge(const critical_pattern& pattern, const graph& host, edge e);

// Same quantity as count_copies(H) - count_copies(H - e).
big_int copies_through_edge_by_deletion(const graph& pattern, const graph& host, edge e);

// count_copies(H) - count_copies(H - v).
big_int copies_through_vertex(const graph& pattern, const graph& host, vertex v, int threads = 1);

} // namespace turancount
