#pragma once

#include "turancount/coloring.hpp"
#include "turancount/exact.hpp"
#include "turancount/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace turancount {

class partition {
public:
  partition() = default;
  // Throws std::invalid_argument on a class index outside 0..r-1.
  partition(std::vector<int> assignment, int r);

  int classes() const { return r_; }
  int class_of(vertex v) const { return assignment_[v]; }
  const std::vector<int>& assignment() const { return assignment_; }
  part_sizes sizes() const;
  vertex_set members(int c) const;

  friend bool operator==(const partition&, const partition&) = default;

private:
  std::vector<int> assignment_;
  int r_ = 0;
};

// Natural partition of a complete multipartite layout: contiguous blocks.
partition block_partition(const part_sizes& parts);

std::int64_t cross_edge_count(const graph& h, const partition& p);

enum class partition_source { local_search, exhaustive };

std::string to_string(partition_source s);

struct partition_result {
  partition best;
  std::int64_t cross = 0;
  partition_source source = partition_source::local_search;
  std::uint64_t winning_seed = 0;
};

// Steepest single-vertex moves until no move adds a cross edge. Ties go to
// the lowest vertex, then the lowest target class.
partition local_search(const graph& h, partition start);

// True when no single-vertex move raises the cross edge count.
bool is_local_optimum(const graph& h, const partition& p);

// Multi-restart local search from seeded random assignments; restart i uses
// seed + i and the best cross count wins, lowest seed on ties.
partition_result max_r_partition(const graph& h, int r, std::uint64_t seed, int restarts = 32,
                                 int threads = 1);

// Exact maximum cut by scanning all 2^(n-1) bipartitions; n <= 16.
partition_result exhaustive_max_cut(const graph& h);

// Bad (inside a class), good (across) and missing (absent cross pairs).
struct decomposition {
  std::vector<edge> bad;
  std::vector<edge> good;
  std::vector<edge> missing;
  std::int64_t q = 0;  // |H| - t_r(n)
  std::int64_t s = 0;  // t_r(n) - |G|
};

decomposition decompose(const graph& h, const partition& p);

struct bad_edge_split {
  std::vector<edge> rich;  // F(e) > (1 - eps) c(n,F)
  std::vector<edge> poor;
};

bad_edge_split classify_bad_edges(const graph& h, const partition& p, const critical_pattern& F,
                                  const rational& epsilon);

struct audit_options {
  rational epsilon{1, 10};
  std::uint64_t seed = 0;
  int restarts = 32;
  int threads = 1;
};

struct audit_report {
  int n = 0;
  int r = 0;
  std::int64_t q = 0;
  std::int64_t s = 0;
  big_int copies;
  big_int bound;  // q c(n,F), zero when the theorem does not apply
  bool pass = true;
  big_int max_vertex_copies;
  std::int64_t rich_edges = 0;  // edges with F(e) >= (1 - eps) c(n,F)
  partition_source source = partition_source::local_search;
  std::string note;
};

// Checks #F >= q c(n,F) on a concrete host. Report-only: failures at small
// n are findings.
audit_report audit_theorem(const graph& h, const critical_pattern& F, const audit_options& opts = {});

// {n, r, q, s, copies, bound, pass, max_vertex_copies, rich_edges,
// partition_source}, keys in that order.
std::string audit_json(const audit_report& rep);
std::string audit_text(const audit_report& rep);

} // namespace turancount
