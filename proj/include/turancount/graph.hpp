#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turancount {

using vertex = int;
using vertex_set = std::uint64_t;

inline constexpr int max_vertices = 64;

struct edge {
  vertex u = 0;
  vertex v = 0;

  friend bool operator==(const edge&, const edge&) = default;
  friend auto operator<=>(const edge&, const edge&) = default;
};

inline constexpr vertex_set bit(vertex v) { return vertex_set{1} << v; }

inline constexpr vertex_set first_vertices(int n)
{
  return n >= 64 ? ~vertex_set{0} : (bit(n) - 1);
}

// Raised when a construction needs more than max_vertices vertices.
class capacity_error : public std::length_error {
public:
  using std::length_error::length_error;
};

// Undirected simple graph on at most 64 vertices, one adjacency word per
// vertex.
class graph {
public:
  graph() = default;
  explicit graph(int n);

  int order() const { return n_; }
  int size() const { return m_; }

  vertex_set neighbors(vertex v) const { return adj_[v]; }
  int degree(vertex v) const { return std::popcount(adj_[v]); }
  bool has_edge(vertex u, vertex v) const { return (adj_[u] >> v) & 1U; }
  vertex_set vertices() const { return first_vertices(n_); }

  // Both throw std::invalid_argument on loops, bad indices, or when the
  // edge is already present / absent.
  void add_edge(vertex u, vertex v);
  void remove_edge(vertex u, vertex v);

  graph with_edge(vertex u, vertex v) const;
  graph without_edge(vertex u, vertex v) const;
  // Deletes v and relabels the vertices above it down by one.
  graph without_vertex(vertex v) const;

  std::vector<edge> edges() const;
  std::vector<edge> non_edges() const;
  std::vector<int> degrees() const;

  friend bool operator==(const graph& a, const graph& b)
  {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  void check_pair(vertex u, vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<vertex_set, max_vertices> adj_{};
};

// Ordered class sizes n_1..n_r of a complete multipartite graph.
class part_sizes {
public:
  part_sizes() = default;
  explicit part_sizes(std::vector<int> sizes);

  int classes() const { return static_cast<int>(sizes_.size()); }
  int total() const;
  int operator[](int i) const { return sizes_[i]; }
  const std::vector<int>& values() const { return sizes_; }
  // First vertex index of class i in complete_multipartite().
  vertex offset(int i) const;

  friend bool operator==(const part_sizes&, const part_sizes&) = default;

private:
  std::vector<int> sizes_;
};

// Half-open block of consecutive vertex indices.
struct vertex_range {
  vertex first = 0;
  int count = 0;
};

std::int64_t cross_pair_count(const part_sizes& parts);
std::int64_t turan_number(std::int64_t n, int r);
part_sizes turan_parts(int n, int r);

graph complete_multipartite(const part_sizes& parts);
graph turan_graph(int n, int r);

// Adds the q edges (first+2i, first+2i+1).
graph add_matching(const graph& g, vertex_range block, int q);

graph cycle(int m);
graph complete(int m);
graph k4_minus_edge();
graph petersen();
graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);

// "n m\nu v\n..." text form; parse throws std::invalid_argument.
graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const graph& g);

} // namespace turancount
