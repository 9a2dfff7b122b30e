#include "turancount/graph.hpp"
#include "turancount/exact.hpp"

#include <numeric>
#include <sstream>

namespace turancount {

rational parse_rational(const std::string& text)
{
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  auto parse_int = [&](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
      i = 1;
    if (i == s.size())
      throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw bad();
    return big_int(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return rational(parse_int(text, true));
  big_int num = parse_int(text.substr(0, slash), true);
  big_int den = parse_int(text.substr(slash + 1), false);
  if (den == 0)
    throw bad();
  return rational(num, den);
}

graph::graph(int n) : n_(n)
{
  if (n < 0 || n > max_vertices)
    throw capacity_error("graph order " + std::to_string(n) + " outside 0..64");
}

void graph::check_pair(vertex u, vertex v) const
{
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("vertex index out of range");
  if (u == v)
    throw std::invalid_argument("self-loop " + std::to_string(u));
}

void graph::add_edge(vertex u, vertex v)
{
  check_pair(u, v);
  if (has_edge(u, v))
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " already present");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++m_;
}

void graph::remove_edge(vertex u, vertex v)
{
  check_pair(u, v);
  if (!has_edge(u, v))
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " not present");
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
  --m_;
}

graph graph::with_edge(vertex u, vertex v) const
{
  graph g = *this;
  g.add_edge(u, v);
  return g;
}

graph graph::without_edge(vertex u, vertex v) const
{
  graph g = *this;
  g.remove_edge(u, v);
  return g;
}

graph graph::without_vertex(vertex v) const
{
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex index out of range");
  graph g(n_ - 1);
  for (auto [a, b] : edges()) {
    if (a == v || b == v)
      continue;
    g.add_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return g;
}

std::vector<edge> graph::edges() const
{
  std::vector<edge> out;
  out.reserve(m_);
  for (vertex u = 0; u < n_; ++u)
    for (vertex_set rest = adj_[u] & ~first_vertices(u + 1); rest; rest &= rest - 1)
      out.push_back({u, std::countr_zero(rest)});
  return out;
}

std::vector<edge> graph::non_edges() const
{
  std::vector<edge> out;
  for (vertex u = 0; u < n_; ++u)
    for (vertex_set rest = ~adj_[u] & vertices() & ~first_vertices(u + 1); rest; rest &= rest - 1)
      out.push_back({u, std::countr_zero(rest)});
  return out;
}

std::vector<int> graph::degrees() const
{
  std::vector<int> out(n_);
  for (vertex v = 0; v < n_; ++v)
    out[v] = degree(v);
  return out;
}

part_sizes::part_sizes(std::vector<int> sizes) : sizes_(std::move(sizes))
{
  if (sizes_.size() < 2)
    throw std::invalid_argument("a partition needs at least 2 classes");
  for (int s : sizes_)
    if (s < 0)
      throw std::invalid_argument("negative class size");
}

int part_sizes::total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

vertex part_sizes::offset(int i) const
{
  return std::accumulate(sizes_.begin(), sizes_.begin() + i, 0);
}

std::int64_t cross_pair_count(const part_sizes& parts)
{
  std::int64_t sum = 0, square_sum = 0;
  for (int s : parts.values()) {
    sum += s;
    square_sum += std::int64_t{s} * s;
  }
  return (sum * sum - square_sum) / 2;
}

std::int64_t turan_number(std::int64_t n, int r)
{
  if (n < 0 || r < 2)
    throw std::invalid_argument("turan_number needs n >= 0 and r >= 2");
  std::int64_t total = 0;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      total += ((n + i - 1) / r) * ((n + j - 1) / r);
  return total;
}

part_sizes turan_parts(int n, int r)
{
  if (n < 0 || r < 2)
    throw std::invalid_argument("turan_parts needs n >= 0 and r >= 2");
  std::vector<int> sizes(r, n / r);
  for (int i = 0; i < n % r; ++i)
    ++sizes[i];
  return part_sizes(std::move(sizes));
}

graph complete_multipartite(const part_sizes& parts)
{
  int n = parts.total();
  if (n > max_vertices)
    throw capacity_error("complete multipartite graph needs " + std::to_string(n) +
                         " > 64 vertices");
  graph g(n);
  vertex start = 0;
  for (int i = 0; i < parts.classes(); ++i) {
    vertex end = start + parts[i];
    for (vertex u = start; u < end; ++u)
      for (vertex v = end; v < n; ++v)
        g.add_edge(u, v);
    start = end;
  }
  return g;
}

graph turan_graph(int n, int r) { return complete_multipartite(turan_parts(n, r)); }

graph add_matching(const graph& g, vertex_range block, int q)
{
  if (q < 0)
    throw std::invalid_argument("negative matching size");
  if (block.first < 0 || block.first + block.count > g.order())
    throw std::invalid_argument("vertex block outside the graph");
  if (block.count < 2 * q)
    throw std::invalid_argument("block too small: " + std::to_string(block.count) +
                                " vertices cannot hold a matching of size " +
                                std::to_string(q));
  graph out = g;
  for (int i = 0; i < q; ++i)
    out.add_edge(block.first + 2 * i, block.first + 2 * i + 1);
  return out;
}

graph cycle(int m)
{
  if (m < 3)
    throw std::invalid_argument("cycle length must be >= 3");
  graph g(m);
  for (vertex v = 0; v < m; ++v)
    g.add_edge(v, (v + 1) % m);
  return g;
}

graph complete(int m)
{
  graph g(m);
  for (vertex u = 0; u < m; ++u)
    for (vertex v = u + 1; v < m; ++v)
      g.add_edge(u, v);
  return g;
}

graph k4_minus_edge() { return complete(4).without_edge(2, 3); }

graph petersen()
{
  graph g(10);
  for (vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs)
{
  graph g(n);
  for (auto [u, v] : pairs)
    g.add_edge(u, v);
  return g;
}

graph parse_edge_list(const std::string& text)
{
  std::istringstream in(text);
  long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("edge list must start with 'n m'");
  if (n > max_vertices)
    throw capacity_error("edge list declares " + std::to_string(n) + " > 64 vertices");
  graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list truncated after " + std::to_string(i) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list vertex out of range");
    g.add_edge(static_cast<vertex>(u), static_cast<vertex>(v));
  }
  std::string extra;
  if (in >> extra)
    throw std::invalid_argument("trailing data after " + std::to_string(m) + " edges");
  return g;
}

std::string serialize_edge_list(const graph& g)
{
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

} // namespace turancount
