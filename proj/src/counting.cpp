#include "turancount/counting.hpp"
#include "turancount/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace turancount {

namespace detail {

// The given prefix, then repeatedly the vertex with the most placed
// neighbors (ties: higher degree, then lower index).
search_plan::search_plan(const graph& pattern, std::vector<vertex> prefix) : order(std::move(prefix))
{
  int f = pattern.order();
  vertex_set placed = 0;
  for (vertex v : order)
    placed |= bit(v);
  while (static_cast<int>(order.size()) < f) {
    vertex best = -1;
    int best_links = -1, best_degree = -1;
    for (vertex v = 0; v < f; ++v) {
      if (placed & bit(v))
        continue;
      int links = std::popcount(pattern.neighbors(v) & placed);
      int deg = pattern.degree(v);
      if (links > best_links || (links == best_links && deg > best_degree)) {
        best = v;
        best_links = links;
        best_degree = deg;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  back.resize(f);
  min_degree.resize(f);
  for (int i = 0; i < f; ++i) {
    min_degree[i] = pattern.degree(order[i]);
    for (int j = 0; j < i; ++j)
      if (pattern.has_edge(order[i], order[j]))
        back[i].push_back(j);
  }
}

} // namespace detail

namespace {

using accumulator = unsigned __int128;

big_int to_big(accumulator x)
{
  big_int hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(x);
}

class injection_counter {
public:
  injection_counter(const detail::search_plan& plan, const graph& host)
      : plan_(plan), host_(host), mapped_(plan.order.size(), -1), eligible_(plan.order.size(), 0)
  {
    for (std::size_t i = 0; i < plan.order.size(); ++i)
      for (vertex x = 0; x < host.order(); ++x)
        if (host.degree(x) >= plan.min_degree[i])
          eligible_[i] |= bit(x);
  }

  vertex_set candidates(int pos, vertex_set used) const
  {
    vertex_set cand = eligible_[pos] & ~used;
    for (int j : plan_.back[pos])
      cand &= host_.neighbors(mapped_[j]);
    return cand;
  }

  bool eligible(int pos, vertex x) const { return (eligible_[pos] >> x) & 1U; }
  void fix(int pos, vertex x) { mapped_[pos] = x; }

  accumulator extend(int pos, vertex_set used)
  {
    int f = static_cast<int>(mapped_.size());
    if (pos == f)
      return 1;
    vertex_set cand = candidates(pos, used);
    if (pos == f - 1)
      return std::popcount(cand);
    accumulator total = 0;
    for (; cand; cand &= cand - 1) {
      vertex x = std::countr_zero(cand);
      mapped_[pos] = x;
      total += extend(pos + 1, used | bit(x));
    }
    return total;
  }

private:
  const detail::search_plan& plan_;
  const graph& host_;
  std::vector<vertex> mapped_;
  std::vector<vertex_set> eligible_;
};

void check_host_edge(const graph& host, edge e)
{
  if (e.u < 0 || e.v < 0 || e.u >= host.order() || e.v >= host.order() ||
      !host.has_edge(e.u, e.v))
    throw std::invalid_argument("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") is not an edge of the host");
}

big_int exact_quotient(const big_int& injections, std::uint64_t aut)
{
  if (injections % aut != 0)
    throw std::logic_error("injection count " + injections.str() +
                           " not divisible by |Aut| = " + std::to_string(aut));
  return injections / aut;
}

} // namespace

pattern_counter::pattern_counter(const graph& pattern) : pattern_(pattern)
{
  if (pattern.order() > max_pattern_vertices)
    throw std::invalid_argument("pattern has " + std::to_string(pattern.order()) +
                                " vertices; counting supports at most 10");
  full_ = detail::search_plan(pattern, {});
  for (auto [a, b] : pattern.edges()) {
    anchored_.emplace_back(pattern, std::vector<vertex>{a, b});
    anchored_.emplace_back(pattern, std::vector<vertex>{b, a});
  }
  // An edge-preserving bijection of a finite graph onto itself is an
  // automorphism, so self-injections are exactly Aut.
  aut_ = static_cast<std::uint64_t>(injections(pattern));
}

big_int pattern_counter::injections(const graph& host, int threads) const
{
  int f = pattern_.order();
  if (f > host.order())
    return 0;
  if (f == 0)
    return 1;

  std::vector<vertex> roots;
  {
    injection_counter probe(full_, host);
    for (vertex_set c = probe.candidates(0, 0); c; c &= c - 1)
      roots.push_back(std::countr_zero(c));
  }
  threads = std::clamp(threads, 1, std::max(1, static_cast<int>(roots.size())));

  std::vector<accumulator> partial(threads, 0);
  auto work = [&](int worker) {
    injection_counter counter(full_, host);
    for (std::size_t i = worker; i < roots.size(); i += threads) {
      counter.fix(0, roots[i]);
      partial[worker] += counter.extend(1, bit(roots[i]));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back(work, w);
  }
  big_int total = 0;
  for (auto p : partial)
    total += to_big(p);
  return total;
}

big_int pattern_counter::injections_through_edge(const graph& host, edge e) const
{
  check_host_edge(host, e);
  if (pattern_.order() > host.order())
    return 0;
  accumulator total = 0;
  for (const auto& plan : anchored_) {
    injection_counter counter(plan, host);
    if (!counter.eligible(0, e.u) || !counter.eligible(1, e.v))
      continue;
    counter.fix(0, e.u);
    counter.fix(1, e.v);
    total += counter.extend(2, bit(e.u) | bit(e.v));
  }
  return to_big(total);
}

copy_count pattern_counter::copies(const graph& host, int threads) const
{
  copy_count out;
  out.injections = injections(host, threads);
  out.copies = exact_quotient(out.injections, aut_);
  return out;
}

big_int pattern_counter::copies_through_edge(const graph& host, edge e) const
{
  return exact_quotient(injections_through_edge(host, e), aut_);
}

big_int count_injections(const graph& pattern, const graph& host, int threads)
{
  return pattern_counter(pattern).injections(host, threads);
}

big_int count_injections_through_edge(const graph& pattern, const graph& host, edge e)
{
  return pattern_counter(pattern).injections_through_edge(host, e);
}

std::uint64_t automorphism_count(const graph& pattern) { return pattern_counter(pattern).aut(); }

copy_count count_copies(const graph& pattern, const graph& host, int threads)
{
  return pattern_counter(pattern).copies(host, threads);
}

big_int copies_through_edge(const graph& pattern, const graph& host, edge e)
{
  return pattern_counter(pattern).copies_through_edge(host, e);
}

big_int copies_through_edge(const critical_pattern& pattern, const graph& host, edge e)
{
  return exact_quotient(pattern_counter(pattern.g).injections_through_edge(host, e), pattern.aut);
}

big_int copies_through_edge_by_deletion(const graph& pattern, const graph& host, edge e)
{
  check_host_edge(host, e);
  pattern_counter counter(pattern);
  return counter.copies(host).copies - counter.copies(host.without_edge(e.u, e.v)).copies;
}

big_int copies_through_vertex(const graph& pattern, const graph& host, vertex v, int threads)
{
  if (v < 0 || v >= host.order())
    throw std::invalid_argument("vertex out of range");
  pattern_counter counter(pattern);
  return counter.copies(host, threads).copies -
         counter.copies(host.without_vertex(v), threads).copies;
}

} // namespace turancount
