#include "turancount/search.hpp"
#include "turancount/counting.hpp"
#include "turancount/extremal.hpp"
#include "turancount/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace turancount {

namespace {

std::int64_t target_edges(const critical_pattern& F, int n, int q)
{
  if (n < 1 || n > max_vertices)
    throw std::invalid_argument("n must lie in 1..64");
  if (q < 0)
    throw std::invalid_argument("q must be non-negative");
  std::int64_t m = turan_number(n, F.r) + q;
  if (m > std::int64_t{n} * (n - 1) / 2)
    throw std::invalid_argument("t_r(n) + q exceeds the number of vertex pairs");
  return m;
}

search_result trivial_result(const critical_pattern& F, int n)
{
  search_result out;
  out.n = n;
  out.best = turan_graph(n, F.r);
  out.edges = out.best.size();
  if (n >= F.f)
    out.c_value = c_exact(n, F);
  return out;
}

chain_result run_chain(const pattern_counter& counter,
                       const search_options& opts, std::int64_t m, std::uint64_t seed,
                       double t_start)
{
  rng gen(seed);
  graph h(opts.n);
  std::vector<edge> pairs = h.non_edges();
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[gen.below(i)]);
  std::vector<edge> present(pairs.begin(), pairs.begin() + m);
  std::vector<edge> absent(pairs.begin() + m, pairs.end());
  for (auto [u, v] : present)
    h.add_edge(u, v);

  chain_result out;
  out.seed = seed;
  big_int current = counter.copies(h).copies;
  out.best = h;
  out.best_copies = current;
  if (absent.empty() || present.empty())
    return out;

  double ratio = opts.iterations > 1 ? std::pow(opts.t_end / t_start, 1.0 / opts.iterations) : 1.0;
  double temperature = t_start;
  for (std::uint64_t step = 0; step < opts.iterations; ++step, temperature *= ratio) {
    std::size_t i = gen.below(present.size());
    std::size_t j = gen.below(absent.size());
    edge out_edge = present[i], in_edge = absent[j];

    big_int loss = counter.copies_through_edge(h, out_edge);
    h.remove_edge(out_edge.u, out_edge.v);
    h.add_edge(in_edge.u, in_edge.v);
    big_int gain = counter.copies_through_edge(h, in_edge);
    big_int delta = gain - loss;

    double draw = gen.unit();
    bool accept = delta <= 0 || draw < std::exp(-static_cast<double>(delta) / temperature);
    if (!accept) {
      h.remove_edge(in_edge.u, in_edge.v);
      h.add_edge(out_edge.u, out_edge.v);
      continue;
    }
    present[i] = in_edge;
    absent[j] = out_edge;
    current += delta;
    ++out.accepted;
    if (h.size() != m)
      throw std::logic_error("search state left the fixed edge count");
    if (current < out.best_copies) {
      out.best_copies = current;
      out.best = h;
    }
  }
  return out;
}

} // namespace

search_result counterexample_search(const critical_pattern& F, const search_options& opts)
{
  std::int64_t m = target_edges(F, opts.n, opts.q);
  if (opts.q == 0)
    return trivial_result(F, opts.n);

  search_result out;
  out.n = opts.n;
  out.q = opts.q;
  out.edges = m;
  out.c_value = c_exact(opts.n, F);
  out.bound = out.c_value * opts.q;

  double t_start = opts.t_start > 0 ? opts.t_start : std::max(1.0, static_cast<double>(out.c_value) / 2);
  if (opts.t_end <= 0 || opts.t_end > t_start)
    throw std::invalid_argument("need 0 < t_end <= t_start");

  pattern_counter counter(F.g);
  int chains = std::max(opts.chains, 1);
  out.chains.resize(chains);
  auto run = [&](int c) {
    out.chains[c] = run_chain(counter, opts, m, opts.seed + c, t_start);
  };
  int threads = std::clamp(opts.threads, 1, chains);
  if (threads == 1) {
    for (int c = 0; c < chains; ++c)
      run(c);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (int c = w; c < chains; c += threads)
          run(c);
      });
  }

  std::size_t best = 0;
  for (std::size_t c = 1; c < out.chains.size(); ++c)
    if (out.chains[c].best_copies < out.chains[best].best_copies)
      best = c;
  out.best = out.chains[best].best;
  out.best_copies = out.chains[best].best_copies;
  out.best_seed = out.chains[best].seed;
  out.below_bound = out.best_copies < out.bound;
  out.graphs_scanned = opts.iterations * chains;
  return out;
}

search_result exhaustive_search(const critical_pattern& F, int n, int q, std::uint64_t cap)
{
  std::int64_t m = target_edges(F, n, q);
  if (q == 0) {
    auto out = trivial_result(F, n);
    out.exhaustive = true;
    return out;
  }
  int pair_count = n * (n - 1) / 2;
  if (pair_count > 63)
    throw std::invalid_argument("exhaustive search supports n <= 11");
  big_int total = binomial(pair_count, static_cast<int>(m));
  if (total > cap)
    throw std::invalid_argument("exhaustive search would visit " + total.str() +
                                " graphs, above the cap of " + std::to_string(cap));

  search_result out;
  out.n = n;
  out.q = q;
  out.edges = m;
  out.exhaustive = true;
  out.c_value = c_exact(n, F);
  out.bound = out.c_value * q;

  std::vector<edge> pairs = graph(n).non_edges();
  pattern_counter counter(F.g);
  bool first = true;
  // Gosper's hack over all m-subsets of the pair list, in increasing mask order.
  std::uint64_t mask = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
  std::uint64_t limit = std::uint64_t{1} << pair_count;
  while (mask < limit) {
    graph h(n);
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      auto [u, v] = pairs[std::countr_zero(rest)];
      h.add_edge(u, v);
    }
    big_int copies = counter.copies(h).copies;
    ++out.graphs_scanned;
    if (first || copies < out.best_copies) {
      out.best_copies = copies;
      out.best = h;
      first = false;
    }
    if (mask == 0)
      break;
    std::uint64_t low = mask & -mask;
    std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  out.below_bound = out.best_copies < out.bound;
  return out;
}

} // namespace turancount
