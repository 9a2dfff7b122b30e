#include "turancount/analyzer.hpp"
#include "turancount/counting.hpp"
#include "turancount/extremal.hpp"
#include "turancount/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace turancount {

partition::partition(std::vector<int> assignment, int r) : assignment_(std::move(assignment)), r_(r)
{
  if (r < 1)
    throw std::invalid_argument("partition needs at least one class");
  for (int c : assignment_)
    if (c < 0 || c >= r)
      throw std::invalid_argument("class index " + std::to_string(c) + " outside 0.." +
                                  std::to_string(r - 1));
}

part_sizes partition::sizes() const
{
  std::vector<int> out(r_, 0);
  for (int c : assignment_)
    ++out[c];
  return part_sizes(std::move(out));
}

vertex_set partition::members(int c) const
{
  vertex_set out = 0;
  for (vertex v = 0; v < static_cast<vertex>(assignment_.size()); ++v)
    if (assignment_[v] == c)
      out |= bit(v);
  return out;
}

partition block_partition(const part_sizes& parts)
{
  std::vector<int> assignment;
  for (int c = 0; c < parts.classes(); ++c)
    assignment.insert(assignment.end(), parts[c], c);
  return partition(std::move(assignment), parts.classes());
}

std::int64_t cross_edge_count(const graph& h, const partition& p)
{
  std::int64_t cross = 0;
  for (auto [u, v] : h.edges())
    if (p.class_of(u) != p.class_of(v))
      ++cross;
  return cross;
}

std::string to_string(partition_source s)
{
  return s == partition_source::exhaustive ? "exhaustive" : "local_search";
}

namespace {

struct best_move {
  int gain = 0;
  vertex v = -1;
  int target = -1;
};

best_move find_best_move(const graph& h, const partition& p)
{
  std::vector<vertex_set> members(p.classes());
  for (int c = 0; c < p.classes(); ++c)
    members[c] = p.members(c);
  best_move best;
  for (vertex v = 0; v < h.order(); ++v) {
    int own = std::popcount(h.neighbors(v) & members[p.class_of(v)]);
    for (int c = 0; c < p.classes(); ++c) {
      if (c == p.class_of(v))
        continue;
      int gain = own - std::popcount(h.neighbors(v) & members[c]);
      if (gain > best.gain)
        best = {gain, v, c};
    }
  }
  return best;
}

} // namespace

partition local_search(const graph& h, partition start)
{
  if (static_cast<int>(start.assignment().size()) != h.order())
    throw std::invalid_argument("partition does not cover the host");
  for (;;) {
    auto move = find_best_move(h, start);
    if (move.v < 0)
      return start;
    auto assignment = start.assignment();
    assignment[move.v] = move.target;
    start = partition(std::move(assignment), start.classes());
  }
}

bool is_local_optimum(const graph& h, const partition& p) { return find_best_move(h, p).v < 0; }

partition_result max_r_partition(const graph& h, int r, std::uint64_t seed, int restarts, int threads)
{
  if (r < 2)
    throw std::invalid_argument("max_r_partition needs r >= 2");
  restarts = std::max(restarts, 1);
  std::vector<partition_result> results(restarts);
  auto run = [&](int i) {
    rng gen(seed + i);
    std::vector<int> assignment(h.order());
    for (int& c : assignment)
      c = static_cast<int>(gen.below(r));
    auto p = local_search(h, partition(std::move(assignment), r));
    results[i] = {p, cross_edge_count(h, p), partition_source::local_search, seed + i};
  };
  threads = std::clamp(threads, 1, restarts);
  if (threads == 1) {
    for (int i = 0; i < restarts; ++i)
      run(i);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (int i = w; i < restarts; i += threads)
          run(i);
      });
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].cross > results[best].cross)
      best = i;
  return results[best];
}

partition_result exhaustive_max_cut(const graph& h)
{
  int n = h.order();
  if (n > 16)
    throw std::invalid_argument("exhaustive max cut limited to n <= 16");
  // Vertex 0 stays in class 0; mask holds the class-1 vertices.
  vertex_set best_mask = 0;
  std::int64_t best_cross = -1;
  vertex_set all = h.vertices();
  for (vertex_set half = 0; half < (n > 0 ? vertex_set{1} << (n - 1) : 1); ++half) {
    vertex_set mask = half << 1;
    std::int64_t cross = 0;
    for (vertex_set rest = mask; rest; rest &= rest - 1)
      cross += std::popcount(h.neighbors(std::countr_zero(rest)) & all & ~mask);
    if (cross > best_cross) {
      best_cross = cross;
      best_mask = mask;
    }
  }
  std::vector<int> assignment(n);
  for (vertex v = 0; v < n; ++v)
    assignment[v] = (best_mask >> v) & 1U;
  return {partition(std::move(assignment), 2), best_cross, partition_source::exhaustive, 0};
}

decomposition decompose(const graph& h, const partition& p)
{
  if (static_cast<int>(p.assignment().size()) != h.order())
    throw std::invalid_argument("partition does not cover the host");
  decomposition d;
  for (vertex u = 0; u < h.order(); ++u)
    for (vertex v = u + 1; v < h.order(); ++v) {
      bool same = p.class_of(u) == p.class_of(v);
      if (h.has_edge(u, v))
        (same ? d.bad : d.good).push_back({u, v});
      else if (!same)
        d.missing.push_back({u, v});
    }
  std::int64_t t = turan_number(h.order(), p.classes());
  d.q = h.size() - t;
  d.s = t - static_cast<std::int64_t>(d.good.size());
  return d;
}

bad_edge_split classify_bad_edges(const graph& h, const partition& p, const critical_pattern& F,
                                  const rational& epsilon)
{
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  auto d = decompose(h, p);
  bad_edge_split out;
  if (d.bad.empty())
    return out;
  rational threshold = (1 - epsilon) * rational(c_exact(h.order(), F));
  pattern_counter counter(F.g);
  for (auto e : d.bad)
    (rational(counter.copies_through_edge(h, e)) > threshold ? out.rich : out.poor).push_back(e);
  return out;
}

audit_report audit_theorem(const graph& h, const critical_pattern& F, const audit_options& opts)
{
  if (opts.epsilon <= 0 || opts.epsilon >= 1)
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  audit_report rep;
  rep.n = h.order();
  rep.r = F.r;

  partition_result part = (F.r == 2 && rep.n <= 16)
                              ? exhaustive_max_cut(h)
                              : max_r_partition(h, F.r, opts.seed, opts.restarts, opts.threads);
  rep.source = part.source;
  auto d = decompose(h, part.best);
  rep.q = d.q;
  rep.s = d.s;

  pattern_counter counter(F.g);
  rep.copies = counter.copies(h, opts.threads).copies;
  for (vertex v = 0; v < rep.n; ++v) {
    big_int through = rep.copies - counter.copies(h.without_vertex(v), opts.threads).copies;
    rep.max_vertex_copies = std::max(rep.max_vertex_copies, through);
  }

  std::optional<big_int> c;
  try {
    c = c_exact(rep.n, F);
  } catch (const std::invalid_argument&) {
    rep.note = "c(n,F) undefined for n = " + std::to_string(rep.n);
  }

  if (c) {
    rational threshold = (1 - opts.epsilon) * rational(*c);
    for (auto e : h.edges())
      if (rational(counter.copies_through_edge(h, e)) >= threshold)
        ++rep.rich_edges;
  }

  if (rep.q < 0) {
    rep.note = "below Turán threshold";
  } else if (rep.q == 0) {
    rep.note = "at Turán threshold";
  } else if (c) {
    rep.bound = *c * rep.q;
    rep.pass = rep.copies >= rep.bound;
    if (!rep.pass)
      rep.note = "fewer than q c(n,F) copies; n may be below the theorem's range";
  }
  return rep;
}

namespace {

nlohmann::ordered_json exact_json(const big_int& x)
{
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

} // namespace

std::string audit_json(const audit_report& rep)
{
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["q"] = rep.q;
  j["s"] = rep.s;
  j["copies"] = exact_json(rep.copies);
  j["bound"] = exact_json(rep.bound);
  j["pass"] = rep.pass;
  j["max_vertex_copies"] = exact_json(rep.max_vertex_copies);
  j["rich_edges"] = rep.rich_edges;
  j["partition_source"] = to_string(rep.source);
  return j.dump();
}

std::string audit_text(const audit_report& rep)
{
  std::ostringstream out;
  out << "n = " << rep.n << ", r = " << rep.r << ", q = " << rep.q << ", s = " << rep.s << "\n"
      << "copies = " << rep.copies << ", bound q*c(n,F) = " << rep.bound << "\n"
      << "max copies through a vertex = " << rep.max_vertex_copies << "\n"
      << "rich edges = " << rep.rich_edges << "\n"
      << "partition: " << to_string(rep.source) << "\n"
      << (rep.pass ? "PASS" : "FAIL");
  if (!rep.note.empty())
    out << " (" << rep.note << ")";
  out << "\n";
  return out.str();
}

} // namespace turancount
