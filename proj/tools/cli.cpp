#include "cli.hpp"

#include "turancount/analyzer.hpp"
#include "turancount/coloring.hpp"
#include "turancount/counting.hpp"
#include "turancount/extremal.hpp"
#include "turancount/graph6.hpp"
#include "turancount/pattern.hpp"
#include "turancount/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace turancount::cli {

namespace {

using json = nlohmann::ordered_json;

struct global_options {
  std::string format = "text";
  int threads = 0;
  std::string out_path;
  std::uint64_t seed = 0;
};

int default_threads()
{
  if (const char* env = std::getenv("TURANCOUNT_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t > 0)
        return t;
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

json exact(const big_int& x)
{
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

json edge_list_json(const std::vector<edge>& edges)
{
  json arr = json::array();
  for (auto [u, v] : edges)
    arr.push_back({u, v});
  return arr;
}

bool is_odd_cycle(const graph& g)
{
  if (g.order() < 3 || g.order() % 2 == 0 || g.size() != g.order())
    return false;
  for (vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2)
      return false;
  // 2-regular and connected means a single cycle.
  vertex_set seen = bit(0), frontier = bit(0);
  while (frontier) {
    vertex_set next = 0;
    for (vertex_set f = frontier; f; f &= f - 1)
      next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

bool is_k4_minus_edge(const graph& g)
{
  if (g.order() != 4 || g.size() != 5)
    return false;
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d == std::vector<int>{2, 2, 3, 3};
}

std::optional<big_int> closed_form_for(const graph& g, int n)
{
  if (is_odd_cycle(g) && n >= g.order())
    return closed_form_odd_cycle(n, (g.order() - 1) / 2);
  if (is_k4_minus_edge(g) && n >= 4)
    return closed_form_k4me(n);
  return std::nullopt;
}

std::string show(const std::optional<big_int>& x) { return x ? x->str() : "n/a"; }

std::string polynomial_text(const count_polynomial& p)
{
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const rational& c = p.coeffs[i];
    if (c == 0)
      continue;
    bool negative = c < 0;
    rational mag = negative ? rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit)
      out += to_string(mag);
    if (i > 0)
      out += (unit ? "" : " ") + std::string("n") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out.empty() ? "0" : out;
}

struct command_context {
  global_options& global;
  std::ostringstream& out;
};

int cmd_critical(command_context ctx, const std::string& spec)
{
  graph g = parse_pattern(spec);
  auto p = analyze_pattern(g);
  int chi = p ? p->chi : chromatic_number(g);
  if (ctx.global.format == "json") {
    json j;
    j["pattern"] = pattern_name(spec);
    j["f"] = g.order();
    j["chi"] = chi;
    j["critical"] = p.has_value();
    if (p) {
      j["r"] = p->r;
      j["good_edges"] = edge_list_json(p->good_edges);
      j["aut"] = p->aut;
    }
    ctx.out << j.dump() << "\n";
  } else if (ctx.global.format == "csv") {
    ctx.out << "pattern,f,chi,critical,r,good_edges,aut\n"
            << pattern_name(spec) << "," << g.order() << "," << chi << "," << (p ? "true" : "false")
            << "," << (p ? std::to_string(p->r) : "") << ","
            << (p ? std::to_string(p->good_edges.size()) : "") << ","
            << (p ? std::to_string(p->aut) : "") << "\n";
  } else if (p) {
    ctx.out << "r-critical: r=" << p->r << ", good edges: " << p->good_edges.size()
            << ", Aut=" << p->aut << "\n";
  } else {
    ctx.out << "not r-critical: chi=" << chi << "\n";
  }
  return exit_ok;
}

int cmd_cnf(command_context ctx, const std::string& spec, std::vector<int> ns, bool verbose)
{
  critical_pattern F = require_critical(parse_pattern(spec));
  std::string name = pattern_name(spec);
  std::optional<count_polynomial> poly;
  if (ctx.global.format != "text") {
    try {
      poly = interpolate_count_polynomial(F);
    } catch (const capacity_error&) {
    }
  }
  bool mismatch = false;
  json rows = json::array();
  if (ctx.global.format == "csv")
    ctx.out << "n,F,c_exact,formula,closed_form,alpha\n";
  for (int n : ns) {
    big_int c = c_exact(n, F);
    std::optional<coloring_sum> formula;
    if (n % F.r == 0 && n >= 2 * F.r)
      formula = coloring_formula(part_sizes(std::vector<int>(F.r, n / F.r)), F);
    auto closed = closed_form_for(F.g, n);
    bool agree = (!formula || formula->copies == c) && (!closed || *closed == c);
    mismatch |= !agree;
    std::optional<big_int> formula_value;
    if (formula)
      formula_value = formula->copies;

    if (ctx.global.format == "json") {
      json j;
      j["n"] = n;
      j["F"] = name;
      j["c_exact"] = exact(c);
      j["formula"] = formula ? exact(formula->copies) : json(nullptr);
      j["closed_form"] = closed ? exact(*closed) : json(nullptr);
      j["alpha"] = poly ? json(to_string(poly->alpha)) : json(nullptr);
      j["coloring_sum"] = formula ? exact(formula->raw) : json(nullptr);
      j["aut"] = F.aut;
      j["agree"] = agree;
      rows.push_back(j);
    } else if (ctx.global.format == "csv") {
      ctx.out << n << "," << name << "," << c << "," << (formula ? formula->copies.str() : "") << ","
              << (closed ? closed->str() : "") << "," << (poly ? to_string(poly->alpha) : "") << "\n";
    } else {
      ctx.out << "c(" << n << ", " << name << ") = " << c << " (formula: " << show(formula_value)
              << ", closed form: " << show(closed) << ")\n";
      if (verbose && formula) {
        // The coloring sum counts injections; only |Aut(F)| turns it into copies.
        big_int pow2 = big_int(1) << (F.f * F.f);
        ctx.out << "  coloring sum = " << formula->raw << ", |Aut(F)| = " << F.aut
                << ", sum / 2^(f^2) = " << to_string(rational(formula->raw, pow2))
                << " (ratio to c: " << to_string(rational(formula->raw, pow2) / rational(c)) << ")\n";
      }
      if (!agree)
        ctx.out << "  MISMATCH at n = " << n << "\n";
    }
  }
  if (ctx.global.format == "json")
    ctx.out << rows.dump() << "\n";
  return mismatch ? exit_finding : exit_ok;
}

std::optional<edge> parse_edge_arg(const std::string& text)
{
  if (text.empty())
    return std::nullopt;
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--edge expects u,v");
  return edge{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

int cmd_count(command_context ctx, const std::string& pattern_spec, const std::string& host_spec,
              const std::string& edge_text, int vertex_arg)
{
  graph F = parse_pattern(pattern_spec);
  graph H = parse_pattern(host_spec);
  pattern_counter counter(F);
  copy_count cc = counter.copies(H, ctx.global.threads);
  auto e = parse_edge_arg(edge_text);
  std::optional<big_int> through_edge, through_vertex;
  if (e)
    through_edge = counter.copies_through_edge(H, *e);
  if (vertex_arg >= 0)
    through_vertex = copies_through_vertex(F, H, vertex_arg, ctx.global.threads);

  if (ctx.global.format == "json") {
    json j;
    j["copies"] = exact(cc.copies);
    j["injections"] = exact(cc.injections);
    j["aut"] = counter.aut();
    if (through_edge)
      j["through_edge"] = exact(*through_edge);
    if (through_vertex)
      j["through_vertex"] = exact(*through_vertex);
    ctx.out << j.dump() << "\n";
  } else if (ctx.global.format == "csv") {
    ctx.out << "copies,injections,aut,through_edge,through_vertex\n"
            << cc.copies << "," << cc.injections << "," << counter.aut() << ","
            << (through_edge ? through_edge->str() : "") << ","
            << (through_vertex ? through_vertex->str() : "") << "\n";
  } else {
    ctx.out << "copies = " << cc.copies << ", injections = " << cc.injections
            << ", Aut = " << counter.aut() << "\n";
    if (through_edge)
      ctx.out << "copies through edge (" << e->u << "," << e->v << ") = " << *through_edge << "\n";
    if (through_vertex)
      ctx.out << "copies through vertex " << vertex_arg << " = " << *through_vertex << "\n";
  }
  return exit_ok;
}

int cmd_construct(command_context ctx, const std::string& spec, int n, int q)
{
  critical_pattern F = require_critical(parse_pattern(spec));
  auto [g, rep] = sharpness_construction(n, F, q, ctx.global.threads);
  if (ctx.global.format == "json") {
    json j;
    j["n"] = rep.n;
    j["q"] = rep.q;
    j["part_size"] = rep.part_size;
    j["edges"] = rep.edges;
    j["copies"] = exact(rep.total);
    j["c"] = exact(rep.c_value);
    j["bound"] = exact(rep.bound);
    j["excess"] = exact(rep.excess);
    j["graph6"] = serialize_graph6(g);
    ctx.out << j.dump() << "\n";
  } else if (ctx.global.format == "csv") {
    ctx.out << "n,q,part_size,edges,copies,c,bound,excess,graph6\n"
            << rep.n << "," << rep.q << "," << rep.part_size << "," << rep.edges << "," << rep.total
            << "," << rep.c_value << "," << rep.bound << "," << rep.excess << ","
            << serialize_graph6(g) << "\n";
  } else {
    ctx.out << "T_" << F.r << "(" << n << ") + " << q << "-matching in a part of size "
            << rep.part_size << ": " << rep.edges << " edges\n"
            << "copies = " << rep.total << ", q*c(n,F) = " << rep.bound << ", excess = " << rep.excess
            << "\n"
            << "graph6: " << serialize_graph6(g) << "\n";
  }
  return exit_ok;
}

int cmd_audit(command_context ctx, const std::string& host_spec, const std::string& pattern_spec,
              const std::string& eps, int restarts)
{
  graph H = parse_pattern(host_spec);
  critical_pattern F = require_critical(parse_pattern(pattern_spec));
  audit_options opts;
  opts.epsilon = parse_rational(eps);
  opts.seed = ctx.global.seed;
  opts.restarts = restarts;
  opts.threads = ctx.global.threads;
  auto rep = audit_theorem(H, F, opts);
  if (ctx.global.format == "json") {
    ctx.out << audit_json(rep) << "\n";
  } else if (ctx.global.format == "csv") {
    ctx.out << "n,r,q,s,copies,bound,pass,max_vertex_copies,rich_edges,partition_source\n"
            << rep.n << "," << rep.r << "," << rep.q << "," << rep.s << "," << rep.copies << ","
            << rep.bound << "," << (rep.pass ? "true" : "false") << "," << rep.max_vertex_copies
            << "," << rep.rich_edges << "," << to_string(rep.source) << "\n";
  } else {
    ctx.out << audit_text(rep);
  }
  return rep.pass ? exit_ok : exit_finding;
}

int cmd_poly(command_context ctx, const std::string& spec, int base)
{
  critical_pattern F = require_critical(parse_pattern(spec));
  auto poly = interpolate_count_polynomial(F, base);
  std::string name = pattern_name(spec);
  if (ctx.global.format == "json") {
    json j;
    j["F"] = name;
    j["modulus"] = poly.modulus;
    json coeffs = json::array();
    for (const auto& c : poly.coeffs)
      coeffs.push_back(to_string(c));
    j["coeffs"] = coeffs;
    j["alpha"] = to_string(poly.alpha);
    j["beta"] = to_string(poly.beta());
    j["samples"] = poly.samples;
    j["check_point"] = poly.check_point ? json(*poly.check_point) : json(nullptr);
    ctx.out << j.dump() << "\n";
  } else if (ctx.global.format == "csv") {
    ctx.out << "power,coefficient\n";
    for (int i = 0; i <= poly.degree(); ++i)
      ctx.out << i << "," << to_string(poly.coeffs[i]) << "\n";
  } else {
    ctx.out << "c(n, " << name << ") = " << polynomial_text(poly) << "   for n = 0 mod "
            << poly.modulus << "\n"
            << "alpha = " << to_string(poly.alpha) << ", beta = " << to_string(poly.beta()) << "\n"
            << "samples:";
    for (int n : poly.samples)
      ctx.out << " " << n;
    if (poly.check_point)
      ctx.out << " (checked at " << *poly.check_point << ")";
    ctx.out << "\n";
  }
  return exit_ok;
}

int cmd_search(command_context ctx, const std::string& spec, search_options opts, bool exhaustive)
{
  critical_pattern F = require_critical(parse_pattern(spec));
  opts.seed = ctx.global.seed;
  opts.threads = ctx.global.threads;
  search_result res = exhaustive ? exhaustive_search(F, opts.n, opts.q) : counterexample_search(F, opts);
  if (ctx.global.format == "json") {
    json j;
    j["n"] = res.n;
    j["q"] = res.q;
    j["edges"] = res.edges;
    j["mode"] = res.exhaustive ? "exhaustive" : "annealing";
    j["best_copies"] = exact(res.best_copies);
    j["bound"] = exact(res.bound);
    j["below_bound"] = res.below_bound;
    j["best_seed"] = res.best_seed;
    j["graphs_scanned"] = res.graphs_scanned;
    j["graph6"] = serialize_graph6(res.best);
    ctx.out << j.dump() << "\n";
  } else if (ctx.global.format == "csv") {
    ctx.out << "n,q,edges,mode,best_copies,bound,below_bound,best_seed,graphs_scanned,graph6\n"
            << res.n << "," << res.q << "," << res.edges << ","
            << (res.exhaustive ? "exhaustive" : "annealing") << "," << res.best_copies << ","
            << res.bound << "," << (res.below_bound ? "true" : "false") << "," << res.best_seed
            << "," << res.graphs_scanned << "," << serialize_graph6(res.best) << "\n";
  } else {
    ctx.out << "n = " << res.n << ", q = " << res.q << ", edges = " << res.edges << ", mode = "
            << (res.exhaustive ? "exhaustive" : "annealing") << "\n"
            << "best #F = " << res.best_copies;
    if (!res.exhaustive && res.q > 0)
      ctx.out << " (seed " << res.best_seed << ")";
    ctx.out << ", bound q*c(n,F) = " << res.bound << "\n";
    if (res.below_bound)
      ctx.out << "FOUND a graph below the bound; this n may lie below the theorem's range\n";
    else if (res.exhaustive)
      ctx.out << "minimum over all " << res.graphs_scanned << " graphs is " << res.best_copies << "\n";
    else
      ctx.out << "no graph below the bound found\n";
    ctx.out << "graph6: " << serialize_graph6(res.best) << "\n";
  }
  return res.below_bound ? exit_finding : exit_ok;
}

int cmd_lemma4(command_context ctx, int max_n, const std::vector<int>& rs, int max_s)
{
  std::uint64_t total_violations = 0;
  json rows = json::array();
  if (ctx.global.format == "csv")
    ctx.out << "r,max_n,max_s,checked,violations\n";
  for (int r : rs) {
    auto res = check_balanced_parts(max_n, r, max_s);
    total_violations += res.violations;
    if (ctx.global.format == "json") {
      rows.push_back({{"r", r}, {"max_n", max_n}, {"max_s", max_s}, {"checked", res.compositions},
                      {"violations", res.violations}});
    } else if (ctx.global.format == "csv") {
      ctx.out << r << "," << max_n << "," << max_s << "," << res.compositions << "," << res.violations
              << "\n";
    } else {
      ctx.out << "r = " << r << ": " << res.compositions << " checks, " << res.violations
              << " violations\n";
      for (const auto& [parts, s] : res.failures) {
        ctx.out << "  violation s = " << s << ", parts:";
        for (int x : parts)
          ctx.out << " " << x;
        ctx.out << "\n";
      }
    }
  }
  if (ctx.global.format == "json")
    ctx.out << rows.dump() << "\n";
  return total_violations == 0 ? exit_ok : exit_finding;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact counts of color-critical subgraphs near the Turán threshold", "turancount"};
  app.require_subcommand(1);
  app.fallthrough();

  global_options global;
  global.threads = default_threads();
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", global.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", global.out_path, "Write output to this file instead of stdout");
  app.add_option("--seed", global.seed, "RNG seed");

  std::string pattern, host, eps = "1/10", edge_text;
  int n = 0, q = 1, from = 0, to = 0, base = 0, restarts = 32, vertex_arg = -1;
  bool verbose = false, exhaustive = false;
  search_options sopts;
  int max_n = 24, max_s = 3;
  std::vector<int> rs{2, 3};

  auto* critical = app.add_subcommand("critical", "Chromatic number, good edges and |Aut| of F");
  critical->add_option("-F,--pattern", pattern, "Pattern")->required();

  auto* cnf = app.add_subcommand("cnf", "c(n,F) by direct count, coloring formula and closed form");
  cnf->add_option("-F,--pattern", pattern, "Pattern")->required();
  auto* n_opt = cnf->add_option("-n", n, "Host order");
  auto* from_opt = cnf->add_option("--from", from, "First n of a range");
  auto* to_opt = cnf->add_option("--to", to, "Last n of a range");
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);
  n_opt->excludes(from_opt);
  cnf->add_flag("--verbose", verbose, "Show the coloring sum and its normalization");

  auto* count = app.add_subcommand("count", "Copies of F in a host graph");
  count->add_option("-F,--pattern", pattern, "Pattern")->required();
  count->add_option("-H,--host", host, "Host graph")->required();
  count->add_option("--edge", edge_text, "Also count copies through edge u,v");
  count->add_option("--vertex", vertex_arg, "Also count copies through a vertex");

  auto* construct = app.add_subcommand("construct", "T_r(n) plus a q-matching, with copy accounting");
  construct->add_option("-F,--pattern", pattern, "Pattern")->required();
  construct->add_option("-n", n, "Host order")->required();
  construct->add_option("-q", q, "Matching size")->required();

  auto* audit = app.add_subcommand("audit", "Check #F >= q c(n,F) on a host");
  audit->add_option("-H,--host", host, "Host graph")->required();
  audit->add_option("-F,--pattern", pattern, "Pattern")->required();
  audit->add_option("--eps", eps, "Rich-edge threshold epsilon, e.g. 1/10");
  audit->add_option("--restarts", restarts, "Local search restarts")->check(CLI::PositiveNumber);

  auto* poly = app.add_subcommand("poly", "Interpolate c(n,F) as a polynomial on n = 0 mod r");
  poly->add_option("-F,--pattern", pattern, "Pattern")->required();
  poly->add_option("--base", base, "First sample n (multiple of r)");

  auto* search = app.add_subcommand("search", "Look for graphs with t_r(n)+q edges and few copies");
  search->add_option("-F,--pattern", pattern, "Pattern")->required();
  search->add_option("-n", sopts.n, "Host order")->required();
  search->add_option("-q", sopts.q, "Edges above t_r(n)")->required();
  search->add_option("--iters", sopts.iterations, "Annealing steps per chain");
  search->add_option("--chains", sopts.chains, "Independent chains")->check(CLI::PositiveNumber);
  search->add_option("--t-start", sopts.t_start, "Initial temperature (default c(n,F)/2)");
  search->add_option("--t-end", sopts.t_end, "Final temperature");
  search->add_flag("--exhaustive", exhaustive, "Scan every graph (capped at 1e7 edge sets)");

  auto* lemma4 = app.add_subcommand("lemma4", "Exhaustive balanced-parts check");
  lemma4->add_option("--max-n", max_n, "Largest n");
  lemma4->add_option("-r", rs, "Class counts")->delimiter(',');
  lemma4->add_option("--max-s", max_s, "Largest s");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  std::ostringstream buffer;
  command_context ctx{global, buffer};
  int code = exit_ok;
  try {
    if (*critical) {
      code = cmd_critical(ctx, pattern);
    } else if (*cnf) {
      std::vector<int> ns;
      if (*n_opt)
        ns.push_back(n);
      else if (*from_opt)
        for (int i = from; i <= to; ++i)
          ns.push_back(i);
      else
        throw CLI::RequiredError("-n or --from/--to");
      code = cmd_cnf(ctx, pattern, ns, verbose);
    } else if (*count) {
      code = cmd_count(ctx, pattern, host, edge_text, vertex_arg);
    } else if (*construct) {
      code = cmd_construct(ctx, pattern, n, q);
    } else if (*audit) {
      code = cmd_audit(ctx, host, pattern, eps, restarts);
    } else if (*poly) {
      code = cmd_poly(ctx, pattern, base);
    } else if (*search) {
      code = cmd_search(ctx, pattern, sopts, exhaustive);
    } else if (*lemma4) {
      code = cmd_lemma4(ctx, max_n, rs, max_s);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (global.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(global.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << global.out_path << "'\n";
      return exit_usage;
    }
    file << buffer.str();
  }
  return code;
}

} // namespace turancount::cli
