#include "turancount/extremal.hpp"
#include "turancount/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace turancount {

namespace {

struct part_candidate {
  int size;
  vertex first;
};

// One block per distinct Turán part size that can hold an edge.
std::vector<part_candidate> edge_hosting_parts(int n, int r)
{
  auto parts = turan_parts(n, r);
  std::vector<part_candidate> out;
  if (parts[0] >= 2)
    out.push_back({parts[0], 0});
  int split = n % r;
  if (split != 0 && parts[split] >= 2)
    out.push_back({parts[split], parts.offset(split)});
  return out;
}

void check_host_size(int n, const critical_pattern& F)
{
  if (n < F.f)
    throw std::invalid_argument("n = " + std::to_string(n) + " is too small to host a pattern on " +
                                std::to_string(F.f) + " vertices");
  if (n > max_vertices)
    throw capacity_error("n = " + std::to_string(n) + " exceeds 64");
  if (F.r < 2)
    throw std::invalid_argument("pattern must be r-critical with r >= 2");
}

struct part_count {
  int size;
  big_int copies;
};

std::vector<part_count> counts_per_part(int n, const critical_pattern& F)
{
  check_host_size(n, F);
  auto candidates = edge_hosting_parts(n, F.r);
  if (candidates.empty())
    throw std::invalid_argument("no Turán part of T_" + std::to_string(F.r) + "(" +
                                std::to_string(n) + ") can hold an edge");
  pattern_counter counter(F.g);
  graph base = turan_graph(n, F.r);
  std::vector<part_count> out;
  for (auto [size, first] : candidates) {
    // T_r(n) is F-free, so every copy uses the added edge.
    graph host = base.with_edge(first, first + 1);
    out.push_back({size, counter.copies_through_edge(host, {first, first + 1})});
  }
  return out;
}

// poly * (a n + b), coefficients lowest degree first.
std::vector<rational> multiply_linear(const std::vector<rational>& poly, const rational& a,
                                      const rational& b)
{
  std::vector<rational> out(poly.size() + 1, rational(0));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out[i] += poly[i] * b;
    out[i + 1] += poly[i] * a;
  }
  return out;
}

rational abs_value(const rational& x) { return x < 0 ? rational(-x) : x; }

} // namespace

big_int c_exact(int n, const critical_pattern& F)
{
  auto counts = counts_per_part(n, F);
  return std::min_element(counts.begin(), counts.end(),
                          [](const part_count& a, const part_count& b) { return a.copies < b.copies; })
      ->copies;
}

int extremal_part_size(int n, const critical_pattern& F)
{
  auto counts = counts_per_part(n, F);
  return std::min_element(counts.begin(), counts.end(),
                          [](const part_count& a, const part_count& b) { return a.copies < b.copies; })
      ->size;
}

big_int c_multipartite(const part_sizes& parts, const critical_pattern& F)
{
  int n = parts.total();
  check_host_size(n, F);
  if (parts[0] < 2)
    throw std::invalid_argument("first part has " + std::to_string(parts[0]) +
                                " vertices; an edge needs 2");
  graph host = complete_multipartite(parts).with_edge(0, 1);
  return pattern_counter(F.g).copies_through_edge(host, {0, 1});
}

coloring_sum coloring_formula(const part_sizes& parts, const critical_pattern& F)
{
  if (parts.classes() != F.r)
    throw std::invalid_argument("coloring formula needs exactly r = " + std::to_string(F.r) +
                                " parts");
  if (parts[0] < 2)
    throw std::invalid_argument("first part must hold the added edge");
  coloring_sum out;
  for (auto [u, v] : F.good_edges) {
    constrained_colorings colorings(F.g.without_edge(u, v), F.r, {{u, 1}, {v, 1}});
    while (colorings.next()) {
      auto x = class_profile(colorings.current(), F.r, u, v);
      big_int term = 2 * falling_factorial(parts[0] - 2, x[0]);
      for (int i = 1; i < F.r; ++i)
        term *= falling_factorial(parts[i], x[i]);
      out.raw += term;
    }
  }
  if (out.raw % F.aut != 0)
    throw std::logic_error("coloring sum " + out.raw.str() + " not divisible by |Aut(F)| = " +
                           std::to_string(F.aut));
  out.copies = out.raw / F.aut;
  return out;
}

big_int lemma5_formula(int n, const critical_pattern& F)
{
  if (F.r < 2 || n % F.r != 0)
    throw std::invalid_argument("r = " + std::to_string(F.r) + " does not divide n = " +
                                std::to_string(n));
  if (n < 2 * F.r)
    throw std::invalid_argument("parts of T_r(n) must hold an edge");
  return coloring_formula(part_sizes(std::vector<int>(F.r, n / F.r)), F).copies;
}

rational count_polynomial::operator()(const rational& n) const
{
  rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * n + *it;
  return acc;
}

rational count_polynomial::beta() const
{
  rational sum = 0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
    sum += abs_value(coeffs[i]);
  return sum;
}

count_polynomial interpolate_count_polynomial(const critical_pattern& F, int base_n)
{
  int r = F.r;
  if (r < 2)
    throw std::invalid_argument("pattern must be r-critical with r >= 2");
  if (base_n == 0)
    base_n = (F.f + r - 1) / r * r;
  if (base_n % r != 0 || base_n < F.f)
    throw std::invalid_argument("base_n must be a multiple of r and at least f");
  int degree = F.f - 2;
  int last = base_n + degree * r;
  if (last > max_vertices)
    throw capacity_error("interpolation samples reach n = " + std::to_string(last) + " > 64");

  count_polynomial poly;
  poly.modulus = r;
  std::vector<rational> diffs;
  for (int i = 0; i <= degree; ++i) {
    poly.samples.push_back(base_n + i * r);
    diffs.push_back(rational(c_exact(base_n + i * r, F)));
  }
  // Newton forward differences in t = (n - base_n) / r: after the loop
  // diffs[j] holds the j-th difference at t = 0.
  for (int j = 1; j <= degree; ++j)
    for (int i = degree; i >= j; --i)
      diffs[i] -= diffs[i - 1];

  poly.coeffs.assign(1, rational(0));
  std::vector<rational> basis{rational(1)};  // binomial(t, j) as a polynomial in n
  for (int j = 0; j <= degree; ++j) {
    if (j > 0) {
      // binomial(t, j) = binomial(t, j-1) (t - j + 1) / j, t = (n - base_n) / r
      rational a = rational(1, r * j);
      rational b = rational(-base_n - (j - 1) * r, r * j);
      basis = multiply_linear(basis, a, b);
    }
    poly.coeffs.resize(basis.size(), rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      poly.coeffs[i] += diffs[j] * basis[i];
  }
  while (poly.coeffs.size() > 1 && poly.coeffs.back() == 0)
    poly.coeffs.pop_back();
  if (poly.degree() != degree || poly.coeffs.back() <= 0)
    throw std::logic_error("interpolated count polynomial has degree " +
                           std::to_string(poly.degree()) + ", expected " + std::to_string(degree) +
                           " with positive leading coefficient");
  poly.alpha = poly.coeffs.back();

  int extra = last + r;
  if (extra <= max_vertices) {
    if (poly(rational(extra)) != rational(c_exact(extra, F)))
      throw std::logic_error("count polynomial fails at held-out n = " + std::to_string(extra));
    poly.check_point = extra;
  }
  return poly;
}

big_int closed_form_odd_cycle(int n, int k)
{
  if (k < 1 || n < 2 * k + 1)
    throw std::invalid_argument("closed form needs k >= 1 and n >= 2k+1");
  int lo = n / 2, hi = (n + 1) / 2;
  big_int out = 1;
  for (int i = 0; i < k; ++i)
    out *= lo - i;
  for (int j = 2; j <= k; ++j)
    out *= hi - j;
  return out;
}

big_int closed_form_k4me(int n)
{
  if (n < 4)
    throw std::invalid_argument("closed form needs n >= 4");
  return binomial(n / 2, 2);
}

std::pair<graph, sharpness_report> sharpness_construction(int n, const critical_pattern& F, int q,
                                                          int threads)
{
  if (q < 0)
    throw std::invalid_argument("negative matching size");
  sharpness_report rep;
  rep.n = n;
  rep.q = q;
  rep.c_value = c_exact(n, F);
  rep.part_size = extremal_part_size(n, F);

  auto parts = turan_parts(n, F.r);
  int index = parts[0] == rep.part_size ? 0 : n % F.r;
  if (parts[index] < 2 * q)
    throw std::invalid_argument("q = " + std::to_string(q) + " too large for a part of size " +
                                std::to_string(parts[index]));
  graph g = add_matching(turan_graph(n, F.r), {parts.offset(index), parts[index]}, q);

  rep.edges = g.size();
  rep.total = pattern_counter(F.g).copies(g, threads).copies;
  rep.bound = rep.c_value * q;
  rep.excess = rep.total - rep.bound;
  return {g, rep};
}

int part_deviation(const part_sizes& parts)
{
  int n = parts.total(), r = parts.classes();
  int lo = n / r, hi = (n + r - 1) / r;
  int s = 0;
  for (int size : parts.values())
    s = std::max({s, lo - size, size - hi});
  return s;
}

lemma6_result lemma6_gap(const part_sizes& parts, const critical_pattern& F)
{
  if (parts.classes() != F.r)
    throw std::invalid_argument("need exactly r = " + std::to_string(F.r) + " parts");
  int n = parts.total();
  lemma6_result out;
  out.s = part_deviation(parts);
  if (3 * F.r * out.s >= n)
    throw std::invalid_argument("deviation s = " + std::to_string(out.s) +
                                " violates s < n/(3r) for n = " + std::to_string(n));
  out.multipartite = c_multipartite(parts, F);
  out.balanced = c_exact(n, F);
  return out;
}

rational gamma_ratio(const lemma6_result& gap, int n, int f)
{
  if (gap.s == 0)
    return 0;
  big_int scale = big_int(gap.s) * boost::multiprecision::pow(big_int(n), f - 3);
  return rational(gap.balanced - gap.multipartite, scale);
}

rational gamma_upper_bound(const count_polynomial& poly, int f, int r)
{
  return poly.alpha * (big_int(1) << f) * r + 2 * poly.beta();
}

balance_check check_balanced_parts(int max_n, int r, int max_s)
{
  if (r < 2 || max_n < 0 || max_s < 0)
    throw std::invalid_argument("need r >= 2, max_n >= 0, max_s >= 0");
  balance_check out;
  for (int n = 0; n <= max_n; ++n) {
    std::int64_t t = turan_number(n, r);
    int lo = n / r, hi = (n + r - 1) / r;
    std::vector<int> parts(r, 0);
    // Odometer over parts[0..r-2]; the last part takes the remainder.
    for (;;) {
      int used = 0;
      for (int i = 0; i + 1 < r; ++i)
        used += parts[i];
      if (used <= n) {
        parts[r - 1] = n - used;
        std::int64_t cross = cross_pair_count(part_sizes(parts));
        for (int s = 0; s <= max_s; ++s) {
          if (cross < t - s)
            continue;
          ++out.compositions;
          bool ok = std::all_of(parts.begin(), parts.end(),
                                [&](int x) { return lo - s <= x && x <= hi + s; });
          if (!ok) {
            ++out.violations;
            if (out.failures.size() < 8)
              out.failures.emplace_back(parts, s);
          }
        }
      }
      int i = 0;
      while (i + 1 < r && parts[i] == n) {
        parts[i] = 0;
        ++i;
      }
      if (i + 1 >= r)
        break;
      ++parts[i];
    }
  }
  return out;
}

} // namespace turancount
