#pragma once

#include "turancount/coloring.hpp"
#include "turancount/exact.hpp"
#include "turancount/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace turancount {

// c(n,F): fewest copies of F created by adding one edge to T_r(n). The
// edge goes into a part of each occurring size (>= 2) and the minimum is
// kept. Throws std::invalid_argument when n < f or no part can hold it.
big_int c_exact(int n, const critical_pattern& F);

// Size of the Turán part whose extra edge attains c(n,F); the larger size
// wins ties.
int extremal_part_size(int n, const critical_pattern& F);

// Copies of F in the complete multipartite graph on `parts` plus one edge
// inside the first listed part.
big_int c_multipartite(const part_sizes& parts, const critical_pattern& F);

// The good-edge / constrained-coloring sum: for each good edge uv and
// each proper r-coloring of F - uv with u, v in color 1,
// 2 (n_1 - 2)_{x_1} prod_{i >= 2} (n_i)_{x_i}. `raw` is that sum (the
// injection count); `copies` is raw / |Aut(F)|.
struct coloring_sum {
  big_int raw;
  big_int copies;
};

// Needs parts.classes() == F.r and a first part of size >= 2.
coloring_sum coloring_formula(const part_sizes& parts, const critical_pattern& F);

// coloring_formula on T_r(n); throws unless r | n and n >= 2r.
big_int lemma5_formula(int n, const critical_pattern& F);

// c(n,F) on n = 0 mod r as an exact polynomial in n.
struct count_polynomial {
  std::vector<rational> coeffs;  // coeffs[i] multiplies n^i
  int modulus = 2;
  rational alpha;
  std::vector<int> samples;
  std::optional<int> check_point;  // extra sample confirming a zero top difference

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  rational operator()(const rational& n) const;
  // Sum of the absolute values of the non-leading coefficients.
  rational beta() const;
};

// base_n = 0 picks the smallest multiple of r that is >= f.
count_polynomial interpolate_count_polynomial(const critical_pattern& F, int base_n = 0);

// floor(n/2)...(floor(n/2)-k+1) * (ceil(n/2)-2)...(ceil(n/2)-k).
big_int closed_form_odd_cycle(int n, int k);
// binomial(floor(n/2), 2).
big_int closed_form_k4me(int n);

struct sharpness_report {
  int n = 0;
  int q = 0;
  int part_size = 0;
  std::int64_t edges = 0;
  big_int total;
  big_int c_value;
  big_int bound;   // q * c(n,F)
  big_int excess;  // total - bound
};

// T_r(n) plus a q-matching in the first part of the size attaining c(n,F).
std::pair<graph, sharpness_report> sharpness_construction(int n, const critical_pattern& F, int q,
                                                          int threads = 1);

// max_i of how far n_i falls outside [floor(n/r), ceil(n/r)].
int part_deviation(const part_sizes& parts);

struct lemma6_result {
  big_int multipartite;
  big_int balanced;
  int s = 0;
};

// Throws std::invalid_argument unless parts has F.r classes and 3 r s < n.
lemma6_result lemma6_gap(const part_sizes& parts, const critical_pattern& F);

// (balanced - multipartite) / (s n^{f-3}); zero when s = 0.
rational gamma_ratio(const lemma6_result& gap, int n, int f);

// alpha 2^f r + 2 beta.
rational gamma_upper_bound(const count_polynomial& poly, int f, int r);

struct balance_check {
  std::uint64_t compositions = 0;  // (composition, s) pairs meeting the cross-pair hypothesis
  std::uint64_t violations = 0;
  std::vector<std::pair<std::vector<int>, int>> failures;  // first few (parts, s)
};

// For every n in 0..max_n, every weak composition of n into r parts and
// every s in 0..max_s with cross_pair_count >= t_r(n) - s, checks
// floor(n/r) - s <= n_i <= ceil(n/r) + s.
balance_check check_balanced_parts(int max_n, int r, int max_s);

} // namespace turancount
