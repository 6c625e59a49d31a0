// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Seeds, corpus sizes, time budgets and tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "orient/algebra.hpp"
#include "orient/constructors.hpp"
#include "orient/generators.hpp"
#include "orient/oracle.hpp"
#include "orient/rounding.hpp"
#include "support/test_support.hpp"

using namespace orient;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

constexpr double kEdgeProbabilities[] = {0.3, 0.5, 0.8};
constexpr SearchLimits kCorpusLimits{28};  // K_8 has 28 edges

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

ForbiddenSets forbidden_up_to(const Graph& g, const std::vector<int>& bound, std::mt19937_64& rng) {
  std::vector<int> sizes(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) sizes[v] = uniform_int(rng, 0, bound[v]);
  return testing::random_forbidden(g, ForbiddenMode::OutDegree, sizes, rng);
}

int min_of(const std::vector<int>& xs) { return xs.empty() ? 0 : *std::min_element(xs.begin(), xs.end()); }

bool weights_meet(const std::vector<long>& w, const std::vector<int>& bound) {
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (w[v] < bound[v]) return false;
  }
  return true;
}

// 1 ------------------------------------------------------------------------

Outcome sharpness() {
  const Graph g = complete_graph(5);
  const auto sets = [&](std::vector<int> values) {
    return ForbiddenSets(g, ForbiddenMode::OutDegree, std::vector<std::vector<int>>(5, values));
  };
  const bool unsat = !find_orientation(g, sets({2, 3})).has_value();
  const auto witness = find_orientation(g, sets({2}));
  const bool sat = witness && is_f_avoiding(*witness, sets({2}));
  return {unsat && sat, format("K5 {2,3}: %s, K5 {2}: %s", unsat ? "UNSAT" : "SAT", sat ? "SAT" : "UNSAT")};
}

// 2 ------------------------------------------------------------------------

Outcome odd_cycles() {
  std::mt19937_64 rng(2002);
  int checked = 0;
  int sat_count = 0;
  for (int n : {3, 5, 7, 9}) {
    const Graph g = cycle_graph(n);
    for (int sample = 0; sample < 100; ++sample) {
      std::vector<std::vector<int>> sets(n);
      bool some_not_one = false;
      for (Vertex v = 0; v < n; ++v) {
        // The first sample is the all-{1} vector, the only UNSAT one.
        const int value = sample == 0 ? 1 : uniform_int(rng, 0, 2);
        sets[v] = {value};
        some_not_one = some_not_one || value != 1;
      }
      const ForbiddenSets f(g, ForbiddenMode::OutDegree, sets);
      const auto d = find_orientation(g, f);
      if (d.has_value() != some_not_one || (d && !is_f_avoiding(*d, f))) {
        return {false, format("mismatch on C%d sample %d", n, sample)};
      }
      ++checked;
      if (d) ++sat_count;
    }
  }
  return {true, format("%d f-vectors on C3..C9, %d SAT, %d UNSAT", checked, sat_count, checked - sat_count)};
}

// 3 ------------------------------------------------------------------------

Outcome third_pipeline() {
  std::mt19937_64 rng(3003);
  int raw_draws = 0;
  for (int i = 0; i < 300; ++i) {
    const double p = kEdgeProbabilities[i % 3];
    const int n = uniform_int(rng, 4, 8);
    Graph g;
    std::vector<int> bound;
    for (;;) {
      g = random_gnp(n, p, rng);
      bound.assign(n, 0);
      for (Vertex v = 0; v < n; ++v) bound[v] = third_guarantee(g.degree(v));
      if (raw_draws < 300) {
        ++raw_draws;
        const auto c = build_h_third(g);
        if (!weights_meet(certificate_weights(g, c.ordering, c.h), bound))
          return {false, format("weight guarantee fails on unconditioned draw %d", raw_draws)};
      }
      if (min_of(bound) >= 0) break;
    }
    const auto c = build_h_third(g);
    const auto f = forbidden_up_to(g, bound, rng);
    if (!weights_meet(certificate_weights(g, c.ordering, c.h), bound))
      return {false, format("instance %d: weight below floor(deg/3) - 1", i)};
    if (!certify_h_condition(g, c.ordering, c.h, f).valid) return {false, format("instance %d: certificate invalid", i)};
    if (!find_orientation(g, f, kCorpusLimits)) return {false, format("instance %d: oracle UNSAT", i)};
  }
  return {true, format("300/300 certified and SAT; weight bound held on %d unconditioned draws", raw_draws)};
}

// 4 ------------------------------------------------------------------------

Outcome two_thirds_pipeline() {
  std::mt19937_64 rng(4004);
  int raw_draws = 0;
  for (int i = 0; i < 300; ++i) {
    const double p = kEdgeProbabilities[i % 3];
    const int n = uniform_int(rng, 6, 8);
    Graph g;
    Orientation d;
    std::vector<int> bound;
    bool found = false;
    while (!found) {
      g = random_gnp(n, p, rng);
      if (raw_draws < 300) {
        ++raw_draws;
        const Orientation raw = random_orientation(g, rng);
        std::vector<int> raw_bound(n);
        for (Vertex v = 0; v < n; ++v) raw_bound[v] = two_thirds_guarantee(raw.out_degree(v));
        const auto c = build_h_two_thirds(g, raw);
        if (!weights_meet(certificate_weights(g, c.ordering, c.h), raw_bound))
          return {false, format("weight guarantee fails on unconditioned draw %d", raw_draws)};
      }
      // Some orientation must give every vertex out-degree >= 2.
      std::vector<int> lower(n, 2);
      std::vector<int> upper(n);
      bool degrees_ok = true;
      for (Vertex v = 0; v < n; ++v) {
        upper[v] = g.degree(v);
        degrees_ok = degrees_ok && upper[v] >= 2;
      }
      if (!degrees_ok || !frank_gyarfas_check(g, lower, upper)) continue;
      for (int attempt = 0; attempt < 200000 && !found; ++attempt) {
        d = random_orientation(g, rng);
        found = true;
        for (Vertex v = 0; v < n && found; ++v) found = d.out_degree(v) >= 2;
      }
    }
    bound.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) bound[v] = two_thirds_guarantee(d.out_degree(v));
    const auto c = build_h_two_thirds(g, d);
    const auto f = forbidden_up_to(g, bound, rng);
    if (!weights_meet(certificate_weights(g, c.ordering, c.h), bound))
      return {false, format("instance %d: weight below floor(2 outdeg/3) - 1", i)};
    if (!certify_h_condition(g, c.ordering, c.h, f).valid) return {false, format("instance %d: certificate invalid", i)};
    if (!find_orientation(g, f, kCorpusLimits)) return {false, format("instance %d: oracle UNSAT", i)};
  }
  return {true, format("300/300 certified and SAT; weight bound held on %d unconditioned draws", raw_draws)};
}

// 5 ------------------------------------------------------------------------

Rational random_entry(std::mt19937_64& rng) {
  const int den = uniform_int(rng, 1, 4);
  Rational q(uniform_int(rng, -3 * den, 3 * den), den);
  q.canonicalize();
  return q;
}

Outcome rounding_postcondition() {
  std::mt19937_64 rng(5005);
  long cycles = 0;
  long leaves = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = uniform_int(rng, 1, 10);
    const Graph g = random_gnp(n, 0.2 + 0.1 * uniform_int(rng, 0, 6), rng);
    std::vector<std::pair<Rational, Rational>> cols;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      Rational a = random_entry(rng);
      Rational b = random_entry(rng);
      cols.emplace_back(a, b);
    }
    const EdgeVertexMatrix m(g, cols);
    std::vector<Rational> y;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const int den = uniform_int(rng, 1, 12);
      Rational q(uniform_int(rng, 0, den), den);
      q.canonicalize();
      y.push_back(q);
    }
    RoundingStats stats;
    const auto rounded = round(m, FractionalEdgeVector(y), &stats);
    cycles += stats.cycle_steps;
    leaves += stats.leaf_steps;
    std::vector<Rational> yr(rounded.size());
    for (std::size_t e = 0; e < rounded.size(); ++e) {
      yr[e] = rounded[e] ? 1 : 0;
      if ((y[e] == 0 || y[e] == 1) && yr[e] != y[e]) return {false, format("instance %d: integral entry changed", i)};
    }
    const auto x = m.apply(y);
    const auto xr = m.apply(yr);
    for (Vertex v = 0; v < n; ++v) {
      const Rational floor_value = x[v] - m.bound(v);
      const bool ok = sgn(m.bound(v)) > 0 ? xr[v] > floor_value : xr[v] >= floor_value;
      if (!ok) return {false, format("instance %d: bound fails at vertex %d", i, v)};
    }
  }
  return {true, format("500/500 instances, %ld cycle steps, %ld leaf steps", cycles, leaves)};
}

// 6 ------------------------------------------------------------------------

Outcome duality_identity() {
  std::mt19937_64 rng(6006);
  for (int i = 0; i < 1000; ++i) {
    const int rows = uniform_int(rng, 1, 4);
    const int cols = uniform_int(rng, 1, 4);
    const int total = uniform_int(rng, 0, 8);
    RationalMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) a(r, c) = uniform_int(rng, -3, 3);
    std::vector<int> alpha(rows, 0);
    std::vector<int> beta(cols, 0);
    for (int k = 0; k < total; ++k) {
      ++alpha[uniform_int(rng, 0, rows - 1)];
      ++beta[uniform_int(rng, 0, cols - 1)];
    }
    BigInt alpha_fact = 1;
    BigInt beta_fact = 1;
    for (int x : alpha) alpha_fact *= factorial(x);
    for (int x : beta) beta_fact *= factorial(x);
    const auto naive = naive_coeff(a, alpha, beta);
    const Rational perm = permanent(multiplied_matrix(a, alpha, beta));
    if (Rational(beta_fact) * naive.coeff_y != perm || Rational(alpha_fact) * naive.coeff_x != perm)
      return {false, format("instance %d: identity fails", i)};
    const auto fast = coeff_via_permanent(a, alpha, beta);
    if (fast.coeff_x != naive.coeff_x || fast.coeff_y != naive.coeff_y)
      return {false, format("instance %d: coefficient mismatch", i)};
  }
  return {true, "1000/1000 triples, exact"};
}

// 7 ------------------------------------------------------------------------

bool coefficient_matches(const Graph& g, const Orientation& d, const RationalMatrix& incidence) {
  const std::vector<int> alpha(d.out_degrees().begin(), d.out_degrees().end());
  const std::vector<int> beta(g.num_edges(), 1);
  const auto c = coeff_via_permanent(incidence, alpha, beta);
  const long long diff = eulerian_diff(d);
  return abs(c.coeff_x) == Rational(static_cast<long>(diff < 0 ? -diff : diff));
}

Outcome at_equation() {
  const auto graphs = testing::connected_graphs(8);
  long orientations = 0;
  for (const Graph& g : graphs) {
    const auto incidence = incidence_matrix(g, VertexOrdering::identity(g.num_vertices()));
    bool bad = false;
    testing::for_each_orientation(g, [&](const Orientation& d) {
      ++orientations;
      bad = !coefficient_matches(g, d, incidence);
      return bad;
    });
    if (bad) return {false, format("mismatch on a graph with %d edges", g.num_edges())};
  }
  std::mt19937_64 rng(7007);
  for (int i = 0; i < 50; ++i) {
    Graph g;
    do {
      g = random_gnp(uniform_int(rng, 2, 8), 0.5, rng);
    } while (g.num_edges() == 0 || g.num_edges() > 10);
    const Orientation d = random_orientation(g, rng);
    if (!coefficient_matches(g, d, incidence_matrix(g, VertexOrdering::identity(g.num_vertices()))))
      return {false, format("mismatch on random case %d", i)};
  }
  return {true, format("%zu graphs, %ld orientations, plus 50 random cases", graphs.size(), orientations)};
}

// 8 ------------------------------------------------------------------------

Outcome at_regression() {
  const int four = at_number(complete_minus_matching(4));
  const int five = at_number(complete_minus_matching(5));
  return {four == 2 && five == 3, format("AT(K4 - PM) = %d, AT(K5 - M) = %d", four, five)};
}

// 9 ------------------------------------------------------------------------

Outcome bipartite() {
  std::mt19937_64 rng(9009);
  for (int i = 0; i < 100; ++i) {
    Graph g;
    do {
      g = random_bipartite(uniform_int(rng, 1, 5), uniform_int(rng, 1, 5), 0.5, rng);
    } while (g.num_edges() > 10);
    const auto counts = eulerian_counts(random_orientation(g, rng));
    if (counts.odd != 0 || counts.even - counts.odd < 1) return {false, format("instance %d fails", i)};
  }
  return {true, "100/100 with EO = 0 and EE >= 1"};
}

// 10 -----------------------------------------------------------------------

bool every_boundary_realised(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> b(n, 0);
  long codes = 1;
  for (int i = 0; i + 1 < n; ++i) codes *= 3;
  for (long code = 0; code < codes; ++code) {
    long rest = code;
    int sum = 0;
    for (int v = 0; v + 1 < n; ++v) {
      b[v] = static_cast<int>(rest % 3);
      rest /= 3;
      sum += b[v];
    }
    b[n - 1] = (3 - sum % 3) % 3;
    if (!find_b_flow(g, 3, b)) return false;
  }
  return true;
}

Outcome zp_soundness() {
  struct Case {
    const char* name;
    Graph g;
  };
  const std::vector<Case> cases{{"K4", complete_graph(4)}, {"K5", complete_graph(5)}, {"K2,2,2", complete_minus_matching(6)}};
  std::string summary;
  long accepted_total = 0;
  for (const auto& [name, g] : cases) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    const int size = 2 * (n - 1);
    long accepted = 0;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<EdgeId> chosen;
      for (EdgeId e = 0; e < m; ++e) {
        if ((mask >> e) & 1U) chosen.push_back(e);
      }
      for (std::uint32_t flips = 0; flips < (1U << size); ++flips) {
        std::vector<Arc> arcs;
        for (int i = 0; i < size; ++i) {
          const Edge& ed = g.edge(chosen[i]);
          arcs.push_back((flips >> i) & 1U ? Arc{ed.v, ed.u} : Arc{ed.u, ed.v});
        }
        for (Vertex u = 0; u < n; ++u) {
          if (zp_certificate(g, 3, arcs, u)) ++accepted;
        }
      }
    }
    const bool connected = every_boundary_realised(g);
    if (accepted > 0 && !connected)
      return {false, format("%s: certificate accepted but some zero-sum b has no flow", name)};
    accepted_total += accepted;
    summary += format("%s %ld accepted (Z3-connected: %s); ", name, accepted, connected ? "yes" : "no");
  }
  if (accepted_total == 0) return {false, "no certificate accepted on any graph; check is vacuous"};
  summary.resize(summary.size() - 2);
  return {true, summary};
}

// 11 -----------------------------------------------------------------------

// Supremum of beta compatible with the doubled A-inequality plus the
// B-inequality for K_n, over every k = floor(beta n). The B side uses
// sum_{i > k} (i - 1) = (n^2 - n - k^2 + k) / 2.
Rational limit_beta(int n) {
  Rational best = 0;
  for (int k = 0; k <= n; ++k) {
    Rational rhs = Rational(k) * (k - 1) + Rational(static_cast<long>(n) * n - n - static_cast<long>(k) * k + k) / 2;
    Rational upper = rhs / (Rational(n - 1) * (n + k));
    Rational lo = Rational(k) / n;
    Rational hi = Rational(k + 1) / n;
    if (upper < lo) continue;
    best = std::max(best, std::min(upper, hi));
  }
  return best;
}

// Checks the two weight-sum inequalities on a concrete construction, with
// beta the least ratio w(v) / (n - 1) that the construction achieves.
bool weight_sums_hold(const Graph& g, const Construction& c) {
  const int n = g.num_vertices();
  const auto w = certificate_weights(g, c.ordering, c.h);
  const long least = *std::min_element(w.begin(), w.end());
  const Rational beta = Rational(std::max(least, 0L)) / (n - 1);
  const Rational scaled = beta * n;
  const long k = static_cast<long>(mpz_class(scaled.get_num() / scaled.get_den()).get_si());
  long e_a = 0;
  long e_b = 0;
  long e_ab = 0;
  for (EdgeId e : c.h.edge_ids()) {
    const bool in_a = c.ordering.position(g.edge(e).u) < k;
    const bool in_b = c.ordering.position(g.edge(e).v) < k;
    if (in_a && in_b) {
      ++e_a;
    } else if (!in_a && !in_b) {
      ++e_b;
    } else {
      ++e_ab;
    }
  }
  long w_a = 0;
  long w_b = 0;
  for (Vertex v = 0; v < n; ++v) (c.ordering.position(v) < k ? w_a : w_b) += w[v];
  const bool a_ok = Rational(k) * beta * (n - 1) <= w_a && w_a == k * (k - 1) / 2 - e_a + e_ab &&
                    2 * w_a <= k * (k - 1) + 2 * e_ab;
  const bool b_ok = Rational(n - k) * beta * (n - 1) <= w_b &&
                    w_b == (static_cast<long>(n) * (n - 1) - k * (k - 1)) / 2 - 2 * e_ab - e_b &&
                    2 * w_b <= static_cast<long>(n) * n - n - k * k + k - 4 * e_ab;
  return a_ok && b_ok;
}

Outcome random_construction() {
  const Rational gamma(1, 10);
  std::string summary;
  for (int n : {40, 60}) {
    const Graph g = complete_graph(n);
    RandomOptions opts;
    opts.gamma = gamma;
    opts.seed = 11011;
    opts.max_attempts = 200;
    const auto result = build_h_random(g, opts);
    const auto* ok = std::get_if<RandomSuccess>(&result);
    if (!ok) {
      const auto& fail = std::get<RandomFailure>(result);
      return {false, format("K%d: no success in 200 attempts (best attempt had %d violations)", n, fail.violations)};
    }
    const auto& c = ok->construction;
    const auto w = certificate_weights(g, c.ordering, c.h);
    const long guarantee = random_guarantee(gamma, n - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (!random_vertex_accepted(gamma, n - 1, w[v]) || w[v] < guarantee)
        return {false, format("K%d: vertex %d below the bound", n, v)};
    }
    if (!weight_sums_hold(g, c)) return {false, format("K%d: weight-sum inequalities fail", n)};
    summary += format("K%d ok at attempt %d (min weight %ld >= %ld); ", n, ok->attempt,
                      *std::min_element(w.begin(), w.end()), guarantee);
  }
  const Rational beta = limit_beta(200);
  const Rational margin(1, 50);
  const bool limit_ok = !greater_than_sqrt2_minus_1(beta - margin);
  summary += format("n=200 limit beta <= %.6f vs sqrt2-1+0.02 = %.6f", beta.get_d(), std::sqrt(2.0) - 1 + 0.02);
  return {limit_ok, summary};
}

// 12 -----------------------------------------------------------------------

Outcome frank_gyarfas() {
  std::mt19937_64 rng(12012);
  int checks = 0;
  int feasible = 0;
  for (int i = 0; i < 100; ++i) {
    Graph g;
    do {
      g = random_gnp(uniform_int(rng, 1, 8), 0.1 * uniform_int(rng, 2, 8), rng);
    } while (g.num_edges() > 10);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = g.num_vertices();
      std::vector<int> lo(n);
      std::vector<int> hi(n);
      for (Vertex v = 0; v < n; ++v) {
        const int x = uniform_int(rng, 0, g.degree(v));
        const int y = uniform_int(rng, 0, g.degree(v));
        lo[v] = std::min(x, y);
        hi[v] = std::max(x, y);
      }
      const bool fg = frank_gyarfas_check(g, lo, hi);
      if (fg != testing::brute_force_bounded_exists(g, lo, hi))
        return {false, format("graph %d trial %d disagrees", i, trial)};
      ++checks;
      if (fg) ++feasible;
    }
  }
  return {true, format("%d/%d agree (%d feasible)", checks, checks, feasible)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sharpness K5", 1, sharpness},
      {2, "odd-cycle characterisation", 5, odd_cycles},
      {3, "third-bound pipeline", 60, third_pipeline},
      {4, "two-thirds pipeline", 60, two_thirds_pipeline},
      {5, "rounding postcondition", 30, rounding_postcondition},
      {6, "dual-polynomial identity", 60, duality_identity},
      {7, "coefficient equals EE - EO", 120, at_equation},
      {8, "Alon-Tarsi numbers", 60, at_regression},
      {9, "bipartite EO = 0", 10, bipartite},
      {10, "Z3 certificate soundness", 120, zp_soundness},
      {11, "randomised construction and limit", 60, random_construction},
      {12, "Frank-Gyarfas equivalence", 60, frank_gyarfas},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > c.budget_seconds) {
      out.ok = false;
      out.detail += format(" [over the %.0f s budget]", c.budget_seconds);
    }
    if (!out.ok) ++failures;
    std::printf("%s criterion %2d (%s): %s [%.2f s]\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
