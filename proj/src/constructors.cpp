#include "orient/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "orient/rounding.hpp"

namespace orient {

namespace {

Subgraph subgraph_from_bits(const Graph& g, std::vector<bool> bits) { return Subgraph(g, std::move(bits)); }

// Backward out-arcs and forward in-arcs among the left neighbours of each vertex.
struct LeftArcs {
  std::vector<int> backward_out;
  std::vector<int> forward_in;
};

LeftArcs left_arcs(const Orientation& d, const VertexOrdering& ord) {
  LeftArcs out{std::vector<int>(d.num_vertices(), 0), std::vector<int>(d.num_vertices(), 0)};
  for (const Arc& a : d.arcs()) {
    if (ord.before(a.tail, a.head)) {
      ++out.forward_in[a.head];
    } else {
      ++out.backward_out[a.tail];
    }
  }
  return out;
}

// Dyadic numbers X / 2^64 are compared through their integer numerators.
BigInt numerator_plus_one(std::uint64_t x) {
  BigInt big(static_cast<unsigned long>(x));
  BigInt one;
  mpz_ui_pow_ui(one.get_mpz_t(), 2, 64);
  return big + one;
}

BigInt two_pow(unsigned exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
  return r;
}

// Edge probability region: x <= sqrt(2) - 1 and y + 1 >= sqrt(2) (x + 1).
bool in_region(std::uint64_t left, std::uint64_t right) {
  const BigInt x1 = numerator_plus_one(left);
  const BigInt y1 = numerator_plus_one(right);
  if (x1 * x1 > 2 * two_pow(128)) return false;
  return y1 * y1 >= 2 * x1 * x1;
}

// U / 2^64 < 1 / sqrt(2)  <=>  2 U^2 < 2^128.
bool coin_accepts(std::uint64_t draw) {
  const BigInt u(static_cast<unsigned long>(draw));
  return 2 * u * u < two_pow(128);
}

}  // namespace

std::vector<long> certificate_weights(const Graph& g, const VertexOrdering& ord, const Subgraph& h) {
  const auto g_deg = left_right_degrees(g, ord);
  const auto h_deg = left_right_degrees(g, ord, &h);
  std::vector<long> w(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    w[v] = static_cast<long>(g_deg[v].left) - 2L * h_deg[v].left + h_deg[v].right;
  return w;
}

HCertificate certify_h_condition(const Graph& g, const VertexOrdering& ord, const Subgraph& h,
                                 const ForbiddenSets& f) {
  if (f.num_vertices() != g.num_vertices())
    throw std::invalid_argument("certify: forbidden sets cover a different vertex count");
  HCertificate cert{ord, h, certificate_weights(g, ord, h), true};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    cert.slack[v] -= f.size_at(v);
    if (cert.slack[v] < 0) cert.valid = false;
  }
  return cert;
}

Construction build_h_third(const Graph& g, const VertexOrdering& ord) {
  const auto m = EdgeVertexMatrix::ordered(g, ord, 1, -2);
  const auto y = FractionalEdgeVector::constant(g.num_edges(), Rational(1, 3));
  return {ord, subgraph_from_bits(g, round(m, y))};
}

Construction build_h_third(const Graph& g) { return build_h_third(g, VertexOrdering::identity(g.num_vertices())); }

int third_guarantee(int degree) { return degree / 3 - 1; }

int count_forward_edges(const Orientation& d, const VertexOrdering& ord) {
  return static_cast<int>(std::count_if(d.arcs().begin(), d.arcs().end(),
                                        [&](const Arc& a) { return ord.before(a.tail, a.head); }));
}

VertexOrdering minimize_forward_edges(const Graph& g, const Orientation& d) {
  return minimize_forward_edges(g, d, VertexOrdering::identity(g.num_vertices()));
}

VertexOrdering minimize_forward_edges(const Graph& g, const Orientation& d, VertexOrdering start) {
  if (d.num_vertices() != g.num_vertices() || d.num_arcs() != g.num_edges())
    throw std::invalid_argument("minimize_forward_edges: orientation does not match the graph");
  if (start.size() != g.num_vertices())
    throw std::invalid_argument("minimize_forward_edges: ordering length mismatch");
  VertexOrdering ord = std::move(start);
  int forward = count_forward_edges(d, ord);
  for (;;) {
    const auto arcs = left_arcs(d, ord);
    Vertex violator = -1;
    for (Vertex v : ord.sequence()) {
      if (arcs.backward_out[v] < arcs.forward_in[v]) {
        violator = v;
        break;
      }
    }
    if (violator < 0) return ord;
    ord = ord.moved_to_front(violator);
    const int now = count_forward_edges(d, ord);
    if (now >= forward) throw std::logic_error("minimize_forward_edges: move did not reduce forward arcs");
    forward = now;
  }
}

Construction build_h_two_thirds(const Graph& g, const Orientation& d) {
  VertexOrdering ord = minimize_forward_edges(g, d);
  const auto m = EdgeVertexMatrix::ordered(g, ord, 1, -2);
  std::vector<Rational> y(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Arc& a = d.arc(e);
    if (ord.before(a.tail, a.head)) y[e] = Rational(2, 3);
  }
  auto bits = round(m, FractionalEdgeVector(std::move(y)));
  return {std::move(ord), subgraph_from_bits(g, std::move(bits))};
}

int two_thirds_guarantee(int out_degree) { return (2 * out_degree) / 3 - 1; }

bool greater_than_sqrt2_minus_1(const Rational& q) {
  const Rational shifted = q + 1;
  return sgn(shifted) > 0 && shifted * shifted > 2;
}

bool less_than_sqrt2_minus_1(const Rational& q) {
  const Rational shifted = q + 1;
  return sgn(shifted) < 0 || shifted * shifted < 2;
}

bool random_vertex_accepted(const Rational& gamma, int degree, long weight) {
  if (degree == 0) return true;
  // (a - 2 gamma) d < w  <=>  a < w / d + 2 gamma.
  Rational ratio(weight, degree);
  ratio.canonicalize();
  return greater_than_sqrt2_minus_1(ratio + 2 * gamma);
}

long random_guarantee(const Rational& gamma, int degree) {
  if (degree == 0) return 0;
  // k <= (a - 2 gamma) d  <=>  (k + 2 gamma d) / d < a, the bound being irrational.
  const auto fits = [&](long k) { return less_than_sqrt2_minus_1((Rational(k) + 2 * gamma * degree) / degree); };
  long k = static_cast<long>(std::floor((std::sqrt(2.0) - 1.0 - 2.0 * gamma.get_d()) * degree));
  while (!fits(k)) --k;
  while (fits(k + 1)) ++k;
  return k;
}

RandomResult build_h_random(const Graph& g, const RandomOptions& options) {
  if (sgn(options.gamma) <= 0 || options.gamma >= 1)
    throw std::invalid_argument("build_h_random: gamma must lie in (0, 1)");
  if (options.max_attempts <= 0) throw std::invalid_argument("build_h_random: need at least one attempt");

  std::mt19937_64 rng(options.seed);
  const int n = g.num_vertices();
  RandomFailure failure;

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<std::uint64_t> phi(n);
    std::unordered_set<std::uint64_t> seen;
    for (Vertex v = 0; v < n; ++v) {
      do {
        phi[v] = rng();
      } while (!seen.insert(phi[v]).second);
    }
    std::vector<Vertex> seq(n);
    for (Vertex v = 0; v < n; ++v) seq[v] = v;
    std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return phi[a] < phi[b]; });
    VertexOrdering ord(std::move(seq));

    std::vector<bool> bits(g.num_edges(), false);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.edge(e);
      const std::uint64_t coin = rng();
      const std::uint64_t left = std::min(phi[u], phi[v]);
      const std::uint64_t right = std::max(phi[u], phi[v]);
      bits[e] = in_region(left, right) && coin_accepts(coin);
    }
    Subgraph h(g, std::move(bits));

    const auto weights = certificate_weights(g, ord, h);
    std::vector<bool> ok(n);
    int violations = 0;
    for (Vertex v = 0; v < n; ++v) {
      ok[v] = random_vertex_accepted(options.gamma, g.degree(v), weights[v]);
      if (!ok[v]) ++violations;
    }
    if (violations == 0) return RandomSuccess{{std::move(ord), std::move(h)}, attempt};
    if (failure.worst_attempt < 0 || violations > failure.violations) {
      failure.worst_attempt = attempt;
      failure.weights = weights;
      failure.vertex_ok = ok;
      failure.violations = violations;
    }
  }
  failure.attempts = options.max_attempts;
  return failure;
}

}  // namespace orient
