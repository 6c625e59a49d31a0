#include "orient/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "orient/guard.hpp"

namespace orient {

namespace {

long norm1(std::span<const int> v) {
  long s = 0;
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("multiplicity vector has a negative entry");
    s += x;
  }
  return s;
}

BigInt factorial_product(std::span<const int> v) {
  BigInt p = 1;
  for (int x : v) p *= factorial(x);
  return p;
}

// Ryser over machine integers; caller guarantees no intermediate overflow.
BigInt ryser_small(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<__int128> row_sum(n, 0);
  __int128 total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const int col = __builtin_ctzll(step);
    const std::uint64_t gray = step ^ (step >> 1);
    const bool added = (gray >> col) & 1U;
    for (int i = 0; i < n; ++i) row_sum[i] += added ? a[i][col] : -a[i][col];
    __int128 prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if (__builtin_popcountll(gray) % 2 == 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  if (n % 2 == 1) total = -total;
  // __int128 -> mpz through two 64-bit halves.
  const bool negative = total < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-total) : static_cast<unsigned __int128>(total);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  BigInt r = (hi << 64) + lo;
  return negative ? BigInt(-r) : r;
}

BigInt ryser_big(const std::vector<std::vector<BigInt>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<BigInt> row_sum(n, 0);
  BigInt total = 0;
  BigInt prod;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const int col = __builtin_ctzll(step);
    const std::uint64_t gray = step ^ (step >> 1);
    const bool added = (gray >> col) & 1U;
    for (int i = 0; i < n; ++i) {
      if (added) {
        row_sum[i] += a[i][col];
      } else {
        row_sum[i] -= a[i][col];
      }
    }
    prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if (__builtin_popcountll(gray) % 2 == 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  if (n % 2 == 1) total = -total;
  return total;
}

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Rational>;

// Coefficient of prod z_j^target_j in prod_i (sum_j c_ij z_j)^power_i, where
// c_ij = coeffs(i, j). Terms exceeding the target exponent are discarded
// since later factors can only raise exponents.
Rational expand_coefficient(const ExactMatrix& coeffs, std::span<const int> power, std::span<const int> target) {
  const int vars = coeffs.cols();
  Polynomial poly;
  poly.emplace(Monomial(vars, 0), Rational(1));
  for (int i = 0; i < coeffs.rows(); ++i) {
    for (int rep = 0; rep < power[i]; ++rep) {
      Polynomial next;
      for (const auto& [mono, c] : poly) {
        for (int j = 0; j < vars; ++j) {
          if (sgn(coeffs(i, j)) == 0 || mono[j] >= target[j]) continue;
          Monomial m = mono;
          ++m[j];
          next[m] += c * coeffs(i, j);
        }
      }
      std::erase_if(next, [](const auto& kv) { return sgn(kv.second) == 0; });
      poly = std::move(next);
    }
  }
  const auto it = poly.find(Monomial(target.begin(), target.end()));
  return it == poly.end() ? Rational(0) : it->second;
}

void check_dims(const ExactMatrix& a, std::span<const int> alpha, std::span<const int> beta, const char* who) {
  if (static_cast<int>(alpha.size()) != a.rows() || static_cast<int>(beta.size()) != a.cols())
    throw std::invalid_argument(std::string(who) + ": multiplicity vectors do not match matrix dimensions");
}

struct EulerianSearch {
  std::vector<Arc> arcs;
  std::vector<int> balance;
  std::vector<int> remaining;
  EulerianCounts counts;

  void run(std::size_t i, int chosen) {
    if (i == arcs.size()) {
      if (chosen % 2 == 0) {
        ++counts.even;
      } else {
        ++counts.odd;
      }
      return;
    }
    const auto [t, h] = arcs[i];
    --remaining[t];
    --remaining[h];
    if (std::abs(balance[t]) <= remaining[t] && std::abs(balance[h]) <= remaining[h]) run(i + 1, chosen);
    ++balance[t];
    --balance[h];
    if (std::abs(balance[t]) <= remaining[t] && std::abs(balance[h]) <= remaining[h]) run(i + 1, chosen + 1);
    --balance[t];
    ++balance[h];
    ++remaining[t];
    ++remaining[h];
  }
};

void combinations(int ground, int size, int start, std::uint32_t mask, std::vector<std::uint32_t>& out) {
  if (size == 0) {
    out.push_back(mask);
    return;
  }
  for (int x = start; x <= ground - size; ++x) combinations(ground, size - 1, x + 1, mask | (1U << x), out);
}

}  // namespace

ExactMatrix incidence_matrix(const Graph& g, const VertexOrdering& ord) {
  if (ord.size() != g.num_vertices()) throw std::invalid_argument("incidence_matrix: ordering length mismatch");
  ExactMatrix m(g.num_vertices(), g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge(e);
    if (ord.before(b, a)) std::swap(a, b);
    m(a, e) = 1;
    m(b, e) = -1;
  }
  return m;
}

ExactMatrix multiplied_matrix(const ExactMatrix& a, std::span<const int> alpha, std::span<const int> beta) {
  check_dims(a, alpha, beta, "multiplied_matrix");
  std::vector<int> rows;
  std::vector<int> cols;
  for (int i = 0; i < a.rows(); ++i) rows.insert(rows.end(), static_cast<std::size_t>(std::max(alpha[i], 0)), i);
  for (int j = 0; j < a.cols(); ++j) cols.insert(cols.end(), static_cast<std::size_t>(std::max(beta[j], 0)), j);
  norm1(alpha);
  norm1(beta);
  ExactMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < out.cols(); ++c) out(r, c) = a(rows[r], cols[c]);
  return out;
}

Rational permanent(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("permanent: matrix is not square");
  const int n = a.rows();
  if (n == 0) return 1;
  enforce_guard("permanent order", n, kPermanentGuard);
  if (n > 62) throw std::invalid_argument("permanent: order too large for subset enumeration");

  // Scale each row to integers; perm is multilinear in the rows.
  BigInt scale = 1;
  std::vector<std::vector<BigInt>> ints(n, std::vector<BigInt>(n));
  BigInt max_abs = 0;
  for (int i = 0; i < n; ++i) {
    BigInt den = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
    scale *= den;
    for (int j = 0; j < n; ++j) {
      ints[i][j] = a(i, j).get_num() * (den / a(i, j).get_den());
      max_abs = std::max(max_abs, BigInt(abs(ints[i][j])));
    }
  }

  // |row sum| <= n * max_abs, so every partial quantity stays below
  // 2^n * (n * max_abs)^n in magnitude.
  const double bits = n + n * std::log2(static_cast<double>(n) * std::max(1.0, max_abs.get_d()));
  BigInt result;
  if (bits < 120.0) {
    std::vector<std::vector<long long>> small(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) small[i][j] = ints[i][j].get_si();
    result = ryser_small(small);
  } else {
    result = ryser_big(ints);
  }
  Rational out(result, scale);
  out.canonicalize();
  return out;
}

DualCoefficients coeff_via_permanent(const ExactMatrix& a, std::span<const int> alpha, std::span<const int> beta) {
  check_dims(a, alpha, beta, "coeff_via_permanent");
  if (norm1(alpha) != norm1(beta)) throw std::invalid_argument("coeff_via_permanent: |alpha|_1 != |beta|_1");
  DualCoefficients out;
  out.permanent = permanent(multiplied_matrix(a, alpha, beta));
  out.coeff_y = out.permanent / Rational(factorial_product(beta));
  out.coeff_x = out.permanent / Rational(factorial_product(alpha));
  return out;
}

DualCoefficients naive_coeff(const ExactMatrix& a, std::span<const int> alpha, std::span<const int> beta) {
  check_dims(a, alpha, beta, "naive_coeff");
  enforce_guard("naive_coeff |alpha|_1", norm1(alpha), 12);
  enforce_guard("naive_coeff |beta|_1", norm1(beta), 12);
  DualCoefficients out;
  out.coeff_y = expand_coefficient(a, alpha, beta);
  out.coeff_x = expand_coefficient(a.transpose(), beta, alpha);
  out.permanent = out.coeff_y * Rational(factorial_product(beta));
  return out;
}

EulerianCounts eulerian_counts(const Orientation& d) {
  enforce_guard("eulerian subgraph enumeration arcs", d.num_arcs(), 26);
  EulerianSearch search;
  search.arcs.assign(d.arcs().begin(), d.arcs().end());
  // Arcs sorted by their later endpoint so vertices close out early.
  std::stable_sort(search.arcs.begin(), search.arcs.end(), [](const Arc& x, const Arc& y) {
    return std::max(x.tail, x.head) < std::max(y.tail, y.head);
  });
  search.balance.assign(d.num_vertices(), 0);
  search.remaining.assign(d.num_vertices(), 0);
  for (const Arc& a : search.arcs) {
    ++search.remaining[a.tail];
    ++search.remaining[a.head];
  }
  search.run(0, 0);
  return search.counts;
}

long long eulerian_diff(const Orientation& d) {
  const auto c = eulerian_counts(d);
  return c.even - c.odd;
}

bool at_condition_check(const Graph& g, const Subgraph& h, const Orientation& d, const ForbiddenSets& f) {
  if (h.host_edges() != g.num_edges()) throw std::invalid_argument("at_condition_check: subgraph is over a different graph");
  if (f.num_vertices() != g.num_vertices() || d.num_vertices() != g.num_vertices())
    throw std::invalid_argument("at_condition_check: vertex count mismatch");
  const auto ids = h.edge_ids();
  if (static_cast<int>(ids.size()) != d.num_arcs())
    throw std::invalid_argument("at_condition_check: orientation does not cover the subgraph's edges");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Edge& ed = g.edge(ids[i]);
    const Arc& a = d.arc(static_cast<int>(i));
    if (!((a.tail == ed.u && a.head == ed.v) || (a.tail == ed.v && a.head == ed.u)))
      throw std::invalid_argument("at_condition_check: arc " + std::to_string(i) + " does not orient its edge");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (f.size_at(v) > d.out_degree(v)) return false;
  }
  return eulerian_diff(d) != 0;
}

int at_number(const Graph& g) {
  const int m = g.num_edges();
  const int n = g.num_vertices();
  enforce_guard("at_number edges", m, 20);
  if (m == 0) return 1;

  // Any acyclic orientation has EE = 1, EO = 0, so best starts finite.
  const int floor_bound = (m + n - 1) / n + 1;
  int best = m + 1;
  std::vector<int> out(n, 0);
  std::vector<bool> reversed(m, false);

  const auto search = [&](auto&& self, EdgeId e, int max_out) -> void {
    if (best == floor_bound || max_out + 1 >= best) return;
    if (e == m) {
      if (eulerian_diff(Orientation(g, reversed)) != 0) best = max_out + 1;
      return;
    }
    for (const bool flip : {false, true}) {
      const Vertex tail = flip ? g.edge(e).v : g.edge(e).u;
      reversed[e] = flip;
      ++out[tail];
      self(self, e + 1, std::max(max_out, out[tail]));
      --out[tail];
    }
    reversed[e] = false;
  };
  search(search, 0, 0);
  return best;
}

bool zp_certificate(const Graph& g, int p, std::span<const Arc> h_arcs, Vertex u) {
  if (p != 3 && p != 5 && p != 7) throw std::invalid_argument("zp_certificate: p must be 3, 5 or 7");
  if (u < 0 || u >= g.num_vertices()) throw std::invalid_argument("zp_certificate: root vertex out of range");
  std::vector<int> multiplicity(g.num_edges(), 0);
  for (const Arc& a : h_arcs) {
    const auto e = g.find_edge(a.tail, a.head);
    if (!e) throw std::invalid_argument("zp_certificate: arc does not join adjacent vertices");
    if (++multiplicity[*e] > p - 2)
      throw std::invalid_argument("zp_certificate: edge used more than p - 2 times");
  }
  const int n = g.num_vertices();
  if (static_cast<long>(h_arcs.size()) != static_cast<long>(p - 1) * (n - 1)) return false;
  const Orientation d(n, std::vector<Arc>(h_arcs.begin(), h_arcs.end()));
  for (Vertex v = 0; v < n; ++v) {
    if (v != u && d.out_degree(v) != p - 1) return false;
  }
  return eulerian_diff(d) % p != 0;
}

ExactMatrix inclusion_matrix(int ground, int d, int b) {
  if (d < 0 || d > b || b > ground) throw std::invalid_argument("inclusion_matrix: need 0 <= d <= b <= ground");
  if (ground > 31) throw std::invalid_argument("inclusion_matrix: ground set too large");
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> cols;
  combinations(ground, b, 0, 0, rows);
  combinations(ground, d, 0, 0, cols);
  ExactMatrix q(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int r = 0; r < q.rows(); ++r)
    for (int c = 0; c < q.cols(); ++c) q(r, c) = (cols[c] & ~rows[r]) == 0 ? 1 : 0;
  return q;
}

}  // namespace orient
