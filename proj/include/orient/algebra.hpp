#pragma once

#include <span>
#include <vector>

#include "orient/graph.hpp"
#include "orient/rational.hpp"

namespace orient {

using ExactMatrix = RationalMatrix;
using MultiplicityVector = std::vector<int>;

/// Signed incidence matrix of the acyclic orientation induced by `ord`:
/// column of edge v_i v_j (i < j) is +1 at v_i and -1 at v_j.
ExactMatrix incidence_matrix(const Graph& g, const VertexOrdering& ord);

/// A^{alpha,beta}: row i repeated alpha_i times, then column j repeated
/// beta_j times.
ExactMatrix multiplied_matrix(const ExactMatrix& a, std::span<const int> alpha, std::span<const int> beta);

/// Ryser's formula with Gray-code row-sum updates over exact integers.
/// Rational matrices are scaled row-wise to integers first. perm of the
/// 0x0 matrix is 1.
Rational permanent(const ExactMatrix& a);

/// Largest permanent order accepted by `permanent` before the guard trips.
inline constexpr int kPermanentGuard = 22;

/// Monomial coefficients of the dual polynomials
///   g  = prod_i (sum_j a_ij y_j)^alpha_i,
///   g* = prod_j (sum_i a_ij x_i)^beta_j.
struct DualCoefficients {
  Rational permanent;  // perm(A^{alpha,beta})
  Rational coeff_y;    // coeff(y^beta, g)
  Rational coeff_x;    // coeff(x^alpha, g*)
};

/// Both coefficients from one permanent; requires |alpha|_1 == |beta|_1.
DualCoefficients coeff_via_permanent(const ExactMatrix& a, std::span<const int> alpha, std::span<const int> beta);

/// Both coefficients by direct polynomial expansion. `permanent` is filled
/// as (prod beta_j!) coeff_y. Guarded at |alpha|_1, |beta|_1 <= 12.
DualCoefficients naive_coeff(const ExactMatrix& a, std::span<const int> alpha, std::span<const int> beta);

struct EulerianCounts {
  long long even = 0;
  long long odd = 0;
};

/// Number of even and odd arc subsets of `d` in which every vertex has equal
/// in- and out-degree. The empty subset is even. Guarded at 26 arcs.
EulerianCounts eulerian_counts(const Orientation& d);

/// EE(D) - EO(D).
long long eulerian_diff(const Orientation& d);

/// Alon-Tarsi certificate: `d` orients exactly the edges of `h` (in
/// increasing edge order), EE(d) != EO(d), and |F(v)| <= deg+_d(v) for all v.
bool at_condition_check(const Graph& g, const Subgraph& h, const Orientation& d, const ForbiddenSets& f);

/// Least k such that some orientation with EE != EO has maximum
/// out-degree below k. Guarded at 20 edges.
int at_number(const Graph& g);

/// Z_p-connectivity certificate. `h_arcs` is an oriented edge multiset of
/// G^(p-2): every arc must join the endpoints of an edge of `g`, and no edge
/// may be used more than p - 2 times. Accepts iff |H| = (p-1)(n-1), every
/// vertex other than `u` has out-degree p - 1, and EE - EO is nonzero mod p.
bool zp_certificate(const Graph& g, int p, std::span<const Arc> h_arcs, Vertex u);

/// Rows are the b-subsets and columns the d-subsets of {0, ..., ground-1},
/// both in lexicographic order; entry 1 iff the column set is contained in
/// the row set.
ExactMatrix inclusion_matrix(int ground, int d, int b);

}  // namespace orient
