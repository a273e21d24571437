#pragma once

#include <optional>

#include "multiplicity.hpp"

namespace buch {

// Explicit feasible lattice points and realizing matrices. Every constructor
// verifies feasibility and the claimed sum before returning and throws
// std::logic_error if its own output fails the check.

// counts[v] = Q for all v; feasible for b = (2^{k-1}-1)Q with all slacks 0.
MultiplicityVector uniform_point(int k, int64_t q);

// Q everywhere plus R extra at e_1; feasible for b, sum (2^k-1)Q + R.
MultiplicityVector excess_point(int k, int64_t b);

// Lattice point built from a hyperplane V = ker(v_dual, .) and a subspace
// U <= V of dimension l: Q+r at v_dual, Q where U <= v^perp, Q+1 elsewhere.
// Requires 2^{k-1}-2^{k-1-l} <= R < 2^{k-1}-2^{k-1-(l+1)}; feasible for
// b = (2^{k-1}-1)Q + R with sum (2^k-1)Q + R + 2^{k-1} - 2^{k-1-l}.
MultiplicityVector subspace_pair_point(int k, int64_t Q, int64_t R, const Gf2Vec& v_dual,
                                       const std::vector<Gf2Vec>& u_basis);
// Same with the canonical choice V = ker(e_k, .), U = span{e_1..e_l}.
MultiplicityVector subspace_pair_point(int k, int64_t Q, int64_t R, int l);

// Indicator of {v : (u0,v) != 0} with a small deletion set removed, u0 the
// all-ones vector; q in {1,2,4}, q=4 needs k even. Feasible for b = 2^{k-2}-q.
MultiplicityVector deleted_halfspace_point(int k, int q);
int64_t deleted_halfspace_sum(int k, int q);
inline int64_t deleted_halfspace_b(int k, int q) { return (int64_t(1) << (k - 2)) - q; }

// Embed a dim-k point as the low coordinates of dim k+1: Q + a_v on old
// vectors, Q+1 on the 2^k new ones. Input must be feasible for r_src
// (checked), r_src <= 2^{k-1}-2; output is feasible for
// (2^k-1)Q + 2^{k-1} + r_src with sum (2^{k+1}-1)Q + 2^k + sum(mv).
MultiplicityVector lift_dimension(const MultiplicityVector& mv, int64_t Q, int64_t r_src);

// Pointwise sum; feasible for b1+b2 whenever the inputs are for b1, b2.
MultiplicityVector combine(const MultiplicityVector& a, const MultiplicityVector& b);

// (e_1, ..., e_{m-1}, sum e_i): (m-1) x m, any m-1 columns span.
Gf2Mat basis_plus_sum_matrix(int m);

// p-1 copies of (e_1, e_2, e_1+e_2): 2 x 3(p-1), any p columns span.
Gf2Mat rank2_block_matrix(int p);

// The extremal 4x8 matrix (I_4 followed by the four weight-3 columns);
// any 5 columns span (Z/2)^4.
Gf2Mat rank4_extremal_matrix();

// Largest k with m+1 <= 2^{m-k}; the rank of all_but_two_matrix(m).
int codim2_rank(int m);

// k x m matrix in which any m-2 columns span (Z/2)^k, k = codim2_rank(m).
// Columns: e_1..e_k plus m-k tail columns encoding distinct >=2-subsets.
Gf2Mat all_but_two_matrix(int m);

// Append the sum of all columns (preserves "any p columns span" when m-p is
// even); used to realize p with one more column.
Gf2Mat append_column_sum(const Gf2Mat& a);

// Restriction of the all-but-two construction (with its column-sum extension)
// to dimension k, a feasible point of sum b+4 for b = k+j-3. Valid when
// 3 <= j <= k and k <= 2^j-1-j; returns nullopt if the self-check fails.
std::optional<MultiplicityVector> skeleton_point(int k, int64_t b);

// Drop the column equal to e_k (multiplicity must be >= 1) and project every
// column to the first k-1 coordinates. Feasible for b - count(e_k) when the
// input is feasible for b.
MultiplicityVector project_drop_top(const MultiplicityVector& mv);

}  // namespace buch
