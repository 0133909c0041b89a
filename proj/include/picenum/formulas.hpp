#pragma once

#include <utility>
#include <vector>

#include "picenum/plaurent.hpp"
#include "picenum/rational.hpp"
#include "picenum/symfunc.hpp"

namespace picenum {

enum class Kind { weight0, top };

// Bounds (m_max, k_max) under which the weight-zero enumeration is complete.
//
// Derivation: every admissible d_i is a proper divisor of m, so d_i <= m/2 and
// k*m + 1 - g = sum a_i d_i <= (k+1) m/2, giving m(k-1) <= 2(g-1) for k >= 2.
// For k = 1: with s = 1 the constraints force d_1 = 1 and m = g + 1; with
// s >= 2 the two largest proper divisors satisfy d_s <= m/2, d_{s-1} <= m/3,
// so m + 1 - g = sum a_i d_i <= m/2 + m/3 and m <= 6(g-1).  Hence
// m_max = max(g+1, 6(g-1)) and k_max = g.  The doubling check in the verify
// suite guards this derivation.
std::pair<long long, long long> wz_enumeration_bounds(int g);

// The weight-zero generating function for genus g >= 2: a finite Laurent
// polynomial, homogeneous of degree 1-g with every exponent sum equal to 1.
Laurent weight_zero_jacobian(int g);

// Same enumeration with explicit bounds (for the doubling check).
Laurent weight_zero_jacobian_bounded(int g, long long m_max, long long k_max);

// Cyclic-cover count N(r; k_1..k_{r-1}) by the closed divisor-sum formula.
// k[i] holds k_i for 1 <= i <= r-1 (k[0] unused); requires i | r when k_i > 0.
Int n_count_closed(int r, const std::vector<int>& k);

// The same count by direct dynamic programming over residue sums mod r:
// tuples (x_1..x_s) in (Z/r)^s with sum 0 and gcd(r, x_t) prescribed.
Int n_count_oracle(int r, const std::vector<int>& k);

// The topological generating function for genus g >= 2: homogeneous of degree
// 2-2g with every exponent sum equal to 2.  When cross_check is set, every
// N value is recomputed with the oracle and a mismatch throws.
Laurent topological_jacobian(int g, bool cross_check = false);

// Euler characteristic of the unmarked moduli: all P_j -> 1.
Rat chi_pic(int g, Kind kind);

// chi for n = 0..max_n marked points: n! times the t^n coefficient after
// P_1 -> 1 + t, P_j -> 1 (j > 1).
std::vector<Rat> chi_series(int g, Kind kind, int max_n);

// Degree-n part of the expansion P_j -> 1 + p_j: the Frobenius
// characteristic of the virtual S_n-representation.
SymSeries equivariant_chi(int g, Kind kind, int n);

}  // namespace picenum
