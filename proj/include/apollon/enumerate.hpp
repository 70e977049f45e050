#pragma once

// Classification of maximal irreducible integral Apollonian packings via
// B^2 + mu^2 = k*n, plus a brute-force reflection-descent oracle used to
// validate it.

#include "apollon/descartes.hpp"

#include <set>
#include <vector>

namespace apollon {

struct ClassificationRow {
  ParamTuple params;
  std::array<Int, 5> quintet;       // (B0..B4)
  DescartesQuadruple quad_main;     // (B0,B1,B2,B3)
  DescartesQuadruple quad_conj;     // (B0,B1,B2,B4)
};

ClassificationRow classification_row(const ParamTuple& t);

// All (k,n,mu) with B^2+mu^2 = kn, 3mu^2 <= B^2, 2mu <= k <= n,
// gcd(B,k,n,mu) = 1, ordered lexicographically by (mu,k). Exhaustive:
// mu scan + divisor scan of B^2+mu^2 up to its square root.
// B = 0 yields the single strip class (k,n,mu) = (0,1,0).
std::vector<ParamTuple> solve_params(const Int& B);

// solve_params expanded for B = 1..bmax, in (B, mu, k) order.
std::vector<ClassificationRow> enumerate_range(const Int& bmax);

// Repeatedly conjugate the largest curvature while that strictly decreases
// it; the fixed point is the packing's root quadruple, ascending.
DescartesQuadruple reflection_descend(const DescartesQuadruple& q);

// Independent validator: scan tricycles (-B, b1, b2) with -B < b1 <= b2 <=
// search_bound, complete integrally, reflection-descend, keep irreducible
// roots with b0 = -B. search_bound >= 4B^2 covers every root at this B
// (n <= (4/3)B^2 so B+n <= 4B^2 for B >= 1); that justification leans on the
// classification itself, so it stays a documented heuristic checked by the
// solve_params agreement suite. Internals run in 64-bit; search_bound must
// be <= 10^6.
std::set<DescartesQuadruple> oracle_root_quadruples(const Int& B, const Int& search_bound);
std::set<DescartesQuadruple> oracle_root_quadruples(const Int& B);  // bound = 4B^2

}  // namespace apollon
