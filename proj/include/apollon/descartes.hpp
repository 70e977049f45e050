#pragma once

// Descartes quadruples: validity, conjugation, construction from spinor
// pairs, corona curvatures, and the (B,k,n,mu) parameter correspondence.

#include "apollon/core.hpp"
#include "apollon/spinor.hpp"

#include <array>
#include <string>
#include <utility>

namespace apollon {

// Four curvatures. Positional: conjugate_at(i) is an involution at index i.
// Classification output is always emitted in ascending order; use sorted()
// when comparing as sets.
struct DescartesQuadruple {
  std::array<Int, 4> b{};

  DescartesQuadruple() = default;
  DescartesQuadruple(Int b0, Int b1, Int b2, Int b3)
      : b{std::move(b0), std::move(b1), std::move(b2), std::move(b3)} {}

  Int& operator[](int i) { return b[i]; }
  const Int& operator[](int i) const { return b[i]; }

  DescartesQuadruple sorted() const;
  Int sum() const { return b[0] + b[1] + b[2] + b[3]; }

  bool operator==(const DescartesQuadruple& o) const { return b == o.b; }
  bool operator<(const DescartesQuadruple& o) const { return b < o.b; }
};

std::string to_string(const DescartesQuadruple& q);

// Solution of B^2 + mu^2 = k*n. Maximal tuples additionally satisfy
// 3*mu^2 <= B^2 and 2*mu <= k <= n.
struct ParamTuple {
  Int B{0}, k{0}, n{0}, mu{0};

  bool satisfies_equation() const { return B * B + mu * mu == k * n; }
  bool satisfies_maximality() const {
    return mu >= 0 && 3 * mu * mu <= B * B && 2 * mu <= k && k <= n;
  }
  bool irreducible() const { return gcd(gcd(B, k), gcd(n, mu)) == 1; }

  bool operator==(const ParamTuple& o) const {
    return B == o.B && k == o.k && n == o.n && mu == o.mu;
  }
};

std::string to_string(const ParamTuple& t);

// 2(b0^2+b1^2+b2^2+b3^2) == (b0+b1+b2+b3)^2, exactly.
bool is_descartes(const DescartesQuadruple& q);

// The two completions of a tricycle: d = a+b+c +- 2*sqrt(ab+bc+ca).
// When the radicand is not a perfect square there is no integral completion
// and the exact radicand is reported instead.
struct FourthCurvatures {
  bool integral{false};
  Int plus, minus;   // valid when integral
  Int radicand;      // ab+bc+ca, always set
};

// Throws DomainError(NegativeRadicand) when ab+bc+ca < 0.
FourthCurvatures fourth_curvatures(const Int& a, const Int& b, const Int& c);

// Replace q[index] by 2*(sum of others) - q[index].
DescartesQuadruple conjugate_at(const DescartesQuadruple& q, int index);

// Prop-style construction: with B = |a x b|, the quadruples
// (-B, B+|a|^2, B+|b|^2, B+|a+b|^2) and (-B, B+|a|^2, B+|b|^2, B+|a-b|^2).
// Degenerate inputs (collinear or zero spinors) are allowed and produce
// strip-type quadruples.
std::pair<DescartesQuadruple, DescartesQuadruple> from_spinors(const Spinor& a,
                                                               const Spinor& b);

// Alternative quadruple from the same pair:
// (|b|^2 + a.b, |a|^2 + a.b, -a.b, |a|^2+|b|^2+a.b +- 2(a x b)).
std::pair<DescartesQuadruple, DescartesQuadruple> from_spinors_curl(const Spinor& a,
                                                                    const Spinor& b);

// |a x b| + |alpha*a + beta*b|^2, the curvature of the major-corona disk at
// mosaic point alpha*a + beta*b. Throws NotCoprime unless gcd(alpha,beta)=1.
Int corona_curvature(const Spinor& a, const Spinor& b, const Int& alpha, const Int& beta);

// B = -b0, k = b0+b1, n = b0+b2, mu = |b0+b1+b2-b3|/2 (positional; pass the
// quadruple with its major curvature first). Throws NotEverted if b0 > 0,
// NonIntegralMu if b0+b1+b2-b3 is odd.
ParamTuple to_params(const DescartesQuadruple& q);

// (-B, B+k, B+n, B+k+n-2mu, B+k+n+2mu)
std::array<Int, 5> quintet_from_params(const ParamTuple& t);

// (a x b)^2 + (a . b)^2 == |a|^2 |b|^2 — executable witness; always true.
bool spinorial_identity_holds(const Spinor& a, const Spinor& b);

}  // namespace apollon
