#pragma once

// Minkowski-space view of Descartes quadruples: the quadratic form, its
// diagonalization, celestial-sphere and modular-plane projections, and the
// rank-1 Hermitian form of a spinor pair. All projection arithmetic is
// exact rational; decimals appear only at CSV serialization.

#include "apollon/descartes.hpp"
#include "apollon/enumerate.hpp"
#include "apollon/spinor.hpp"

#include <utility>
#include <vector>

namespace apollon {

struct MinkowskiVector {
  Rat x, y, z, t;
  bool is_null() const { return x * x + y * y + z * z - t * t == 0; }
};

// [[k, mu - iB], [mu + iB, n]]
struct HermitianMatrix2 {
  Int diag_k, diag_n, off_mu, off_B;

  Int det() const { return diag_k * diag_n - off_mu * off_mu - off_B * off_B; }
  bool operator==(const HermitianMatrix2& o) const {
    return diag_k == o.diag_k && diag_n == o.diag_n && off_mu == o.off_mu &&
           off_B == o.off_B;
  }
  // equal up to complex conjugation of the off-diagonal entry
  bool equal_up_to_conjugation(const HermitianMatrix2& o) const {
    return diag_k == o.diag_k && diag_n == o.diag_n && off_mu == o.off_mu &&
           (off_B == o.off_B || off_B == -o.off_B);
  }
};

struct PlanePoint {
  Rat re, im;
  bool operator==(const PlanePoint& o) const { return re == o.re && im == o.im; }
};

// B^T Q B with Q = (-1 on the diagonal, +1 off); zero iff q is Descartes.
Int quadratic_form_value(const DescartesQuadruple& q);

// (x,y,z,t) = (B, mu, (n-k)/2, (n+k)/2); null whenever B^2+mu^2 = kn.
MinkowskiVector diagonalize(const ParamTuple& t);

// Stereographic projection through the full chain (x',y',z') = (x,y,z)/t
// then (X,Y) = (x',y')/(1 -+ z'). Requires t > 0; throws PoleProjection
// when the projected point sits at the pole. For diagonalized tuples the
// closed forms are (B/k, mu/k) north and (B/n, mu/n) south.
PlanePoint celestial_north(const MinkowskiVector& v);
PlanePoint celestial_south(const MinkowskiVector& v);

// z = mu/k + (B/k) i. Throws ZeroK when k = 0. For maximal tuples the point
// lies in the belt im > 0, 0 <= re <= 1/2, |z| >= 1.
PlanePoint modular_point(const ParamTuple& t);

struct Mat2 {
  Int a, b, c, d;
  Int det() const { return a * d - b * c; }
};

// z -> (az+b)/(cz+d), exact. Requires |det| = 1; throws PoleImage when
// cz+d = 0.
PlanePoint mobius_act(const Mat2& m, const PlanePoint& z);

// Executable witness that the celestial projections coincide with the
// modular picture: north matches (im,re) of z, south matches (im,re) of the
// re-reflected image of -1/z. Requires k, n >= 1.
bool coincidence_check(const ParamTuple& t);

HermitianMatrix2 hermitian_from_spinors(const Spinor& a, const Spinor& b);
HermitianMatrix2 hermitian_from_params(const ParamTuple& t);
// Curvature form (positional, q[0] is the major curvature):
// diag (b0+b1, b0+b2), off (b0+b1+b2-b3)/2 with off_B = -b0.
HermitianMatrix2 hermitian_from_curvatures(const DescartesQuadruple& q);

struct ProjectivePoint {
  bool at_infinity{false};
  PlanePoint z;  // valid when !at_infinity
};

// b/a as exact Gaussian rationals: ((a.b) + (a x b) i)/|a|^2.
// a = 0 gives the point at infinity; both zero throws BothZero.
ProjectivePoint projective_point(const Spinor& a, const Spinor& b);

enum class Projection { North, South };

struct DustPoint {
  ParamTuple params;
  Rat X, Y;
};

// One projected point per classification row of enumerate_range(bmax),
// in (B, mu, k) order.
std::vector<DustPoint> dust_dataset(const Int& bmax, Projection proj);

}  // namespace apollon
