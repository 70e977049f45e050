#include "apollon/minkowski.hpp"

namespace apollon {

Int quadratic_form_value(const DescartesQuadruple& q) {
  Int s = q.sum();
  Int sq = q.b[0] * q.b[0] + q.b[1] * q.b[1] + q.b[2] * q.b[2] + q.b[3] * q.b[3];
  return s * s - 2 * sq;
}

MinkowskiVector diagonalize(const ParamTuple& t) {
  MinkowskiVector v;
  v.x = Rat(t.B);
  v.y = Rat(t.mu);
  v.z = make_rat(t.n - t.k, 2);
  v.t = make_rat(t.n + t.k, 2);
  return v;
}

namespace {

PlanePoint stereographic(const MinkowskiVector& v, int pole_sign) {
  if (v.t <= 0)
    throw DomainError(Err::PoleProjection, "stereographic: t <= 0");
  Rat xp = v.x / v.t;
  Rat yp = v.y / v.t;
  Rat zp = v.z / v.t;
  Rat den = pole_sign > 0 ? Rat(Rat(1) - zp) : Rat(Rat(1) + zp);
  if (den == 0)
    throw DomainError(Err::PoleProjection, "stereographic: projection from pole");
  return PlanePoint{xp / den, yp / den};
}

}  // namespace

PlanePoint celestial_north(const MinkowskiVector& v) { return stereographic(v, +1); }
PlanePoint celestial_south(const MinkowskiVector& v) { return stereographic(v, -1); }

PlanePoint modular_point(const ParamTuple& t) {
  if (t.k < 1) throw DomainError(Err::ZeroK, "modular_point: k < 1");
  return PlanePoint{make_rat(t.mu, t.k), make_rat(t.B, t.k)};
}

PlanePoint mobius_act(const Mat2& m, const PlanePoint& z) {
  Int det = m.det();
  if (det != 1 && det != -1)
    throw DomainError(Err::UsageError, "mobius_act: matrix determinant not +-1");
  // (az+b)(conj(cz+d)) / |cz+d|^2
  Rat nre = m.a * z.re + m.b;
  Rat nim = m.a * z.im;
  Rat dre = m.c * z.re + m.d;
  Rat dim = m.c * z.im;
  Rat norm = dre * dre + dim * dim;
  if (norm == 0) throw DomainError(Err::PoleImage, "mobius_act: cz+d = 0");
  return PlanePoint{(nre * dre + nim * dim) / norm, (nim * dre - nre * dim) / norm};
}

bool coincidence_check(const ParamTuple& t) {
  if (t.k < 1 || t.n < 1) return false;
  MinkowskiVector v = diagonalize(t);

  PlanePoint north = celestial_north(v);
  PlanePoint z = modular_point(t);
  if (!(north == PlanePoint{z.im, z.re})) return false;

  PlanePoint south = celestial_south(v);
  PlanePoint w = mobius_act(Mat2{0, -1, 1, 0}, z);
  w.re = -w.re;  // reflection onto the right half of the triangular region
  return south == PlanePoint{w.im, w.re};
}

HermitianMatrix2 hermitian_from_spinors(const Spinor& a, const Spinor& b) {
  return HermitianMatrix2{norm_sq(a), norm_sq(b), dot(a, b), cross(a, b)};
}

HermitianMatrix2 hermitian_from_params(const ParamTuple& t) {
  return HermitianMatrix2{t.k, t.n, t.mu, t.B};
}

HermitianMatrix2 hermitian_from_curvatures(const DescartesQuadruple& q) {
  Int twice_mu = q.b[0] + q.b[1] + q.b[2] - q.b[3];
  if (mpz_odd_p(twice_mu.get_mpz_t()))
    throw DomainError(Err::NonIntegralMu,
                      "hermitian_from_curvatures: b0+b1+b2-b3 odd");
  return HermitianMatrix2{q.b[0] + q.b[1], q.b[0] + q.b[2], twice_mu / 2, -q.b[0]};
}

ProjectivePoint projective_point(const Spinor& a, const Spinor& b) {
  if (a.is_zero() && b.is_zero())
    throw DomainError(Err::BothZero, "projective_point: both spinors zero");
  if (a.is_zero()) return ProjectivePoint{true, {}};
  Int na = norm_sq(a);
  return ProjectivePoint{false, PlanePoint{make_rat(dot(a, b), na), make_rat(cross(a, b), na)}};
}

std::vector<DustPoint> dust_dataset(const Int& bmax, Projection proj) {
  std::vector<DustPoint> out;
  for (const ClassificationRow& row : enumerate_range(bmax)) {
    MinkowskiVector v = diagonalize(row.params);
    PlanePoint p = proj == Projection::North ? celestial_north(v) : celestial_south(v);
    out.push_back(DustPoint{row.params, p.re, p.im});
  }
  return out;
}

}  // namespace apollon
