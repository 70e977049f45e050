#include "apollon/minkowski.hpp"

#include "apollon/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace apollon;

TEST_CASE("quadratic_form_value") {
  CHECK(quadratic_form_value(DescartesQuadruple(-6, 11, 14, 15)) == 0);
  CHECK(quadratic_form_value(DescartesQuadruple(1, 1, 1, 1)) == 8);
  CHECK(quadratic_form_value(DescartesQuadruple(0, 0, 0, 0)) == 0);
}

TEST_CASE("quadratic form vanishes exactly on Descartes quadruples") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coord(-200, 200);
  for (int i = 0; i < 100000; ++i) {
    DescartesQuadruple q(coord(rng), coord(rng), coord(rng), coord(rng));
    CHECK((quadratic_form_value(q) == 0) == is_descartes(q));
  }
}

TEST_CASE("diagonalize") {
  MinkowskiVector v = diagonalize(ParamTuple{6, 5, 8, 2});
  CHECK(v.x == 6);
  CHECK(v.y == 2);
  CHECK(v.z == make_rat(3, 2));
  CHECK(v.t == make_rat(13, 2));
  CHECK(v.is_null());

  CHECK(diagonalize(ParamTuple{1, 1, 1, 0}).is_null());
  MinkowskiVector unit = diagonalize(ParamTuple{1, 1, 1, 0});
  CHECK(unit.x == 1);
  CHECK(unit.t == 1);
  CHECK(unit.z == 0);

  MinkowskiVector zero = diagonalize(ParamTuple{0, 0, 0, 0});
  CHECK(zero.is_null());
  CHECK(zero.t == 0);
}

TEST_CASE("celestial projections") {
  MinkowskiVector v = diagonalize(ParamTuple{6, 5, 8, 2});
  PlanePoint north = celestial_north(v);
  CHECK(north.re == make_rat(6, 5));
  CHECK(north.im == make_rat(2, 5));
  PlanePoint south = celestial_south(v);
  CHECK(south.re == make_rat(3, 4));
  CHECK(south.im == make_rat(1, 4));

  PlanePoint n1 = celestial_north(diagonalize(ParamTuple{1, 1, 1, 0}));
  CHECK(n1.re == 1);
  CHECK(n1.im == 0);

  // strip tuple has k = 0: north pole
  CHECK_THROWS_AS(celestial_north(diagonalize(ParamTuple{0, 0, 1, 0})), DomainError);
  CHECK_THROWS_AS(celestial_north(diagonalize(ParamTuple{0, 0, 0, 0})), DomainError);
}

TEST_CASE("modular_point") {
  PlanePoint z = modular_point(ParamTuple{6, 5, 8, 2});
  CHECK(z.re == make_rat(2, 5));
  CHECK(z.im == make_rat(6, 5));
  CHECK(z.re * z.re + z.im * z.im == make_rat(8, 5));

  PlanePoint corner = modular_point(ParamTuple{1, 1, 1, 0});
  CHECK(corner.re == 0);
  CHECK(corner.im == 1);

  PlanePoint tall = modular_point(ParamTuple{6, 1, 36, 0});
  CHECK(tall.re == 0);
  CHECK(tall.im == 6);

  CHECK_THROWS_AS(modular_point(ParamTuple{0, 0, 1, 0}), DomainError);
}

TEST_CASE("modular points of enumerated tuples stay in the belt") {
  for (const ClassificationRow& row : enumerate_range(40)) {
    PlanePoint z = modular_point(row.params);
    CHECK(z.im > 0);
    CHECK(z.re >= 0);
    CHECK(z.re <= make_rat(1, 2));
    CHECK(z.re * z.re + z.im * z.im >= 1);
  }
}

TEST_CASE("mobius_act") {
  PlanePoint z{make_rat(2, 5), make_rat(6, 5)};
  CHECK(mobius_act(Mat2{1, 0, 0, 1}, z) == z);
  CHECK(mobius_act(Mat2{1, 1, 0, 1}, PlanePoint{Rat(0), Rat(1)}) ==
        PlanePoint{Rat(1), Rat(1)});

  // -1/z for the worked tuple, then reflect re: (mu/n, B/n)
  PlanePoint w = mobius_act(Mat2{0, -1, 1, 0}, z);
  CHECK(PlanePoint{-w.re, w.im} == PlanePoint{make_rat(2, 8), make_rat(6, 8)});

  CHECK_THROWS_AS(mobius_act(Mat2{1, 2, 3, 4}, z), DomainError);  // det != +-1
  CHECK_THROWS_AS(mobius_act(Mat2{0, -1, 1, 0}, PlanePoint{Rat(0), Rat(0)}),
                  DomainError);  // pole
}

TEST_CASE("coincidence of celestial and modular pictures") {
  CHECK(coincidence_check(ParamTuple{6, 5, 8, 2}));
  CHECK(coincidence_check(ParamTuple{1, 1, 1, 0}));
  for (const ClassificationRow& row : enumerate_range(50))
    CHECK(coincidence_check(row.params));
}

TEST_CASE("hermitian forms") {
  HermitianMatrix2 h = hermitian_from_spinors(Spinor(1, -2), Spinor(2, 2));
  CHECK(h.diag_k == 5);
  CHECK(h.diag_n == 8);
  CHECK(h.off_mu == -2);
  CHECK(h.off_B == 6);
  CHECK(h.det() == 0);

  HermitianMatrix2 id = hermitian_from_spinors(Spinor(1, 0), Spinor(0, 1));
  CHECK(id.diag_k == 1);
  CHECK(id.diag_n == 1);
  CHECK(id.off_mu == 0);
  CHECK(id.off_B == 1);
  CHECK(id.det() == 0);

  // curvature form: equals the spinor form up to the sign of mu
  HermitianMatrix2 hc = hermitian_from_curvatures(DescartesQuadruple(-6, 11, 14, 15));
  CHECK(hc.diag_k == 5);
  CHECK(hc.diag_n == 8);
  CHECK(hc.off_mu == 2);
  CHECK(hc.off_B == 6);
  CHECK(hc.det() == 0);
  CHECK(hc.off_mu == -h.off_mu);

  CHECK(hermitian_from_params(ParamTuple{6, 5, 8, 2}).det() == 0);
}

TEST_CASE("hermitian determinant vanishes for random spinor pairs") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coord(-500, 500);
  for (int i = 0; i < 20000; ++i) {
    HermitianMatrix2 h = hermitian_from_spinors(Spinor(coord(rng), coord(rng)),
                                                Spinor(coord(rng), coord(rng)));
    CHECK(h.det() == 0);
  }
}

TEST_CASE("curvature and spinor hermitian forms agree on enumerated rows") {
  for (const ClassificationRow& row : enumerate_range(30)) {
    auto [a, b] = principal_spinors_for(row.params);
    HermitianMatrix2 hs = hermitian_from_spinors(a, b);
    HermitianMatrix2 hc = hermitian_from_curvatures(row.quad_main);
    CHECK(hs.equal_up_to_conjugation(hc));
    CHECK(hs.equal_up_to_conjugation(hermitian_from_params(row.params)));
  }
}

TEST_CASE("projective_point") {
  ProjectivePoint p = projective_point(Spinor(1, 0), Spinor(0, 1));
  REQUIRE_FALSE(p.at_infinity);
  CHECK(p.z == PlanePoint{Rat(0), Rat(1)});

  ProjectivePoint q = projective_point(Spinor(1, -2), Spinor(2, 2));
  REQUIRE_FALSE(q.at_infinity);
  CHECK(q.z == PlanePoint{make_rat(-2, 5), make_rat(6, 5)});

  CHECK(projective_point(Spinor(0, 0), Spinor(1, 0)).at_infinity);
  CHECK_THROWS_AS(projective_point(Spinor(0, 0), Spinor(0, 0)), DomainError);

  // |im| equals the modular point's B/k on a principal pair
  auto [a, b] = principal_spinors_for(ParamTuple{6, 5, 8, 2});
  ProjectivePoint r = projective_point(a, b);
  REQUIRE_FALSE(r.at_infinity);
  CHECK(abs(r.z.im) == modular_point(ParamTuple{6, 5, 8, 2}).im);
  CHECK(r.z.re == modular_point(ParamTuple{6, 5, 8, 2}).re);
}

TEST_CASE("dust_dataset") {
  auto north = dust_dataset(1, Projection::North);
  REQUIRE(north.size() == 1);
  CHECK(north[0].X == 1);
  CHECK(north[0].Y == 0);

  auto pts = dust_dataset(50, Projection::North);
  size_t rows = 0;
  for (Int B = 1; B <= 50; ++B) rows += solve_params(B).size();
  CHECK(pts.size() == rows);
  // maximality bound: X > 0 and 0 <= Y <= X/sqrt(3), i.e. 3Y^2 <= X^2
  for (const DustPoint& p : pts) {
    CHECK(p.X > 0);
    CHECK(p.Y >= 0);
    CHECK(3 * p.Y * p.Y <= p.X * p.X);
  }
}
