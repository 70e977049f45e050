#include "apollon/spinor.hpp"

#include <doctest.h>

#include <random>

using namespace apollon;

TEST_CASE("dot product") {
  CHECK(dot(Spinor(1, -2), Spinor(2, 2)) == -2);
  CHECK(dot(Spinor(0, 0), Spinor(5, 7)) == 0);
  CHECK(dot(Spinor(3, 4), Spinor(3, 4)) == 25);
}

TEST_CASE("cross product") {
  CHECK(cross(Spinor(1, -2), Spinor(2, 2)) == 6);
  CHECK(cross(Spinor(5, 2), Spinor(7, 4)) == 6);
  Spinor a(13, -7);
  CHECK(cross(a, a) == 0);
}

TEST_CASE("symplectic conjugation") {
  CHECK(symp_conj(Spinor(1, 0)) == Spinor(0, 1));
  CHECK(symp_conj(symp_conj(Spinor(3, 5))) == Spinor(-3, -5));
  // a x b == a* . b
  Spinor a(2, 3), b(4, 1);
  CHECK(cross(a, b) == dot(symp_conj(a), b));
  CHECK(cross(a, b) == -10);
}

TEST_CASE("componentwise arithmetic and norm") {
  CHECK(Spinor(1, -2) + Spinor(2, 2) == Spinor(3, 0));
  CHECK(Spinor(1, -2) - Spinor(2, 2) == Spinor(-1, -4));
  CHECK(norm_sq(Spinor(1, -2)) == 5);
  CHECK(-Spinor(1, -2) == Spinor(-1, 2));
}

TEST_CASE("algebraic identities on random spinors") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    Spinor a(coord(rng), coord(rng));
    Spinor b(coord(rng), coord(rng));
    Int c = cross(a, b), d = dot(a, b);
    // Lagrange identity
    CHECK(c * c + d * d == norm_sq(a) * norm_sq(b));
    CHECK(cross(a, b) == -cross(b, a));
    CHECK(dot(symp_conj(a), symp_conj(b)) == dot(a, b));
    CHECK(cross(symp_conj(a), symp_conj(b)) == cross(a, b));
    CHECK(cross(symp_conj(a), b) == cross(symp_conj(b), a));
    CHECK(dot(a, symp_conj(a)) == 0);
    CHECK(dot(a, b) == cross(a, symp_conj(b)));
  }
}

TEST_CASE("no silent overflow at large magnitudes") {
  Int big("123456789123456789123456789");
  Spinor a(big, -big), b(big + 1, big - 1);
  CHECK(cross(a, b) * cross(a, b) + dot(a, b) * dot(a, b) == norm_sq(a) * norm_sq(b));
}
