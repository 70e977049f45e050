#pragma once

// Exact arithmetic base layer. All domain values are arbitrary-precision
// integers (Int) or rationals (Rat); floating point appears only in the
// real-valued spinor recovery and at serialization boundaries.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apollon {

using Int = mpz_class;
using Rat = mpq_class;

enum class Err {
  NegativeRadicand,
  NonIntegral,
  NotCoprime,
  NotEverted,
  NonIntegralMu,
  DegenerateLattice,
  InvalidTricycle,
  InvalidSpinor,
  NotTangent,
  NotDescartes,
  PoleProjection,
  ZeroK,
  PoleImage,
  BothZero,
  UsageError,
};

struct DomainError : std::runtime_error {
  Err code;
  DomainError(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Floor of sqrt(n); n must be non-negative.
inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int int_pow10(unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Decimal rendering of an exact rational with `sig` significant digits,
// round-half-even, trailing zeros stripped. Deterministic; used for CSV.
std::string decimal_string(const Rat& value, unsigned sig = 12);

}  // namespace apollon
