#pragma once

// Integral 2-vector (tangency spinor) algebra: dot, symplectic cross,
// symplectic conjugation. Spinors are plain values with structural equality;
// the +/- sign ambiguity is handled by consumers.

#include "apollon/core.hpp"

#include <ostream>
#include <string>

namespace apollon {

struct Spinor {
  Int x{0};
  Int y{0};

  Spinor() = default;
  Spinor(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}

  bool operator==(const Spinor& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Spinor& o) const { return !(*this == o); }
  // lexicographic; gives deterministic orderings for sets and golden files
  bool operator<(const Spinor& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }

  Spinor operator+(const Spinor& o) const { return {x + o.x, y + o.y}; }
  Spinor operator-(const Spinor& o) const { return {x - o.x, y - o.y}; }
  Spinor operator-() const { return {-x, -y}; }
  Spinor operator*(const Int& s) const { return {x * s, y * s}; }

  bool is_zero() const { return x == 0 && y == 0; }
};

inline Int dot(const Spinor& a, const Spinor& b) { return a.x * b.x + a.y * b.y; }

// symplectic product: det[a b]
inline Int cross(const Spinor& a, const Spinor& b) { return a.x * b.y - b.x * a.y; }

// [x,y] -> [-y,x]; satisfies cross(a,b) == dot(symp_conj(a), b)
inline Spinor symp_conj(const Spinor& a) { return {-a.y, a.x}; }

inline Int norm_sq(const Spinor& a) { return dot(a, a); }

inline std::string to_string(const Spinor& a) {
  return "[" + a.x.get_str() + "," + a.y.get_str() + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Spinor& a) {
  return os << to_string(a);
}

}  // namespace apollon
