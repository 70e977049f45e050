#include "apollon/descartes.hpp"

#include <algorithm>

namespace apollon {

DescartesQuadruple DescartesQuadruple::sorted() const {
  DescartesQuadruple s = *this;
  std::sort(s.b.begin(), s.b.end());
  return s;
}

std::string to_string(const DescartesQuadruple& q) {
  return "(" + q.b[0].get_str() + "," + q.b[1].get_str() + "," + q.b[2].get_str() +
         "," + q.b[3].get_str() + ")";
}

std::string to_string(const ParamTuple& t) {
  return "(B=" + t.B.get_str() + ",k=" + t.k.get_str() + ",n=" + t.n.get_str() +
         ",mu=" + t.mu.get_str() + ")";
}

bool is_descartes(const DescartesQuadruple& q) {
  Int sq = q.b[0] * q.b[0] + q.b[1] * q.b[1] + q.b[2] * q.b[2] + q.b[3] * q.b[3];
  Int s = q.sum();
  return 2 * sq == s * s;
}

FourthCurvatures fourth_curvatures(const Int& a, const Int& b, const Int& c) {
  FourthCurvatures out;
  out.radicand = a * b + b * c + c * a;
  if (out.radicand < 0)
    throw DomainError(Err::NegativeRadicand,
                      "fourth_curvatures: no real completion, ab+bc+ca = " +
                          out.radicand.get_str());
  if (!is_perfect_square(out.radicand)) return out;  // integral == false
  Int s = isqrt(out.radicand);
  out.integral = true;
  out.plus = a + b + c + 2 * s;
  out.minus = a + b + c - 2 * s;
  return out;
}

DescartesQuadruple conjugate_at(const DescartesQuadruple& q, int index) {
  DescartesQuadruple r = q;
  r.b[index] = 2 * (q.sum() - q.b[index]) - q.b[index];
  return r;
}

std::pair<DescartesQuadruple, DescartesQuadruple> from_spinors(const Spinor& a,
                                                               const Spinor& b) {
  Int B = abs(cross(a, b));
  Int b1 = B + norm_sq(a);
  Int b2 = B + norm_sq(b);
  DescartesQuadruple qp(-B, b1, b2, B + norm_sq(a + b));
  DescartesQuadruple qm(-B, b1, b2, B + norm_sq(a - b));
  return {qp, qm};
}

std::pair<DescartesQuadruple, DescartesQuadruple> from_spinors_curl(const Spinor& a,
                                                                    const Spinor& b) {
  Int d = dot(a, b);
  Int c = cross(a, b);
  Int A = norm_sq(b) + d;
  Int Bc = norm_sq(a) + d;
  Int base = norm_sq(a) + norm_sq(b) + d;
  return {DescartesQuadruple(A, Bc, -d, base + 2 * c),
          DescartesQuadruple(A, Bc, -d, base - 2 * c)};
}

Int corona_curvature(const Spinor& a, const Spinor& b, const Int& alpha,
                     const Int& beta) {
  if (gcd(alpha, beta) != 1)
    throw DomainError(Err::NotCoprime, "corona_curvature: gcd(alpha,beta) != 1");
  Spinor v = a * alpha + b * beta;
  return abs(cross(a, b)) + norm_sq(v);
}

ParamTuple to_params(const DescartesQuadruple& q) {
  if (q.b[0] > 0)
    throw DomainError(Err::NotEverted, "to_params: b0 > 0 in " + to_string(q));
  Int twice_mu = q.b[0] + q.b[1] + q.b[2] - q.b[3];
  if (mpz_odd_p(twice_mu.get_mpz_t()))
    throw DomainError(Err::NonIntegralMu, "to_params: b0+b1+b2-b3 odd in " + to_string(q));
  ParamTuple t;
  t.B = -q.b[0];
  t.k = q.b[0] + q.b[1];
  t.n = q.b[0] + q.b[2];
  t.mu = abs(twice_mu / 2);
  return t;
}

std::array<Int, 5> quintet_from_params(const ParamTuple& t) {
  Int s = t.B + t.k + t.n;
  return {-t.B, t.B + t.k, t.B + t.n, s - 2 * t.mu, s + 2 * t.mu};
}

bool spinorial_identity_holds(const Spinor& a, const Spinor& b) {
  Int c = cross(a, b);
  Int d = dot(a, b);
  return c * c + d * d == norm_sq(a) * norm_sq(b);
}

}  // namespace apollon
