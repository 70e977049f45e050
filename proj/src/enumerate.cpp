#include "apollon/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace apollon {

ClassificationRow classification_row(const ParamTuple& t) {
  ClassificationRow row;
  row.params = t;
  row.quintet = quintet_from_params(t);
  row.quad_main =
      DescartesQuadruple(row.quintet[0], row.quintet[1], row.quintet[2], row.quintet[3]);
  row.quad_conj =
      DescartesQuadruple(row.quintet[0], row.quintet[1], row.quintet[2], row.quintet[4]);
  return row;
}

std::vector<ParamTuple> solve_params(const Int& B) {
  std::vector<ParamTuple> out;
  if (B < 0) throw DomainError(Err::UsageError, "solve_params: B < 0");
  if (B == 0) {
    // The Apollonian strip is the unique B = 0 class; the divisor scan
    // below degenerates for kn = 0, so it is listed explicitly.
    out.push_back(ParamTuple{0, 0, 1, 0});
    return out;
  }
  Int B2 = B * B;
  for (Int mu = 0; 3 * mu * mu <= B2; ++mu) {
    Int N = B2 + mu * mu;
    Int kmin = std::max(Int(1), Int(2 * mu));
    for (Int k = kmin; k * k <= N; ++k) {
      if (!mpz_divisible_p(N.get_mpz_t(), k.get_mpz_t())) continue;
      Int n = N / k;
      ParamTuple t{B, k, n, mu};
      if (t.irreducible()) out.push_back(t);
    }
  }
  return out;
}

std::vector<ClassificationRow> enumerate_range(const Int& bmax) {
  if (bmax < 1) throw DomainError(Err::UsageError, "enumerate_range: bmax < 1");
  std::vector<ClassificationRow> rows;
  for (Int B = 1; B <= bmax; ++B)
    for (const ParamTuple& t : solve_params(B)) rows.push_back(classification_row(t));
  return rows;
}

DescartesQuadruple reflection_descend(const DescartesQuadruple& q) {
  DescartesQuadruple r = q.sorted();
  for (;;) {
    Int next = 2 * (r.b[0] + r.b[1] + r.b[2]) - r.b[3];
    if (next >= r.b[3]) return r;
    r.b[3] = next;
    std::sort(r.b.begin(), r.b.end());
  }
}

namespace {

int64_t isqrt64(int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct Quad64 {
  std::array<int64_t, 4> b;
  bool operator<(const Quad64& o) const { return b < o.b; }
};

Quad64 descend64(Quad64 q) {
  std::sort(q.b.begin(), q.b.end());
  for (;;) {
    int64_t next = 2 * (q.b[0] + q.b[1] + q.b[2]) - q.b[3];
    if (next >= q.b[3]) return q;
    q.b[3] = next;
    std::sort(q.b.begin(), q.b.end());
  }
}

int64_t gcd4(const Quad64& q) {
  int64_t g = 0;
  for (int64_t v : q.b) g = std::gcd(g, std::abs(v));
  return g;
}

}  // namespace

std::set<DescartesQuadruple> oracle_root_quadruples(const Int& B, const Int& search_bound) {
  if (B < 1) throw DomainError(Err::UsageError, "oracle: B < 1");
  if (search_bound < 4 * B * B)
    throw DomainError(Err::UsageError, "oracle: search_bound < 4B^2");
  if (search_bound > 1000000)
    throw DomainError(Err::UsageError, "oracle: search_bound exceeds 64-bit scan limit");

  const int64_t Bv = B.get_si();
  const int64_t bound = search_bound.get_si();
  const int64_t b0 = -Bv;

  std::set<Quad64> roots;
  for (int64_t b1 = -Bv + 1; b1 <= bound; ++b1) {
    for (int64_t b2 = b1; b2 <= bound; ++b2) {
      int64_t radicand = b0 * b1 + (b0 + b1) * b2;
      if (radicand < 0) continue;
      int64_t s = isqrt64(radicand);
      if (s * s != radicand) continue;
      int64_t base = b0 + b1 + b2;
      for (int64_t d : {base + 2 * s, base - 2 * s}) {
        Quad64 root = descend64(Quad64{{b0, b1, b2, d}});
        if (root.b[0] != b0) continue;
        if (gcd4(root) != 1) continue;
        roots.insert(root);
      }
    }
  }

  std::set<DescartesQuadruple> out;
  for (const Quad64& q : roots)
    out.insert(DescartesQuadruple(Int(static_cast<long>(q.b[0])),
                                  Int(static_cast<long>(q.b[1])),
                                  Int(static_cast<long>(q.b[2])),
                                  Int(static_cast<long>(q.b[3]))));
  return out;
}

std::set<DescartesQuadruple> oracle_root_quadruples(const Int& B) {
  return oracle_root_quadruples(B, 4 * B * B);
}

}  // namespace apollon
