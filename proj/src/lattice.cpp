#include "apollon/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace apollon {

std::string to_string(const LatticeBasis& b) {
  return "(" + to_string(b.v) + "," + to_string(b.w) + ")";
}

std::string to_string(const SimilarityKey& key) {
  return "(" + key.k.get_str() + "," + key.n.get_str() + "," + key.mu.get_str() + ")";
}

namespace {

// nearest integer to d/n for n > 0 (ties toward +infinity)
Int round_div(const Int& d, const Int& n) {
  Int q;
  Int num = 2 * d + n;
  Int den = 2 * n;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Spinor sign_normalized(const Spinor& s) {
  if (s.x < 0 || (s.x == 0 && s.y < 0)) return -s;
  return s;
}

// gcd generator of a rank-1 lattice spanned by collinear v, w
Spinor rank1_generator(const Spinor& v, const Spinor& w) {
  if (v.is_zero() && w.is_zero()) return Spinor(0, 0);
  const Spinor& ref = v.is_zero() ? w : v;
  Int c = gcd(abs(ref.x), abs(ref.y));
  Spinor dir(ref.x / c, ref.y / c);
  // contents of v and w along dir
  auto content = [&dir](const Spinor& s) -> Int {
    if (dir.x != 0) return s.x / dir.x;
    return s.y / dir.y;
  };
  Int g = gcd(abs(content(v)), abs(content(w)));
  return sign_normalized(Spinor(dir.x * g, dir.y * g));
}

bool is_reduced_pair(const Spinor& a, const Spinor& b) {
  Int na = norm_sq(a), nb = norm_sq(b);
  return na <= nb && norm_sq(b + a) >= nb && norm_sq(b - a) >= nb;
}

}  // namespace

LatticeBasis gauss_reduce(const LatticeBasis& basis) {
  if (basis.degenerate) return LatticeBasis(rank1_generator(basis.v, basis.w), Spinor(0, 0));
  Spinor a = basis.v, b = basis.w;
  if (norm_sq(a) > norm_sq(b)) std::swap(a, b);
  for (;;) {
    Int q = round_div(dot(a, b), norm_sq(a));
    b = b - a * q;
    if (norm_sq(b) >= norm_sq(a)) break;
    std::swap(a, b);
  }
  return LatticeBasis(a, b);
}

LatticeBasis canonicalize(const LatticeBasis& reduced) {
  if (reduced.degenerate)
    return LatticeBasis(rank1_generator(reduced.v, reduced.w), Spinor(0, 0));
  Int disc = discriminant(reduced);

  std::vector<Spinor> candidates;
  for (int alpha = -1; alpha <= 1; ++alpha)
    for (int beta = -1; beta <= 1; ++beta) {
      if (alpha == 0 && beta == 0) continue;
      candidates.push_back(reduced.v * Int(alpha) + reduced.w * Int(beta));
    }

  bool found = false;
  std::array<Int, 4> best;
  LatticeBasis out;
  for (const Spinor& v : candidates)
    for (const Spinor& w : candidates) {
      if (abs(cross(v, w)) != disc) continue;
      if (dot(v, w) < 0) continue;
      if (!is_reduced_pair(v, w)) continue;
      std::array<Int, 4> flat{v.x, v.y, w.x, w.y};
      if (!found || flat > best) {
        found = true;
        best = flat;
        out = LatticeBasis(v, w);
      }
    }
  if (!found)
    throw DomainError(Err::DegenerateLattice,
                      "canonicalize: input is not a reduced basis " + to_string(reduced));
  return out;
}

LatticeBasis principal_basis(const LatticeBasis& b) { return canonicalize(gauss_reduce(b)); }

std::vector<MosaicPoint> mosaic_points(const LatticeBasis& basis, const Int& max_norm_sq) {
  if (basis.degenerate)
    throw DomainError(Err::DegenerateLattice, "mosaic_points: degenerate basis");
  if (max_norm_sq < 0) return {};
  Int B = discriminant(basis);
  // |alpha|*B = |cross(p,w)| <= |p||w|, so alpha^2 <= max_norm_sq * n / B^2;
  // +1 keeps the truncated square root an upper bound
  Int amax = isqrt(max_norm_sq * norm_sq(basis.w)) / B + 1;
  Int bmax = isqrt(max_norm_sq * norm_sq(basis.v)) / B + 1;

  std::vector<MosaicPoint> out;
  std::set<std::array<Int, 2>> seen;
  for (Int alpha = -amax; alpha <= amax; ++alpha)
    for (Int beta = -bmax; beta <= bmax; ++beta) {
      if (gcd(alpha, beta) != 1) continue;
      Spinor p = basis.v * alpha + basis.w * beta;
      if (norm_sq(p) > max_norm_sq) continue;
      MosaicPoint mp{p, alpha, beta};
      if (p.x < 0 || (p.x == 0 && p.y < 0)) mp = MosaicPoint{-p, -alpha, -beta};
      if (!seen.insert({mp.p.x, mp.p.y}).second) continue;
      out.push_back(std::move(mp));
    }
  std::sort(out.begin(), out.end(), [](const MosaicPoint& l, const MosaicPoint& r) {
    Int nl = norm_sq(l.p), nr = norm_sq(r.p);
    if (nl != nr) return nl < nr;
    if (l.p.x != r.p.x) return l.p.x < r.p.x;
    return l.p.y < r.p.y;
  });
  return out;
}

SimilarityKey similarity_key(const LatticeBasis& b) {
  if (b.degenerate)
    throw DomainError(Err::DegenerateLattice, "similarity_key: degenerate basis");
  LatticeBasis canon = principal_basis(b);
  SimilarityKey key{norm_sq(canon.v), norm_sq(canon.w), dot(canon.v, canon.w)};
  Int g = gcd(gcd(key.k, key.n), key.mu);
  key.k /= g;
  key.n /= g;
  key.mu /= g;
  return key;
}

std::vector<LatticeBasis> lattices_of_discriminant(const Int& disc) {
  if (disc < 1) throw DomainError(Err::UsageError, "lattices_of_discriminant: disc < 1");
  // principal bases obey 3k^2 <= 4 disc^2 and n <= (4/3) disc^2
  Int kmax = isqrt(4 * disc * disc / 3);
  while (3 * kmax * kmax > 4 * disc * disc) --kmax;
  Int abound = isqrt(kmax);
  Int bbound = isqrt(4 * disc * disc / 3);

  std::map<SimilarityKey, LatticeBasis> classes;
  for (Int ax = -abound; ax <= abound; ++ax)
    for (Int ay = -abound; ay <= abound; ++ay) {
      Spinor a(ax, ay);
      if (norm_sq(a) > kmax) continue;
      for (Int bx = -bbound; bx <= bbound; ++bx)
        for (Int by = -bbound; by <= bbound; ++by) {
          Spinor b(bx, by);
          if (abs(cross(a, b)) != disc) continue;
          if (dot(a, b) < 0) continue;
          if (!is_reduced_pair(a, b)) continue;
          SimilarityKey key{norm_sq(a), norm_sq(b), dot(a, b)};
          if (gcd(gcd(disc, key.k), gcd(key.n, key.mu)) != 1) continue;
          // one representative per similarity class: the lex-greatest canonical
          LatticeBasis canon = canonicalize(LatticeBasis(a, b));
          std::array<Int, 4> flat{canon.v.x, canon.v.y, canon.w.x, canon.w.y};
          auto it = classes.find(key);
          if (it == classes.end()) {
            classes.emplace(key, canon);
          } else {
            const LatticeBasis& cur = it->second;
            std::array<Int, 4> cur_flat{cur.v.x, cur.v.y, cur.w.x, cur.w.y};
            if (flat > cur_flat) it->second = canon;
          }
        }
    }
  std::vector<LatticeBasis> out;
  out.reserve(classes.size());
  for (auto& [key, basis] : classes) out.push_back(basis);
  return out;
}

std::pair<Spinor, Spinor> principal_spinors_for(const ParamTuple& t) {
  if (!t.satisfies_equation())
    throw DomainError(Err::UsageError, "principal_spinors_for: B^2+mu^2 != kn");
  if (t.k == 0) {
    // strip classes: a = 0 (tangency at infinity), b any vector of norm n
    Int r = isqrt(t.n);
    if (r * r != t.n)
      throw DomainError(Err::UsageError, "principal_spinors_for: no spinors for k=0");
    return {Spinor(0, 0), Spinor(r, 0)};
  }
  for (Int p = 0; p * p <= t.k; ++p) {
    Int q2 = t.k - p * p;
    if (!is_perfect_square(q2)) continue;
    Int q = isqrt(q2);
    for (int sq = 0; sq < 2; ++sq) {
      Spinor a(p, sq == 0 ? q : -q);
      if (sq == 1 && q == 0) continue;
      for (int sc = 0; sc < 2; ++sc) {
        Int c = sc == 0 ? t.B : -t.B;
        // solve [p q; -q p] [bx by]^T = [mu c]^T
        Int num_x = a.x * t.mu - a.y * c;
        Int num_y = a.y * t.mu + a.x * c;
        if (!mpz_divisible_p(num_x.get_mpz_t(), t.k.get_mpz_t())) continue;
        if (!mpz_divisible_p(num_y.get_mpz_t(), t.k.get_mpz_t())) continue;
        Spinor b(num_x / t.k, num_y / t.k);
        if (norm_sq(b) != t.n) continue;
        return {a, b};
      }
    }
  }
  throw DomainError(Err::UsageError,
                    "principal_spinors_for: no integral spinors for " + to_string(t));
}

}  // namespace apollon
