#pragma once

// Integral sublattices of Z^2: discriminant, Lagrange-Gauss reduction to the
// principal basis, canonical representatives, mosaic enumeration, similarity
// classification.

#include "apollon/descartes.hpp"
#include "apollon/spinor.hpp"

#include <utility>
#include <vector>

namespace apollon {

struct LatticeBasis {
  Spinor v, w;
  bool degenerate{false};  // cross(v,w) == 0

  LatticeBasis() = default;
  LatticeBasis(Spinor a, Spinor b)
      : v(std::move(a)), w(std::move(b)), degenerate(cross(v, w) == 0) {}

  bool operator==(const LatticeBasis& o) const { return v == o.v && w == o.w; }
};

std::string to_string(const LatticeBasis& b);

inline Int discriminant(const LatticeBasis& b) { return abs(cross(b.v, b.w)); }

// Shrink the basis until |b2 + q*b1| >= |b2| >= |b1| for every integer q.
// Preserves the lattice and the discriminant. Rank-1 input reduces to its
// gcd generator with the second vector zeroed (the strip lattice Z in Z^2).
LatticeBasis gauss_reduce(const LatticeBasis& b);

// Deterministic representative of the basis orbit of a reduced basis:
// lexicographically greatest flattened (v.x,v.y,w.x,w.y) among all principal
// bases with coefficients in {-1,0,1}^2 satisfying |v|^2 <= |w|^2 and
// v.w >= 0 (so the identity basis is its own representative). Candidate
// enumeration (rather than just sign/swap) covers boundary lattices such as
// k = 2*mu where b and a-b tie.
LatticeBasis canonicalize(const LatticeBasis& reduced);

// gauss_reduce + canonicalize
LatticeBasis principal_basis(const LatticeBasis& b);

struct MosaicPoint {
  Spinor p;
  Int alpha, beta;  // p = alpha*v + beta*w
};

// All alpha*v + beta*w with gcd(alpha,beta) = 1 and |.|^2 <= max_norm_sq,
// one representative per +- pair (first nonzero coordinate positive),
// ordered by (|p|^2, p.x, p.y). Throws DegenerateLattice.
std::vector<MosaicPoint> mosaic_points(const LatticeBasis& b, const Int& max_norm_sq);

struct SimilarityKey {
  Int k, n, mu;
  bool operator==(const SimilarityKey& o) const {
    return k == o.k && n == o.n && mu == o.mu;
  }
  bool operator<(const SimilarityKey& o) const {
    if (k != o.k) return k < o.k;
    if (n != o.n) return n < o.n;
    return mu < o.mu;
  }
};

std::string to_string(const SimilarityKey& key);

// (|a|^2, |b|^2, a.b) of the canonical principal basis, divided by its gcd.
// Equal keys <=> similar lattices. Throws DegenerateLattice.
SimilarityKey similarity_key(const LatticeBasis& b);

// All canonical principal bases with |cross| = disc, irreducible
// (gcd(disc,k,n,mu) = 1), no two similar; ordered by key. Exhaustive scan
// over entries bounded by 3k^2 <= 4*disc^2 and n <= (4/3)disc^2.
std::vector<LatticeBasis> lattices_of_discriminant(const Int& disc);

// Constructive witness for a classification tuple: integer spinors with
// (|a|^2, |b|^2, a.b) = (k, n, mu) and |a x b| = B, found by solving the
// 2x2 linear system over the two-square representations of k. Exists for
// every valid tuple; throws DomainError(UsageError) otherwise.
std::pair<Spinor, Spinor> principal_spinors_for(const ParamTuple& t);

}  // namespace apollon
