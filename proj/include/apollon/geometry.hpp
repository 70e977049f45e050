#pragma once

// Exact disk placement and rendering. A disk symbol is the pair of reduced
// center coordinates (curvature*center) over the curvature; lines (curvature
// zero) carry their unit normal and offset instead. Packings are closed
// under the conjugation move applied jointly to co-curvature, curvature and
// reduced coordinates, which all satisfy the same linear recurrence.

#include "apollon/descartes.hpp"
#include "apollon/lattice.hpp"
#include "apollon/spinor.hpp"

#include <array>
#include <string>
#include <vector>

namespace apollon {

struct RealSpinor {
  double x{0}, y{0};
};

struct DiskSymbol {
  Int beta;       // curvature; negative encodes the outer disk, 0 a line
  Rat xdot, ydot; // circle: curvature*center; line: unit normal (nx, ny)
  Rat offset;     // line only: the disk is { p : p . normal >= offset }

  bool is_line() const { return beta == 0; }

  bool operator==(const DiskSymbol& o) const {
    return beta == o.beta && xdot == o.xdot && ydot == o.ydot && offset == o.offset;
  }
};

std::string to_string(const DiskSymbol& d);

// Inversive coordinates (cocurv, curv, xdot, ydot). Mutually tangent
// disjoint disks have pairwise product -1; every disk lies on the quadric
// xdot^2 + ydot^2 - curv*cocurv = 1.
struct InversiveDisk {
  Rat cocurv, curv, xd, yd;
};

InversiveDisk to_inversive(const DiskSymbol& d);
DiskSymbol from_inversive(const InversiveDisk& m);
Rat inversive_product(const InversiveDisk& a, const InversiveDisk& b);

// Exact tangency predicate (external, or internal against the outer disk /
// a line); works for any disk kind.
bool tangent_disks(const DiskSymbol& a, const DiskSymbol& b);

struct PackingDisk {
  DiskSymbol sym;
  int depth{0};
};

struct Packing {
  DescartesQuadruple root;              // reflection-descended seed quadruple
  Int max_curvature;
  std::vector<PackingDisk> disks;       // seed first, then BFS order
  std::vector<std::array<int, 4>> cells;  // disk indices of every Descartes cell
  bool strip{false};
  Rat strip_period;                     // lateral period when strip
};

// Corona disk for spinor s = [m,n] against the outer circle of curvature -B
// centered at the origin: curvature B + m^2 + n^2, reduced coordinates
// ((m^2-n^2)/B, 2mn/B). Throws InvalidSpinor for the zero spinor.
DiskSymbol place_corona_disk(const Int& B, const Spinor& s);

// Real-valued spinor description of a tricycle (B0, B1, B2), B0 <= 0 <
// B0+B1: a = [B0, sqrt(B0B1+B1B2+B2B0)]/sqrt(B0+B1), b = [0, sqrt(B0+B1)].
// Throws InvalidTricycle when the radicand is negative.
std::pair<RealSpinor, RealSpinor> spinors_from_curvatures(const Int& B0, const Int& B1,
                                                          const Int& B2);

// Pythagorean triple of two tangent circles:
// (b1*xd2 - b2*xd1, b1*yd2 - b2*yd1, b1 + b2). Throws NotTangent, or
// UsageError when a line is passed.
std::array<Rat, 3> triangle_from_disks(const DiskSymbol& d1, const DiskSymbol& d2);

// Euclid parameters [m,n] -> (m^2-n^2, 2mn, m^2+n^2).
std::array<Int, 3> euclid_params_to_triple(const Spinor& s);

// Breadth-first closure of q's packing under conjugation, root placed
// exactly (outer circle at the origin; strip lines horizontal). Every disk
// of curvature <= max_curvature reachable within the strip window is
// present exactly once. Requires an integral Descartes quadruple that is
// realizable (at most one non-positive curvature, or the two-zero strip)
// and max_curvature >= max(q).
Packing build_packing(const DescartesQuadruple& q, const Int& max_curvature);

struct RenderOptions {
  bool labels{false};
  int pixel_size{800};
};

std::string render_svg(const Packing& p, const RenderOptions& opts);

// Exact audit used by tests and the self-check command: per generated cell,
// all six pairs tangent (inversive product -1), every disk on the quadric,
// and every adjacent pair's squared tangency spinor a Gaussian integer of
// norm b1+b2.
struct AuditResult {
  bool ok{true};
  long pairs_checked{0};
  std::string detail;  // first failure, when !ok
};

AuditResult audit_packing(const Packing& p);

}  // namespace apollon
