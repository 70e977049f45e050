#include "apollon/geometry.hpp"

#include "apollon/enumerate.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace apollon {

std::string to_string(const DiskSymbol& d) {
  if (d.is_line())
    return "line(n=(" + d.xdot.get_str() + "," + d.ydot.get_str() +
           "),h=" + d.offset.get_str() + ")";
  return "(" + d.xdot.get_str() + "," + d.ydot.get_str() + ")/" + d.beta.get_str();
}

InversiveDisk to_inversive(const DiskSymbol& d) {
  if (d.is_line()) return InversiveDisk{2 * d.offset, Rat(0), d.xdot, d.ydot};
  Rat curv(d.beta);
  return InversiveDisk{(d.xdot * d.xdot + d.ydot * d.ydot - 1) / curv, curv, d.xdot,
                       d.ydot};
}

namespace {

Int rat_to_int_exact(const Rat& r) {
  if (r.get_den() != 1)
    throw std::logic_error("expected integral value, got " + r.get_str());
  return r.get_num();
}

}  // namespace

DiskSymbol from_inversive(const InversiveDisk& m) {
  DiskSymbol d;
  if (m.curv == 0) {
    d.beta = 0;
    d.xdot = m.xd;
    d.ydot = m.yd;
    d.offset = m.cocurv / 2;
  } else {
    d.beta = rat_to_int_exact(m.curv);
    d.xdot = m.xd;
    d.ydot = m.yd;
    d.offset = 0;
  }
  return d;
}

Rat inversive_product(const InversiveDisk& a, const InversiveDisk& b) {
  return a.xd * b.xd + a.yd * b.yd - (a.cocurv * b.curv + a.curv * b.cocurv) / 2;
}

bool tangent_disks(const DiskSymbol& a, const DiskSymbol& b) {
  return inversive_product(to_inversive(a), to_inversive(b)) == -1;
}

DiskSymbol place_corona_disk(const Int& B, const Spinor& s) {
  if (B < 1) throw DomainError(Err::UsageError, "place_corona_disk: B < 1");
  if (s.is_zero())
    throw DomainError(Err::InvalidSpinor, "place_corona_disk: zero spinor");
  DiskSymbol d;
  d.beta = B + norm_sq(s);
  d.xdot = make_rat(s.x * s.x - s.y * s.y, B);
  d.ydot = make_rat(2 * s.x * s.y, B);
  d.offset = 0;
  return d;
}

std::pair<RealSpinor, RealSpinor> spinors_from_curvatures(const Int& B0, const Int& B1,
                                                          const Int& B2) {
  if (B0 > 0)
    throw DomainError(Err::InvalidTricycle, "spinors_from_curvatures: B0 > 0");
  Int s = B0 + B1;
  if (s <= 0)
    throw DomainError(Err::InvalidTricycle, "spinors_from_curvatures: B0 + B1 <= 0");
  Int radicand = B0 * B1 + B1 * B2 + B2 * B0;
  if (radicand < 0)
    throw DomainError(Err::InvalidTricycle,
                      "spinors_from_curvatures: negative radicand " + radicand.get_str());
  double rs = std::sqrt(Rat(s).get_d());
  RealSpinor a{Rat(B0).get_d() / rs, std::sqrt(Rat(radicand).get_d()) / rs};
  RealSpinor b{0.0, rs};
  return {a, b};
}

std::array<Rat, 3> triangle_from_disks(const DiskSymbol& d1, const DiskSymbol& d2) {
  if (d1.is_line() || d2.is_line())
    throw DomainError(Err::UsageError, "triangle_from_disks: needs two circles");
  if (!tangent_disks(d1, d2))
    throw DomainError(Err::NotTangent, "triangle_from_disks: disks are not tangent");
  return {d1.beta * d2.xdot - d2.beta * d1.xdot,
          d1.beta * d2.ydot - d2.beta * d1.ydot, Rat(d1.beta + d2.beta)};
}

std::array<Int, 3> euclid_params_to_triple(const Spinor& s) {
  return {s.x * s.x - s.y * s.y, 2 * s.x * s.y, s.x * s.x + s.y * s.y};
}

namespace {

InversiveDisk conjugate_inversive(const InversiveDisk& keep0, const InversiveDisk& keep1,
                                  const InversiveDisk& keep2, const InversiveDisk& old) {
  // explicit Rat return: a deduced gmp expression template would dangle
  auto step = [](const Rat& a, const Rat& b, const Rat& c, const Rat& d) -> Rat {
    return 2 * (a + b + c) - d;
  };
  return InversiveDisk{step(keep0.cocurv, keep1.cocurv, keep2.cocurv, old.cocurv),
                       step(keep0.curv, keep1.curv, keep2.curv, old.curv),
                       step(keep0.xd, keep1.xd, keep2.xd, old.xd),
                       step(keep0.yd, keep1.yd, keep2.yd, old.yd)};
}

// squared spinor of a pair, as a complex pair; integral for valid packings
std::array<Rat, 2> pair_spinor_sq(const InversiveDisk& a, const InversiveDisk& b) {
  return {a.curv * b.xd - b.curv * a.xd, a.curv * b.yd - b.curv * a.yd};
}

// dedup / ordering key
std::array<Rat, 4> symbol_key(const DiskSymbol& d) {
  return {Rat(d.beta), d.xdot, d.ydot, d.offset};
}

Spinor spinor_square(const Spinor& v) {
  return Spinor(v.x * v.x - v.y * v.y, 2 * v.x * v.y);
}

struct Cell {
  std::array<int, 4> idx;
  int last;  // index position just swapped; -1 for the seed cell
  int depth;
};

bool is_realizable(const DescartesQuadruple& sorted_q) {
  if (sorted_q.b[1] > 0) return true;
  return sorted_q.b[0] == 0 && sorted_q.b[1] == 0 && sorted_q.b[2] > 0 &&
         sorted_q.b[2] == sorted_q.b[3];
}

}  // namespace

Packing build_packing(const DescartesQuadruple& q, const Int& max_curvature) {
  if (!is_descartes(q))
    throw DomainError(Err::NotDescartes, "build_packing: " + to_string(q) +
                                             " fails the Descartes relation");
  DescartesQuadruple s = q.sorted();
  if (!is_realizable(s))
    throw DomainError(Err::NotEverted,
                      "build_packing: " + to_string(q) + " is not a disk configuration");
  if (max_curvature < s.b[3])
    throw DomainError(Err::UsageError, "build_packing: max_curvature below seed curvature");

  DescartesQuadruple root = reflection_descend(s);
  if (root.b[0] > 0)
    throw DomainError(Err::NotEverted, "build_packing: root has no major disk");

  Int g = 0;
  for (const Int& v : root.b) g = gcd(g, abs(v));
  DescartesQuadruple prim(root.b[0] / g, root.b[1] / g, root.b[2] / g, root.b[3] / g);

  Packing out;
  out.root = root;
  out.max_curvature = max_curvature;
  out.strip = root.b[0] == 0;

  std::vector<InversiveDisk> inv;
  auto add_seed = [&](const DiskSymbol& d) {
    out.disks.push_back(PackingDisk{d, 0});
    inv.push_back(to_inversive(d));
  };

  if (out.strip) {
    // primitive root is (0,0,1,1); scale by 1/g. Vertical lines x = 0 and
    // x = 2/g with circles of curvature g stacked between them: in this
    // orientation every tangency spinor of the belt is integral.
    out.strip_period = make_rat(2, g);
    add_seed(DiskSymbol{0, Rat(-1), Rat(0), Rat(0)});                  // { x <= 0 }
    add_seed(DiskSymbol{0, Rat(1), Rat(0), out.strip_period});        // { x >= 2/g }
    add_seed(DiskSymbol{g, Rat(1), Rat(0), Rat(0)});
    add_seed(DiskSymbol{g, Rat(1), Rat(2), Rat(0)});
  } else {
    ParamTuple t = to_params(prim);
    auto [a, b] = principal_spinors_for(t);
    auto corona_symbol = [&](const Spinor& v, const Int& curv) {
      Spinor sq = spinor_square(v);
      return DiskSymbol{curv, make_rat(sq.x, t.B), make_rat(sq.y, t.B), Rat(0)};
    };
    add_seed(DiskSymbol{root.b[0], Rat(0), Rat(0), Rat(0)});  // outer, at the origin
    add_seed(corona_symbol(a, root.b[1]));
    add_seed(corona_symbol(b, root.b[2]));
    add_seed(corona_symbol(a - b, root.b[3]));
  }

  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (inversive_product(inv[i], inv[j]) != -1)
        throw std::logic_error("build_packing: seed cell is not mutually tangent");

  std::map<std::array<Rat, 4>, int> seen;
  for (int i = 0; i < 4; ++i) seen.emplace(symbol_key(out.disks[i].sym), i);

  // lateral pruning window for strips: one period with a period of margin
  Rat prune_lo = -out.strip_period;
  Rat prune_hi = 2 * out.strip_period;

  std::deque<Cell> queue;
  Cell root_cell{{0, 1, 2, 3}, -1, 0};
  out.cells.push_back(root_cell.idx);
  queue.push_back(root_cell);

  while (!queue.empty()) {
    Cell cell = queue.front();
    queue.pop_front();
    for (int j = 0; j < 4; ++j) {
      if (j == cell.last) continue;
      std::array<int, 3> keep;
      int ki = 0;
      for (int i = 0; i < 4; ++i)
        if (i != j) keep[ki++] = cell.idx[i];
      InversiveDisk m = conjugate_inversive(inv[keep[0]], inv[keep[1]], inv[keep[2]],
                                            inv[cell.idx[j]]);
      Int beta = rat_to_int_exact(m.curv);
      if (beta <= 0) throw std::logic_error("build_packing: generated non-positive curvature");
      if (beta > max_curvature) continue;
      if (out.strip) {
        // lateral prune along the strip axis (y): one period plus margin
        Rat curv(beta);
        Rat lo = (m.yd - 1) / curv;
        Rat hi = (m.yd + 1) / curv;
        if (hi < prune_lo || lo > prune_hi) continue;
      }
      DiskSymbol sym = from_inversive(m);
      auto [it, inserted] = seen.emplace(symbol_key(sym), static_cast<int>(out.disks.size()));
      if (!inserted) continue;  // disk (and its subtree) already generated
      out.disks.push_back(PackingDisk{sym, cell.depth + 1});
      inv.push_back(m);
      Cell child{cell.idx, j, cell.depth + 1};
      child.idx[j] = it->second;
      out.cells.push_back(child.idx);
      queue.push_back(child);
    }
  }
  return out;
}

AuditResult audit_packing(const Packing& p) {
  AuditResult res;
  auto fail = [&res](const std::string& msg) {
    if (res.ok) {
      res.ok = false;
      res.detail = msg;
    }
  };

  std::vector<InversiveDisk> inv;
  inv.reserve(p.disks.size());
  for (const PackingDisk& d : p.disks) inv.push_back(to_inversive(d.sym));

  for (size_t i = 0; i < inv.size(); ++i) {
    const InversiveDisk& m = inv[i];
    if (m.xd * m.xd + m.yd * m.yd - m.curv * m.cocurv != 1)
      fail("disk " + to_string(p.disks[i].sym) + " off the inversive quadric");
    if (!p.disks[i].sym.is_line() && p.disks[i].sym.beta > 0 &&
        p.disks[i].sym.beta > p.max_curvature)
      fail("disk " + to_string(p.disks[i].sym) + " above the curvature bound");
  }

  for (const auto& cell : p.cells) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const InversiveDisk& a = inv[cell[i]];
        const InversiveDisk& b = inv[cell[j]];
        ++res.pairs_checked;
        if (inversive_product(a, b) != -1) {
          fail("cell pair not tangent: " + to_string(p.disks[cell[i]].sym) + " vs " +
               to_string(p.disks[cell[j]].sym));
          continue;
        }
        auto sq = pair_spinor_sq(a, b);
        if (sq[0].get_den() != 1 || sq[1].get_den() != 1) {
          fail("pair spinor square not a Gaussian integer for " +
               to_string(p.disks[cell[i]].sym) + " vs " + to_string(p.disks[cell[j]].sym));
          continue;
        }
        Rat curv_sum = a.curv + b.curv;
        if (sq[0] * sq[0] + sq[1] * sq[1] != curv_sum * curv_sum)
          fail("pair spinor norm mismatch for " + to_string(p.disks[cell[i]].sym) +
               " vs " + to_string(p.disks[cell[j]].sym));
      }
  }
  return res;
}

namespace {

std::string dec(const Rat& r) { return decimal_string(r, 9); }

}  // namespace

std::string render_svg(const Packing& p, const RenderOptions& opts) {
  // bounding box: the outer circle's square, or the circles' extent for strips
  Rat xmin, xmax, ymin, ymax;
  if (!p.strip) {
    Rat R = make_rat(-1, p.root.b[0]);
    xmin = -R; xmax = R; ymin = -R; ymax = R;
  } else {
    bool first = true;
    for (const PackingDisk& d : p.disks) {
      if (d.sym.is_line()) continue;
      Rat curv(d.sym.beta);
      Rat lo_x = (d.sym.xdot - 1) / curv, hi_x = (d.sym.xdot + 1) / curv;
      Rat lo_y = (d.sym.ydot - 1) / curv, hi_y = (d.sym.ydot + 1) / curv;
      if (first) {
        xmin = lo_x; xmax = hi_x; ymin = lo_y; ymax = hi_y;
        first = false;
      } else {
        xmin = std::min(xmin, lo_x); xmax = std::max(xmax, hi_x);
        ymin = std::min(ymin, lo_y); ymax = std::max(ymax, hi_y);
      }
    }
  }
  Rat w = xmax - xmin, h = ymax - ymin;
  Rat stroke = std::max(w, h) * make_rat(3, 2000);  // 0.15% of the diameter
  Rat margin = std::max(w, h) * make_rat(1, 50);
  xmin -= margin; ymin -= margin; xmax += margin; ymax += margin;
  w = xmax - xmin; h = ymax - ymin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.pixel_size
      << "\" height=\"" << opts.pixel_size << "\" viewBox=\"" << dec(xmin) << " "
      << dec(-ymax) << " " << dec(w) << " " << dec(h) << "\">\n";
  svg << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << dec(stroke) << "\">\n";

  // y axis is mirrored by hand (SVG grows downward)
  for (const PackingDisk& d : p.disks) {
    if (d.sym.is_line()) {
      // endpoints: h*n +- L*(-ny, nx)
      Rat L = w + h;
      Rat px = d.sym.offset * d.sym.xdot, py = d.sym.offset * d.sym.ydot;
      Rat dx = -d.sym.ydot, dy = d.sym.xdot;
      svg << "<line x1=\"" << dec(px - L * dx) << "\" y1=\"" << dec(-(py - L * dy))
          << "\" x2=\"" << dec(px + L * dx) << "\" y2=\"" << dec(-(py + L * dy))
          << "\"/>\n";
    } else {
      Rat curv(d.sym.beta);
      Rat cx = d.sym.xdot / curv, cy = d.sym.ydot / curv;
      Rat r = abs(make_rat(1, d.sym.beta));
      svg << "<circle cx=\"" << dec(cx) << "\" cy=\"" << dec(-cy) << "\" r=\"" << dec(r)
          << "\"/>\n";
    }
  }
  svg << "</g>\n";

  if (opts.labels) {
    svg << "<g fill=\"black\" stroke=\"none\" text-anchor=\"middle\">\n";
    for (const PackingDisk& d : p.disks) {
      if (d.sym.is_line()) continue;
      Rat curv(d.sym.beta);
      Rat cx = d.sym.xdot / curv, cy = d.sym.ydot / curv;
      Rat r = abs(make_rat(1, d.sym.beta));
      size_t digits = d.sym.beta.get_str().size();
      Rat font = r * make_rat(7, 5 * static_cast<long>(digits) + 2);
      svg << "<text x=\"" << dec(cx) << "\" y=\"" << dec(-cy + font / 3)
          << "\" font-size=\"" << dec(font) << "\">" << d.sym.beta.get_str()
          << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace apollon
