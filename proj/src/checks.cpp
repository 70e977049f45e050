#include "apollon/checks.hpp"

#include "apollon/descartes.hpp"
#include "apollon/enumerate.hpp"
#include "apollon/geometry.hpp"
#include "apollon/lattice.hpp"
#include "apollon/minkowski.hpp"

#include <algorithm>
#include <set>

namespace apollon {

namespace {

CheckItem check_oracle_equivalence(const Int& bmax) {
  CheckItem item;
  item.name = "oracle-equivalence";
  Int top = std::min(bmax, Int(30));  // oracle scan is quartic in B
  for (Int B = 1; B <= top; ++B) {
    std::set<DescartesQuadruple> derived;
    for (const ParamTuple& t : solve_params(B))
      derived.insert(classification_row(t).quad_main.sorted());
    std::set<DescartesQuadruple> oracle = oracle_root_quadruples(B);
    if (derived != oracle) {
      item.detail = "mismatch at B=" + B.get_str() + ": " +
                    std::to_string(derived.size()) + " derived vs " +
                    std::to_string(oracle.size()) + " oracle roots";
      return item;
    }
  }
  item.passed = true;
  item.detail = "B=1.." + top.get_str();
  return item;
}

CheckItem check_coincidence(const Int& bmax) {
  CheckItem item;
  item.name = "projection-coincidence";
  long count = 0;
  for (const ClassificationRow& row : enumerate_range(bmax)) {
    if (!coincidence_check(row.params)) {
      item.detail = "fails for " + to_string(row.params);
      return item;
    }
    ++count;
  }
  item.passed = true;
  item.detail = std::to_string(count) + " tuples";
  return item;
}

CheckItem check_hermitian(const Int& bmax) {
  CheckItem item;
  item.name = "hermitian-det-zero";
  for (const ClassificationRow& row : enumerate_range(bmax)) {
    HermitianMatrix2 hp = hermitian_from_params(row.params);
    HermitianMatrix2 hc = hermitian_from_curvatures(row.quad_main);
    auto [a, b] = principal_spinors_for(row.params);
    HermitianMatrix2 hs = hermitian_from_spinors(a, b);
    if (hp.det() != 0 || hs.det() != 0 || hc.det() != 0 ||
        !hs.equal_up_to_conjugation(hc) || !hs.equal_up_to_conjugation(hp)) {
      item.detail = "fails for " + to_string(row.params);
      return item;
    }
  }
  item.passed = true;
  return item;
}

CheckItem check_tangency(const Int& bmax) {
  CheckItem item;
  item.name = "tangency-audit";
  std::vector<DescartesQuadruple> seeds = {
      DescartesQuadruple(-1, 2, 2, 3),
      DescartesQuadruple(0, 0, 1, 1),
  };
  if (bmax >= 6) seeds.push_back(DescartesQuadruple(-6, 11, 14, 15));
  long pairs = 0;
  for (const DescartesQuadruple& q : seeds) {
    Packing p = build_packing(q, 150);
    AuditResult audit = audit_packing(p);
    pairs += audit.pairs_checked;
    if (!audit.ok) {
      item.detail = to_string(q) + ": " + audit.detail;
      return item;
    }
  }
  item.passed = true;
  item.detail = std::to_string(pairs) + " tangent pairs";
  return item;
}

CheckItem check_corona_mosaic() {
  CheckItem item;
  item.name = "corona-mosaic";
  Spinor a(1, -2), b(2, 2);
  Int bound = 200;
  Packing p = build_packing(DescartesQuadruple(-6, 11, 14, 15), bound);

  std::set<Int> from_packing;
  const DiskSymbol outer = p.disks[0].sym;
  for (size_t i = 1; i < p.disks.size(); ++i)
    if (tangent_disks(outer, p.disks[i].sym)) from_packing.insert(p.disks[i].sym.beta);

  std::set<Int> from_mosaic;
  for (const MosaicPoint& mp : mosaic_points(LatticeBasis(a, b), bound - 6))
    from_mosaic.insert(corona_curvature(a, b, mp.alpha, mp.beta));

  if (from_packing != from_mosaic) {
    item.detail = "corona sets differ: " + std::to_string(from_packing.size()) +
                  " packing vs " + std::to_string(from_mosaic.size()) + " mosaic";
    return item;
  }
  item.passed = true;
  item.detail = std::to_string(from_packing.size()) + " corona curvatures";
  return item;
}

CheckItem check_density(const Int& bmax) {
  CheckItem item;
  item.name = "density-band";
  item.warn_only = true;
  if (bmax < 200) {
    item.passed = true;
    item.detail = "skipped (needs --bmax >= 200)";
    return item;
  }
  // mean of count(B)/B over B = 1..200 should sit near 1/3
  Rat mean(0);
  for (Int B = 1; B <= 200; ++B)
    mean += make_rat(Int(solve_params(B).size()), B);
  mean /= 200;
  bool in_band = mean >= make_rat(1, 4) && mean <= make_rat(21, 50);
  item.passed = in_band;
  item.detail = "mean count(B)/B = " + decimal_string(mean, 4);
  return item;
}

}  // namespace

CheckReport run_self_checks(const Int& bmax, const std::string& inject_fault) {
  if (bmax < 1) throw DomainError(Err::UsageError, "check: bmax < 1");
  CheckReport report;
  report.items.push_back(check_oracle_equivalence(bmax));
  report.items.push_back(check_coincidence(bmax));
  report.items.push_back(check_hermitian(bmax));
  report.items.push_back(check_tangency(bmax));
  report.items.push_back(check_corona_mosaic());
  report.items.push_back(check_density(bmax));
  if (!inject_fault.empty()) {
    for (CheckItem& item : report.items)
      if (item.name == inject_fault) {
        item.passed = false;
        item.warn_only = false;
        item.detail = "injected fault";
      }
  }
  return report;
}

}  // namespace apollon
