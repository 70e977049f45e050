#include "apollon/checks.hpp"
#include "apollon/descartes.hpp"
#include "apollon/enumerate.hpp"
#include "apollon/geometry.hpp"
#include "apollon/io.hpp"
#include "apollon/lattice.hpp"
#include "apollon/minkowski.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace apollon;

// exit codes: 0 success, 1 usage, 2 I/O, 3 domain error, 4 invariant failure
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIo = 2;
constexpr int kDomain = 3;
constexpr int kInvariant = 4;

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kIo;
  }
  f << payload;
  f.flush();
  if (!f) {
    std::cerr << "error: write to " << out_path << " failed\n";
    return kIo;
  }
  return kOk;
}

int cmd_enumerate(long bmax, const std::string& format, const std::string& out) {
  auto rows = enumerate_range(bmax);
  Int current = 0;
  long count = 0;
  auto flush_count = [&] {
    if (current > 0) std::cout << "B=" << current.get_str() << ": " << count << "\n";
  };
  for (const ClassificationRow& r : rows) {
    if (r.params.B != current) {
      flush_count();
      current = r.params.B;
      count = 0;
    }
    ++count;
  }
  flush_count();
  std::cout << "rows: " << rows.size() << "\n";
  return emit(format == "json" ? classification_json(rows) : classification_csv(rows),
              out);
}

int cmd_build(const std::string& spinors) {
  auto [a, b] = parse_spinor_pair(spinors);
  auto [main_q, conj_q] = from_spinors(a, b);
  std::cout << "spinors: " << to_string(a) << " " << to_string(b) << "\n";
  std::cout << "quadruple: " << to_string(main_q) << "\n";
  std::cout << "conjugate: " << to_string(conj_q) << "\n";
  ParamTuple t = to_params(main_q);
  std::cout << "params: " << to_string(t) << "\n";
  if (t.B == 0) std::cout << "note: strip configuration (B = 0)\n";
  return kOk;
}

int cmd_reduce(const std::string& basis_text) {
  LatticeBasis input = parse_basis(basis_text);
  std::cout << "input: " << to_string(input) << "\n";
  if (input.degenerate) {
    LatticeBasis r = gauss_reduce(input);
    std::cout << "degenerate lattice (rank 1), generator " << to_string(r.v) << "\n";
    throw DomainError(Err::DegenerateLattice, "reduce: basis spans a rank-1 lattice");
  }
  LatticeBasis principal = principal_basis(input);
  SimilarityKey key = similarity_key(input);
  std::cout << "principal: " << to_string(principal) << "\n";
  std::cout << "discriminant: " << discriminant(input).get_str() << "\n";
  std::cout << "key: " << to_string(key) << "\n";
  // primitive class: B' = sqrt(k n - mu^2) of the normalized key
  Int B2 = key.k * key.n - key.mu * key.mu;
  Int B = isqrt(B2);
  if (B * B == B2 && B >= 1) {
    ParamTuple t{B, key.k, key.n, key.mu};
    if (t.satisfies_maximality() && t.irreducible()) {
      auto quintet = quintet_from_params(t);
      std::cout << "class: B=" << B.get_str() << " quintet (" << quintet[0].get_str();
      for (int i = 1; i < 5; ++i) std::cout << "," << quintet[i].get_str();
      std::cout << ")\n";
    }
  }
  return kOk;
}

int cmd_render(const std::string& quadruple_text, long max_curvature, bool labels,
               const std::string& format, const std::string& out) {
  DescartesQuadruple q = parse_quadruple(quadruple_text);
  if (!is_descartes(q)) {
    std::cerr << "error: " << to_string(q) << " fails the Descartes relation\n";
    return kUsage;
  }
  Packing p;
  try {
    p = build_packing(q, max_curvature);
  } catch (const DomainError& e) {
    if (e.code == Err::NotEverted || e.code == Err::UsageError) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
    throw;
  }
  RenderOptions opts;
  opts.labels = labels;
  std::cout << "disks: " << p.disks.size() << "\n";
  return emit(format == "json" ? packing_json(p) : render_svg(p, opts), out);
}

int cmd_lattices(long disc, const std::string& out) {
  auto bases = lattices_of_discriminant(disc);
  std::cout << "classes: " << bases.size() << "\n";
  return emit(lattice_csv(disc, bases), out);
}

int cmd_dust(long bmax, const std::string& projection, const std::string& format,
             const std::string& out) {
  auto points =
      dust_dataset(bmax, projection == "south" ? Projection::South : Projection::North);
  std::cout << "rows: " << points.size() << "\n";
  return emit(format == "json" ? dust_json(points) : dust_csv(points), out);
}

int cmd_check(long bmax, const std::string& inject_fault) {
  CheckReport report = run_self_checks(bmax, inject_fault);
  for (const CheckItem& item : report.items) {
    const char* tag = item.passed ? "PASS" : (item.warn_only ? "WARN" : "FAIL");
    std::cout << tag << " " << item.name;
    if (!item.detail.empty()) std::cout << ": " << item.detail;
    std::cout << "\n";
  }
  if (!report.all_passed()) {
    std::cout << "self-check FAILED\n";
    return kInvariant;
  }
  std::cout << "self-check OK\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integral Apollonian disk packings"};
  app.require_subcommand(1);

  long bmax = 0;
  long max_curvature = 0;
  std::string format = "csv", out, spinors, basis, quadruple, projection = "north";
  std::string inject_fault;
  bool labels = false;

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "classify packings by major curvature");
  enumerate_cmd->add_option("--bmax", bmax, "largest major curvature B")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  enumerate_cmd->add_option("--out", out, "output path (stdout when omitted)");

  auto* build_cmd = app.add_subcommand("build", "Descartes quadruples from two spinors");
  build_cmd->add_option("--spinors", spinors, "pair as \"x,y;u,v\"")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "principal basis of a lattice");
  reduce_cmd->add_option("--basis", basis, "basis as \"x,y;u,v\"")->required();

  auto* render_cmd = app.add_subcommand("render", "SVG image or JSON dump of a packing");
  render_cmd->add_option("--quadruple", quadruple, "curvatures a,b,c,d")->required();
  render_cmd->add_option("--max-curvature", max_curvature)
      ->required()
      ->check(CLI::PositiveNumber);
  render_cmd->add_flag("--labels", labels, "draw curvature labels");
  std::string render_format = "svg";
  render_cmd->add_option("--format", render_format)->check(CLI::IsMember({"svg", "json"}));
  render_cmd->add_option("--out", out, "output path (stdout when omitted)");

  long disc = 0;
  auto* lattices_cmd = app.add_subcommand("lattices", "lattice classes of a discriminant");
  lattices_cmd->add_option("--disc", disc, "lattice discriminant")
      ->required()
      ->check(CLI::PositiveNumber);
  lattices_cmd->add_option("--out", out, "output path (stdout when omitted)");

  auto* dust_cmd = app.add_subcommand("dust", "celestial projection point set");
  dust_cmd->add_option("--bmax", bmax)->required()->check(CLI::PositiveNumber);
  dust_cmd->add_option("--projection", projection)
      ->check(CLI::IsMember({"north", "south"}));
  dust_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  dust_cmd->add_option("--out", out, "output path (stdout when omitted)");

  auto* check_cmd = app.add_subcommand("check", "run invariant self-checks");
  check_cmd->add_option("--bmax", bmax)->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--inject-fault", inject_fault)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(bmax, format, out);
    if (build_cmd->parsed()) return cmd_build(spinors);
    if (reduce_cmd->parsed()) return cmd_reduce(basis);
    if (render_cmd->parsed())
      return cmd_render(quadruple, max_curvature, labels, render_format, out);
    if (lattices_cmd->parsed()) return cmd_lattices(disc, out);
    if (dust_cmd->parsed()) return cmd_dust(bmax, projection, format, out);
    if (check_cmd->parsed()) return cmd_check(bmax, inject_fault);
  } catch (const apollon::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code == apollon::Err::UsageError ? kUsage : kDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
