#include "apollon/io.hpp"

#include <sstream>

namespace apollon {

namespace {

// JSON is written by hand: curvatures are arbitrary-precision and must land
// in the output as exact JSON numbers, which ready-made writers cannot emit.

void param_fields(std::ostringstream& os, const ParamTuple& t) {
  os << "\"B\":" << t.B.get_str() << ",\"k\":" << t.k.get_str()
     << ",\"mu\":" << t.mu.get_str() << ",\"n\":" << t.n.get_str();
}

void int_array(std::ostringstream& os, const Int* v, size_t count) {
  os << "[";
  for (size_t i = 0; i < count; ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << "]";
}

}  // namespace

std::string classification_csv(const std::vector<ClassificationRow>& rows) {
  std::ostringstream os;
  os << "B,k,n,mu,B0,B1,B2,B3,B4\n";
  for (const ClassificationRow& r : rows) {
    os << r.params.B.get_str() << "," << r.params.k.get_str() << ","
       << r.params.n.get_str() << "," << r.params.mu.get_str();
    for (const Int& q : r.quintet) os << "," << q.get_str();
    os << "\n";
  }
  return os.str();
}

std::string classification_json(const std::vector<ClassificationRow>& rows) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const ClassificationRow& r : rows) {
    if (!first) os << ",";
    first = false;
    os << "\n{";
    param_fields(os, r.params);
    os << ",\"quad_conj\":";
    int_array(os, r.quad_conj.b.data(), 4);
    os << ",\"quad_main\":";
    int_array(os, r.quad_main.b.data(), 4);
    os << ",\"quintet\":";
    int_array(os, r.quintet.data(), 5);
    os << "}";
  }
  os << "\n]\n";
  return os.str();
}

std::string dust_csv(const std::vector<DustPoint>& points) {
  std::ostringstream os;
  os << "B,k,n,mu,X,Y\n";
  for (const DustPoint& p : points) {
    os << p.params.B.get_str() << "," << p.params.k.get_str() << ","
       << p.params.n.get_str() << "," << p.params.mu.get_str() << ","
       << decimal_string(p.X) << "," << decimal_string(p.Y) << "\n";
  }
  return os.str();
}

std::string dust_json(const std::vector<DustPoint>& points) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const DustPoint& p : points) {
    if (!first) os << ",";
    first = false;
    os << "\n{";
    param_fields(os, p.params);
    os << ",\"X\":" << decimal_string(p.X) << ",\"Y\":" << decimal_string(p.Y) << "}";
  }
  os << "\n]\n";
  return os.str();
}

std::string lattice_csv(const Int& disc, const std::vector<LatticeBasis>& bases) {
  std::ostringstream os;
  os << "discriminant,k,n,mu,a_x,a_y,b_x,b_y\n";
  for (const LatticeBasis& b : bases) {
    os << disc.get_str() << "," << norm_sq(b.v).get_str() << ","
       << norm_sq(b.w).get_str() << "," << dot(b.v, b.w).get_str() << ","
       << b.v.x.get_str() << "," << b.v.y.get_str() << "," << b.w.x.get_str() << ","
       << b.w.y.get_str() << "\n";
  }
  return os.str();
}

std::string packing_json(const Packing& p) {
  std::ostringstream os;
  os << "{\"disks\":[";
  bool first = true;
  for (const PackingDisk& d : p.disks) {
    if (!first) os << ",";
    first = false;
    os << "\n{\"beta\":" << d.sym.beta.get_str() << ",\"depth\":" << d.depth;
    if (d.sym.is_line()) os << ",\"offset\":\"" << d.sym.offset.get_str() << "\"";
    os << ",\"xdot\":\"" << d.sym.xdot.get_str() << "\",\"ydot\":\""
       << d.sym.ydot.get_str() << "\"}";
  }
  os << "\n],\"max_curvature\":" << p.max_curvature.get_str() << ",\"root\":";
  os << "[" << p.root.b[0].get_str() << "," << p.root.b[1].get_str() << ","
     << p.root.b[2].get_str() << "," << p.root.b[3].get_str() << "]}\n";
  return os.str();
}

std::string spinor_json(const Spinor& s) {
  return "[" + s.x.get_str() + "," + s.y.get_str() + "]";
}

std::string param_tuple_json(const ParamTuple& t) {
  std::ostringstream os;
  os << "{";
  param_fields(os, t);
  os << "}";
  return os.str();
}

namespace {

std::vector<Int> parse_ints(const std::string& text, char sep, size_t expected) {
  std::vector<Int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty())
      throw DomainError(Err::UsageError, "empty component in '" + text + "'");
    try {
      out.emplace_back(cur, 10);  // force decimal: base 0 would read 0-prefixed octal
    } catch (const std::invalid_argument&) {
      throw DomainError(Err::UsageError, "not an integer: '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == sep)
      flush();
    else
      cur += c;
  }
  flush();
  if (out.size() != expected)
    throw DomainError(Err::UsageError, "expected " + std::to_string(expected) +
                                           " integers in '" + text + "'");
  return out;
}

}  // namespace

std::pair<Spinor, Spinor> parse_spinor_pair(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw DomainError(Err::UsageError, "expected 'x,y;u,v', got '" + text + "'");
  auto a = parse_ints(text.substr(0, semi), ',', 2);
  auto b = parse_ints(text.substr(semi + 1), ',', 2);
  return {Spinor(a[0], a[1]), Spinor(b[0], b[1])};
}

LatticeBasis parse_basis(const std::string& text) {
  auto [v, w] = parse_spinor_pair(text);
  return LatticeBasis(v, w);
}

DescartesQuadruple parse_quadruple(const std::string& text) {
  auto v = parse_ints(text, ',', 4);
  return DescartesQuadruple(v[0], v[1], v[2], v[3]);
}

}  // namespace apollon
