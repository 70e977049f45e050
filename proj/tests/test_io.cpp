#include "apollon/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace apollon;

TEST_CASE("decimal_string") {
  CHECK(decimal_string(Rat(0)) == "0");
  CHECK(decimal_string(make_rat(6, 5)) == "1.2");
  CHECK(decimal_string(make_rat(-6, 5)) == "-1.2");
  CHECK(decimal_string(make_rat(1, 3)) == "0.333333333333");
  CHECK(decimal_string(make_rat(2, 3)) == "0.666666666667");
  CHECK(decimal_string(Rat(42)) == "42");
  CHECK(decimal_string(make_rat(1, 1000)) == "0.001");
  CHECK(decimal_string(Rat(Int("1000000000000000"))) == "1000000000000000");

  // round-half-even at the last kept digit
  CHECK(decimal_string(make_rat(125, 1000), 2) == "0.12");
  CHECK(decimal_string(make_rat(135, 1000), 2) == "0.14");
  CHECK(decimal_string(make_rat(999999999999995, 1), 14) == "1000000000000000");
}

namespace {

// parse a plain decimal string back into an exact rational
Rat parse_decimal(const std::string& s) {
  std::string t = s;
  bool neg = !t.empty() && t[0] == '-';
  if (neg) t.erase(0, 1);
  auto dotpos = t.find('.');
  unsigned frac_digits = 0;
  if (dotpos != std::string::npos) {
    frac_digits = static_cast<unsigned>(t.size() - dotpos - 1);
    t.erase(dotpos, 1);
  }
  Rat r = make_rat(Int(t, 10), int_pow10(frac_digits));
  return neg ? Rat(-r) : r;
}

}  // namespace

TEST_CASE("decimal_string round trip stays within half an ulp") {
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    Rat r = make_rat(num(rng), den(rng));
    if (r == 0) continue;
    std::string s = decimal_string(r, 12);
    Rat back = parse_decimal(s);
    // |back - r| <= 0.5 * 10^(exp10 - 11), exp10 from the leading digit
    Rat mag = abs(r);
    long exp10 = 0;
    while (mag >= 10) { mag /= 10; ++exp10; }
    while (mag < 1) { mag *= 10; --exp10; }
    Rat ulp;
    long shift = exp10 - 11;
    if (shift >= 0)
      ulp = Rat(int_pow10(static_cast<unsigned>(shift)));
    else
      ulp = make_rat(1, int_pow10(static_cast<unsigned>(-shift)));
    Rat diff = abs(Rat(back - r));
    CHECK(2 * diff <= ulp);
  }
}

TEST_CASE("classification csv") {
  auto rows = enumerate_range(2);
  std::string csv = classification_csv(rows);
  CHECK(csv ==
        "B,k,n,mu,B0,B1,B2,B3,B4\n"
        "1,1,1,0,-1,2,2,3,3\n"
        "2,1,4,0,-2,3,6,7,7\n");
}

TEST_CASE("classification json parses and has sorted keys") {
  auto rows = enumerate_range(3);
  std::string text = classification_json(rows);
  auto j = nlohmann::json::parse(text);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == rows.size());
  CHECK(j[0]["B"] == 1);
  CHECK(j[0]["quintet"] == nlohmann::json::array({-1, 2, 2, 3, 3}));
  CHECK(j[1]["quad_main"] == nlohmann::json::array({-2, 3, 6, 7}));
  CHECK(j[1]["quad_conj"] == nlohmann::json::array({-2, 3, 6, 7}));

  // keys appear in sorted order in the serialized text
  size_t pb = text.find("\"B\"");
  size_t pk = text.find("\"k\"");
  size_t pm = text.find("\"mu\"");
  size_t pn = text.find("\"n\"");
  CHECK(pb < pk);
  CHECK(pk < pm);
  CHECK(pm < pn);
}

TEST_CASE("dust csv") {
  auto pts = dust_dataset(1, Projection::North);
  CHECK(dust_csv(pts) == "B,k,n,mu,X,Y\n1,1,1,0,1,0\n");
  auto south = dust_dataset(1, Projection::South);
  CHECK(dust_csv(south) == "B,k,n,mu,X,Y\n1,1,1,0,1,0\n");

  auto six = dust_dataset(6, Projection::North);
  std::string csv = dust_csv(six);
  CHECK(csv.find("6,5,8,2,1.2,0.4\n") != std::string::npos);
}

TEST_CASE("dust json parses") {
  auto pts = dust_dataset(6, Projection::South);
  auto j = nlohmann::json::parse(dust_json(pts));
  REQUIRE(j.is_array());
  CHECK(j.size() == pts.size());
  CHECK(j.back()["B"] == 6);
}

TEST_CASE("lattice csv") {
  auto bases = lattices_of_discriminant(1);
  std::string csv = lattice_csv(1, bases);
  CHECK(csv ==
        "discriminant,k,n,mu,a_x,a_y,b_x,b_y\n"
        "1,1,1,0,1,0,0,1\n");
}

TEST_CASE("packing json") {
  Packing p = build_packing(DescartesQuadruple(-1, 2, 2, 3), 15);
  auto j = nlohmann::json::parse(packing_json(p));
  CHECK(j["root"] == nlohmann::json::array({-1, 2, 2, 3}));
  CHECK(j["max_curvature"] == 15);
  REQUIRE(j["disks"].is_array());
  CHECK(j["disks"].size() == p.disks.size());
  CHECK(j["disks"][0]["beta"] == -1);
  CHECK(j["disks"][0]["xdot"] == "0");
  CHECK(j["disks"][0]["depth"] == 0);

  Packing strip = build_packing(DescartesQuadruple(0, 0, 2, 2), 32);
  auto js = nlohmann::json::parse(packing_json(strip));
  bool line_with_offset = false;
  for (const auto& d : js["disks"])
    if (d["beta"] == 0 && d.contains("offset")) line_with_offset = true;
  CHECK(line_with_offset);
}

TEST_CASE("spinor json") {
  CHECK(spinor_json(Spinor(1, -2)) == "[1,-2]");
  CHECK(param_tuple_json(ParamTuple{6, 5, 8, 2}) ==
        "{\"B\":6,\"k\":5,\"mu\":2,\"n\":8}");
}

TEST_CASE("flag parsing") {
  auto [a, b] = parse_spinor_pair("1,-2;2,2");
  CHECK(a == Spinor(1, -2));
  CHECK(b == Spinor(2, 2));

  auto q = parse_quadruple("-6,11,14,15");
  CHECK(q == DescartesQuadruple(-6, 11, 14, 15));

  LatticeBasis basis = parse_basis("5,2;7,4");
  CHECK(basis.v == Spinor(5, 2));
  CHECK(basis.w == Spinor(7, 4));

  CHECK_THROWS_AS(parse_spinor_pair("1,2"), DomainError);
  CHECK_THROWS_AS(parse_spinor_pair("1,x;2,2"), DomainError);
  CHECK_THROWS_AS(parse_quadruple("1,2,3"), DomainError);
  CHECK_THROWS_AS(parse_quadruple("1,2,3,4,5"), DomainError);

  // zero-prefixed input stays decimal
  CHECK(parse_quadruple("010,09,-08,007") == DescartesQuadruple(10, 9, -8, 7));
}
