#pragma once

// Machine-stable serialization: RFC-4180 CSV with LF endings, JSON with
// sorted keys, decimals rendered from exact rationals (12 significant
// digits, round-half-even). No timestamps, no locale.

#include "apollon/enumerate.hpp"
#include "apollon/geometry.hpp"
#include "apollon/lattice.hpp"
#include "apollon/minkowski.hpp"

#include <string>
#include <vector>

namespace apollon {

// B,k,n,mu,B0,B1,B2,B3,B4
std::string classification_csv(const std::vector<ClassificationRow>& rows);
std::string classification_json(const std::vector<ClassificationRow>& rows);

// B,k,n,mu,X,Y
std::string dust_csv(const std::vector<DustPoint>& points);
std::string dust_json(const std::vector<DustPoint>& points);

// discriminant,k,n,mu,a_x,a_y,b_x,b_y
std::string lattice_csv(const Int& disc, const std::vector<LatticeBasis>& bases);

// {"disks":[{"beta":..,"depth":..,"xdot":"p/q","ydot":"p/q"},...],"root":[...]}
// line disks additionally carry "offset".
std::string packing_json(const Packing& p);

std::string spinor_json(const Spinor& s);
std::string param_tuple_json(const ParamTuple& t);

// Flag syntax: comma inside a vector, semicolon between vectors.
// Throw DomainError(UsageError) on malformed input.
std::pair<Spinor, Spinor> parse_spinor_pair(const std::string& text);
LatticeBasis parse_basis(const std::string& text);
DescartesQuadruple parse_quadruple(const std::string& text);

}  // namespace apollon
