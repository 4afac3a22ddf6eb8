#pragma once

// JSON and text forms of scalars, elements, matrices and reports.
//
//   RationalFunction  {"num": [[k, "c"], ...], "den": [[k, "c"], ...]}
//   Element           {"rank": l, "terms": [{"perm": [...], "coeff": <rf>}, ...]}
//   Matrix            row-major array of rows of <rf>
//
// Coefficients are exact rationals in GMP canonical form ("3", "-1/2").

#include <string>

#include <json.hpp>

#include "hecke/intertwiner.hpp"
#include "hecke/seminormal.hpp"

namespace hecke {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const RationalFunction& f);
RationalFunction rf_from_json(const json& j);
// Same layout with rational-function coefficients.
json to_json(const EpsilonFunction& f);

json to_json(const Permutation& p);
json to_json(const Partition& p);
json to_json(const StandardTableau& t);

// Terms ordered by (length, lexicographic one-line).
json to_json(const Element& e);
Element element_from_json(const json& j);

json to_json(const RFMatrix& m);
RFMatrix matrix_from_json(const json& j);

json to_json(const SeminormalRep& rep);
json to_json(const EigenReport& rep);

// "c*T[2,1,3] + ...", terms in JSON order, coefficients by to_pretty.
std::string to_text(const Element& e);
std::string to_text(const RFMatrix& m);

// fixtures/fusion/λ=<parts>/tableau=<rows>.json relative to root
std::string fixture_path(const std::string& root, const StandardTableau& t);

}  // namespace hecke
