#include "hecke/serialize.hpp"

namespace hecke {

json to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InvalidInput("rational coefficients are strings like \"-1/2\"");
  return parse_rational(j.get<std::string>());
}

namespace {

json poly_json(const LaurentPolynomial& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(json::array({e, to_json(c)}));
  return a;
}

LaurentPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be an array of [exponent, coefficient] pairs");
  LaurentPolynomial p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw InvalidInput("polynomial term must be [exponent, \"coefficient\"]");
    p = p + LaurentPolynomial(rational_from_json(t[1]), t[0].get<int>());
  }
  return p;
}

}  // namespace

json to_json(const RationalFunction& f) {
  json j;
  j["num"] = poly_json(f.num());
  j["den"] = poly_json(f.den());
  return j;
}

RationalFunction rf_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw InvalidInput("rational function needs \"num\" and \"den\"");
  LaurentPolynomial den = poly_from_json(j["den"]);
  if (den.is_zero()) throw DivisionByZero("zero denominator in JSON rational function");
  return RationalFunction(poly_from_json(j["num"]), std::move(den));
}

json to_json(const EpsilonFunction& f) {
  auto poly = [](const LaurentPoly<RationalFunction>& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) a.push_back(json::array({e, to_json(c)}));
    return a;
  };
  json j;
  j["num"] = poly(f.num());
  j["den"] = poly(f.den());
  return j;
}

json to_json(const Permutation& p) { return p.images(); }

json to_json(const Partition& p) { return p.parts(); }

json to_json(const StandardTableau& t) { return t.rows(); }

json to_json(const Element& e) {
  json j;
  j["rank"] = e.rank();
  json terms = json::array();
  const auto& g = e.group();
  for (std::size_t s : e.support()) {
    json t;
    t["perm"] = to_json(g.perm(s));
    t["coeff"] = to_json(e[s]);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Element element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("terms") || !j["rank"].is_number_integer())
    throw InvalidInput("element needs an integer \"rank\" and \"terms\"");
  const int l = j["rank"].get<int>();
  if (l < 1 || l > SymmetricGroup::max_rank) throw InvalidInput("element rank out of range");
  Element e(l);
  const auto& g = SymmetricGroup::get(l);
  for (const auto& t : j["terms"]) {
    if (!t.contains("perm") || !t.contains("coeff")) throw InvalidInput("term needs \"perm\" and \"coeff\"");
    const Permutation p(t["perm"].get<std::vector<int>>());
    if (p.size() != l) throw InvalidInput("term permutation has the wrong degree");
    e[g.index(p)] += rf_from_json(t["coeff"]);
  }
  return e;
}

json to_json(const RFMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RFMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  const int r = static_cast<int>(j.size());
  const int c = r ? static_cast<int>(j[0].size()) : 0;
  RFMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_array() || static_cast<int>(j[static_cast<std::size_t>(i)].size()) != c)
      throw InvalidInput("matrix rows have different lengths");
    for (int k = 0; k < c; ++k) m(i, k) = rf_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  }
  return m;
}

json to_json(const SeminormalRep& rep) {
  json j;
  j["shape"] = to_json(rep.shape);
  json basis = json::array();
  for (const auto& t : rep.basis) basis.push_back(to_json(t));
  j["basis"] = std::move(basis);
  json gens = json::array();
  for (const auto& g : rep.generators) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

json to_json(const EigenReport& rep) {
  json j;
  j["lambda"] = to_json(rep.setup.lambda);
  j["mu"] = to_json(rep.setup.mu);
  j["Lambda"] = to_json(rep.setup.Lambda);
  j["M"] = to_json(rep.setup.M);
  j["z"] = to_json(rep.setup.z);
  j["w"] = to_json(rep.setup.w);
  j["dimension"] = rep.dimension;
  j["j_commutes"] = rep.j_commutes;
  json preds = json::array();
  for (const auto& p : rep.predictions) {
    json x;
    x["kind"] = p.kind;
    x["sequence"] = p.sequence;
    x["shape"] = to_json(p.shape);
    x["predicted"] = to_json(p.value);
    x["predicted_text"] = to_pretty(p.value);
    x["verified_eigenvalue"] = p.determinant_ok;
    if (p.has_eigenvector) x["verified_eigenvector"] = p.eigenvector_ok;
    preds.push_back(std::move(x));
  }
  j["predictions"] = std::move(preds);
  j["ok"] = rep.ok();
  return j;
}

std::string to_text(const Element& e) {
  std::string out;
  const auto& g = e.group();
  for (std::size_t s : e.support()) {
    const RationalFunction& c = e[s];
    std::string coeff = to_pretty(c);
    const bool monomial = c.num().size() == 1 && c.den().is_one();
    const bool neg = monomial && coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    if (!monomial) coeff = "(" + coeff + ")";
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += (coeff == "1" ? "" : coeff + "*") + "T" + g.perm(s).to_string();
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const RFMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    out += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_pretty(m(i, j));
    }
    out += "]\n";
  }
  return out;
}

std::string fixture_path(const std::string& root, const StandardTableau& t) {
  return root + "/fusion/λ=" + t.shape().to_string() + "/tableau=" + t.to_string() + ".json";
}

}  // namespace hecke
