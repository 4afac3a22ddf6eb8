#include "hecke/scalars.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace hecke {

namespace detail {
namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_integer(const std::vector<Rational>& a) {
  mpz_class l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), a[i].get_den_mpz_t());
    r[i] = a[i].get_num() * f;
  }
  make_primitive(r);
  return r;
}

// Pseudo-remainder of a by b, scaled down by gcd of leading coefficients each step.
void pseudo_rem(ZPoly& a, const ZPoly& b) {
  const std::size_t m = b.size();
  mpz_class g, la, lb, t;
  while (a.size() >= m) {
    mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    mpz_divexact(la.get_mpz_t(), a.back().get_mpz_t(), g.get_mpz_t());
    mpz_divexact(lb.get_mpz_t(), b.back().get_mpz_t(), g.get_mpz_t());
    const std::size_t shift = a.size() - m;
    if (lb != 1)
      for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] *= lb;
    for (std::size_t j = 0; j + 1 < m; ++j) {
      t = la * b[j];
      a[shift + j] -= t;
    }
    a.pop_back();
    ztrim(a);
  }
}

}  // namespace

std::vector<Rational> gcd_monic(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) {
    auto& p = a.empty() ? b : a;
    if (p.empty()) return {};
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
  }
  if (a.size() == 1 || b.size() == 1) return {Rational(1)};
  ZPoly x = to_integer(a), y = to_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return {Rational(1)};
    pseudo_rem(x, y);
    make_primitive(x);
    std::swap(x, y);
  }
  std::vector<Rational> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = Rational(x[i], x.back());
  for (auto& c : r) c.canonicalize();
  return r;
}

}  // namespace detail

RationalFunction q_pow(int k) { return RationalFunction::monomial(Rational(1), k); }

const RationalFunction& q_diff() {
  static const RationalFunction v = q_pow(1) - q_pow(-1);
  return v;
}

RationalFunction bar(const RationalFunction& f) {
  return RationalFunction(f.num().reflected(), f.den().reflected());
}

Rational specialize_q(const RationalFunction& f, const Rational& q0) { return evaluate(f, q0); }

EpsilonFunction eps() { return EpsilonFunction::variable(1); }

RationalFunction eval_eps_zero(const EpsilonFunction& f) {
  if (f.is_zero()) return RationalFunction();
  if (f.num().low() < 0) throw NotRegular("not regular at eps = 0");
  // den has lowest exponent 0, so den(0) is its trailing coefficient.
  return f.num().coefficient(0) / f.den().trailing();
}

EpsilonFunction bar(const EpsilonFunction& f) {
  auto map = [](const LaurentPoly<RationalFunction>& p) {
    std::vector<LaurentPoly<RationalFunction>::Term> t;
    for (const auto& [e, c] : p.terms()) t.emplace_back(e, bar(c));
    return LaurentPoly<RationalFunction>::from_terms(std::move(t));
  };
  return EpsilonFunction(map(f.num()), map(f.den()));
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(^\s*[+-]?\d+(/\d+)?\s*$)");
  if (!std::regex_match(s, re)) throw InvalidInput("not a rational number: '" + s + "'");
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '+') t += c;
  Rational r(t, 10);
  if (r.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

namespace {

std::string text_poly(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*q^" + std::to_string(e);
  }
  return out;
}

std::string pretty_monomial(const Rational& c, int e, bool first) {
  std::string s;
  Rational a = abs(c);
  if (sgn(c) < 0)
    s += first ? "-" : " - ";
  else if (!first)
    s += " + ";
  if (e == 0) return s + a.get_str();
  if (a != 1) s += a.get_str() + "*";
  s += "q";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string pretty_poly(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) out += pretty_monomial(it->second, it->first, it == t.rbegin());
  return out;
}

}  // namespace

std::string to_text(const RationalFunction& f) { return text_poly(f.num()) + " / " + text_poly(f.den()); }

std::string to_pretty(const RationalFunction& f) {
  std::string n = pretty_poly(f.num());
  if (f.den().is_one()) return n;
  if (f.num().size() > 1) n = "(" + n + ")";
  std::string d = pretty_poly(f.den());
  if (f.den().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::string to_pretty(const EpsilonFunction& f, const std::string& var) {
  auto poly = [&](const LaurentPoly<RationalFunction>& p) {
    if (p.is_zero()) return std::string("0");
    std::string out;
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = to_pretty(c);
      const bool monomial = c.num().size() == 1 && c.den().is_one();
      const bool neg = monomial && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (!monomial) cs = "(" + cs + ")";
      if (e != 0) {
        cs = cs == "1" ? var : cs + "*" + var;
        if (e != 1) cs += "^" + std::to_string(e);
      }
      out += it == t.rbegin() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      out += cs;
    }
    return out;
  };
  std::string n = poly(f.num());
  if (f.den().is_one()) return n;
  if (f.num().size() > 1) n = "(" + n + ")";
  std::string d = poly(f.den());
  if (f.den().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFunction parse_monomial(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  static const std::regex re(R"(^([+-]?)(\d+(?:/\d+)?)?(\*?q(?:\^\(?([+-]?\d+)\)?)?)?$)");
  std::smatch m;
  if (t.empty() || !std::regex_match(t, m, re) || (!m[2].matched && !m[3].matched))
    throw InvalidInput("cannot parse scalar '" + s + "' (expected e.g. 5, -1/2, q^2, 3*q^-1)");
  Rational c = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
  if (m[1].str() == "-") c = -c;
  int k = 0;
  if (m[3].matched) k = m[4].matched ? std::stoi(m[4].str()) : 1;
  return RationalFunction::monomial(c, k);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << to_pretty(f); }
std::ostream& operator<<(std::ostream& os, const EpsilonFunction& f) { return os << to_pretty(f); }

}  // namespace hecke
