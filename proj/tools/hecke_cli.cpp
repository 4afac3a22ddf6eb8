// hecke: command-line front end for the fusion library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/serialize.hpp"
#include "suites.hpp"

namespace fs = std::filesystem;
using namespace hecke;

namespace {

constexpr int kHardCap = 6;

struct Options {
  std::string emit = "text";
  int lmax = 4;
  bool allow_large = false;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool timing = false;

  std::string shape, tableau, kind = "F";
  std::string suite = "all";
  std::string lambda, mu, t, q;
  std::string z = "1", w = "5", iseq, jseq, Lambda, M;
  std::string out = "fixtures";
};

// Single computations are bounded by the hard cap; lmax only sizes suites.
void check_size(const Options& o, int size, const std::string& what) {
  const int cap = o.allow_large ? SymmetricGroup::max_rank : kHardCap;
  if (size > cap) throw InvalidInput(what + " has " + std::to_string(size) + " boxes, above the limit " + std::to_string(cap));
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.emit == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("expected comma-separated integers, got '" + s + "'");
    }
  }
  return v;
}

// "rows:[[1,2],[3]]", "[[1,2],[3]]"
StandardTableau parse_tableau(std::string s) {
  if (s.rfind("rows:", 0) == 0) s = s.substr(5);
  return StandardTableau::parse(s);
}

std::string json_line(const json& j) { return j.dump(); }

// Pads by code points so tags with "§" line up.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return s + std::string(n < width ? width - n : 1, ' ');
}

int cmd_fusion(const Options& o) {
  const Partition shape = Partition::parse(o.shape);
  if (shape.empty()) throw InvalidInput("--shape must be a nonempty partition");
  check_size(o, shape.size(), "shape");
  const StandardTableau t = o.tableau.empty() ? column_tableau(shape) : parse_tableau(o.tableau);
  if (t.shape() != shape) throw InvalidInput("tableau shape differs from --shape");
  Element e;
  if (o.kind == "F")
    e = fuse_F(t);
  else if (o.kind == "G")
    e = fuse_G(t);
  else
    e = diagonal_element(t);
  json j;
  j["command"] = "fusion";
  j["kind"] = o.kind;
  j["shape"] = to_json(shape);
  j["tableau"] = to_json(t);
  j["element"] = to_json(e);
  emit(o, j, o.kind + "_" + t.to_string() + " = " + to_text(e) + "\n");
  return 0;
}

int cmd_verify(const Options& o) {
  cli::SuiteOptions so;
  so.lmax = o.lmax;
  so.seed = o.seed;
  so.jobs = o.jobs;
  const auto results = cli::run_suite(o.suite, so);
  bool pass = true;
  json checks = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    pass = pass && r.pass;
    json c;
    c["suite"] = r.suite;
    c["tag"] = r.tag;
    c["name"] = r.name;
    c["cases"] = r.cases;
    c["pass"] = r.pass;
    if (o.timing) c["seconds"] = std::round(r.seconds * 1000) / 1000;
    if (!r.pass) c["counterexample"] = r.counterexample;
    checks.push_back(std::move(c));
    text << (r.pass ? "PASS " : "FAIL ") << pad(r.suite, 13) << pad(r.tag, 20) << r.name << "  ["
         << r.cases << " cases, " << std::fixed << std::setprecision(2) << r.seconds << "s]\n";
    if (!r.pass) text << "     counterexample: " << json_line(r.counterexample) << "\n";
  }
  text << (pass ? "all checks passed\n" : "verification FAILED\n");
  json j;
  j["command"] = "verify";
  j["suite"] = o.suite;
  j["lmax"] = o.lmax;
  j["seed"] = o.seed;
  j["checks"] = std::move(checks);
  j["pass"] = pass;
  emit(o, j, text.str());
  return pass ? 0 : 1;
}

int cmd_hook(const Options& o) {
  const Partition lambda = Partition::parse(o.lambda);
  check_size(o, lambda.size(), "lambda");
  json j;
  j["command"] = "hook";
  j["lambda"] = to_json(lambda);
  std::ostringstream text;
  const RationalFunction hff = hook_scalar_hff(lambda), hf = hook_scalar_hf(lambda);
  bool pass = hff == hf;
  if (o.q.empty()) {
    j["h"] = to_json(hff);
    j["h_text"] = to_pretty(hff);
    text << "h_lambda = " << to_pretty(hff) << "\n";
  } else {
    const Rational q0 = parse_rational(o.q);
    j["q"] = to_json(q0);
    j["h"] = to_json(specialize_q(hff, q0));
    text << "h_lambda(q = " << q0 << ") = " << specialize_q(hff, q0) << "\n";
  }
  j["hff_equals_hf"] = hff == hf;
  if (!o.mu.empty()) {
    const Partition mu = Partition::parse(o.mu);
    check_size(o, lambda.size() + mu.size(), "lambda + mu");
    if (o.t.empty()) {
      const auto r = corollary11(lambda, mu, eps());
      pass = pass && r.holds();
      j["mu"] = to_json(mu);
      j["t"] = "symbolic";
      j["ratio"] = to_json(r.from_hooks);
      j["ratio_text"] = to_pretty(r.from_hooks, "t");
      j["eigenvalue_ratio_matches"] = r.holds();
      text << "h_lambda,mu(t) = " << to_pretty(r.from_hooks, "t") << "\n";
    } else {
      const RationalFunction t = parse_monomial(o.t);
      const auto r = corollary11(lambda, mu, t);
      pass = pass && r.holds();
      j["mu"] = to_json(mu);
      j["t"] = to_pretty(t);
      if (o.q.empty()) {
        j["ratio"] = to_json(r.from_hooks);
        j["ratio_text"] = to_pretty(r.from_hooks);
        text << "h_lambda,mu(t = " << to_pretty(t) << ") = " << to_pretty(r.from_hooks) << "\n";
      } else {
        const Rational v = specialize_q(r.from_hooks, parse_rational(o.q));
        j["ratio"] = to_json(v);
        text << "h_lambda,mu(t = " << to_pretty(t) << ", q = " << o.q << ") = " << v << "\n";
      }
      j["eigenvalue_ratio_matches"] = r.holds();
    }
    text << "r_xi / r_eta " << (j["eigenvalue_ratio_matches"].get<bool>() ? "matches" : "DIFFERS from") << " the mixed hook product\n";
  }
  j["pass"] = pass;
  emit(o, j, text.str());
  return pass ? 0 : 1;
}

int cmd_rep(const Options& o) {
  const Partition shape = Partition::parse(o.shape);
  if (shape.empty()) throw InvalidInput("--shape must be a nonempty partition");
  check_size(o, shape.size(), "shape");
  const SeminormalRep rep = build_rep(shape);
  json j;
  j["command"] = "rep";
  j["rep"] = to_json(rep);
  std::ostringstream text;
  text << "basis:";
  for (const auto& t : rep.basis) text << " " << t.to_string();
  text << "\n";
  for (std::size_t k = 0; k < rep.generators.size(); ++k) text << "T_" << k + 1 << ":\n" << to_text(rep.generators[k]);
  emit(o, j, text.str());
  return 0;
}

int cmd_eigen(const Options& o) {
  const Partition lambda = Partition::parse(o.lambda), mu = Partition::parse(o.mu);
  if (lambda.empty() || mu.empty()) throw InvalidInput("--lambda and --mu must be nonempty");
  check_size(o, lambda.size() + mu.size(), "lambda + mu");
  const StandardTableau L = o.Lambda.empty() ? column_tableau(lambda) : parse_tableau(o.Lambda);
  const StandardTableau M = o.M.empty() ? column_tableau(mu) : parse_tableau(o.M);
  if (L.shape() != lambda || M.shape() != mu) throw InvalidInput("tableau shapes differ from --lambda / --mu");
  const auto s = make_setup(L, M, parse_monomial(o.z), parse_monomial(o.w));
  const std::vector<int> iseq = o.iseq.empty() ? std::vector<int>{} : parse_ints(o.iseq);
  const std::vector<int> jseq = o.jseq.empty() ? std::vector<int>{} : parse_ints(o.jseq);
  const EigenReport r = eigen_report(s, iseq, jseq);
  json j;
  j["command"] = "eigen";
  j["report"] = to_json(r);
  std::ostringstream text;
  text << "dim W = " << r.dimension << ", J commutes with H: " << (r.j_commutes ? "yes" : "NO") << "\n";
  for (const auto& p : r.predictions) {
    text << (p.ok() ? "PASS " : "FAIL ") << (p.kind == "xi" ? "Theorem 4.5 " : "Theorem 4.6 ") << p.kind << " seq=";
    for (std::size_t k = 0; k < p.sequence.size(); ++k) text << (k ? "," : "") << p.sequence[k];
    text << " shape=" << p.shape.to_string() << " r = " << to_pretty(p.value) << "  det(J - rI) = 0: " << (p.determinant_ok ? "yes" : "no");
    if (p.has_eigenvector) text << ", Prop 4.4 eigenvector: " << (p.eigenvector_ok ? "yes" : "no");
    text << "\n";
  }
  emit(o, j, text.str());
  return r.ok() ? 0 : 1;
}

int cmd_fixtures(const Options& o) {
  int written = 0;
  for (int n = 1; n <= o.lmax; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& t : standard_tableaux(lambda)) {
        json j;
        j["shape"] = to_json(lambda);
        j["tableau"] = to_json(t);
        j["F"] = to_json(fuse_F(t));
        j["G"] = to_json(fuse_G(t));
        j["E"] = to_json(diagonal_element(t));
        const fs::path p = fixture_path(o.out, t);
        fs::create_directories(p.parent_path());
        std::ofstream f(p);
        f << j.dump(1) << "\n";
        if (!f) throw Error("cannot write " + p.string());
        ++written;
      }
  json j;
  j["command"] = "fixtures";
  j["written"] = written;
  emit(o, j, "wrote " + std::to_string(written) + " fixtures under " + o.out + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact fusion procedure for Hecke algebras of type A"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with the same keys as the flags");
  app.add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--lmax", o.lmax, "Largest number of boxes (l, or l+m)")->envname("HECKE_LMAX")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", o.allow_large, "Permit lmax above the hard cap of 6");
  app.add_option("--seed", o.seed, "Seed for randomized spot checks");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timing", o.timing, "Include timing in JSON reports");

  auto* fusion = app.add_subcommand("fusion", "Emit F, G or E for a tableau");
  fusion->add_option("--shape", o.shape, "Partition, e.g. 2,1")->required();
  fusion->add_option("--tableau", o.tableau, "rows:[[1,2],[3]]; default the column tableau");
  fusion->add_option("--kind", o.kind, "F, G or E")->check(CLI::IsMember({"F", "G", "E"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember({"presentation", "fusion", "seminormal", "intertwiner", "all"}));

  auto* hook = app.add_subcommand("hook", "q-hook scalar h_lambda and the mixed ratio h_lambda,mu");
  hook->add_option("--lambda", o.lambda, "Partition")->required();
  hook->add_option("--mu", o.mu, "Second partition");
  hook->add_option("--t", o.t, "Value of t = w/z, e.g. 5 or 3*q^2; symbolic when omitted");
  hook->add_option("--q", o.q, "Rational value of q");

  auto* rep = app.add_subcommand("rep", "Seminormal matrices of T_1, ..., T_{l-1}");
  rep->add_option("--shape", o.shape, "Partition")->required();

  auto* eigen = app.add_subcommand("eigen", "Predicted eigenvalues of J checked exactly");
  eigen->add_option("--lambda", o.lambda, "Partition")->required();
  eigen->add_option("--mu", o.mu, "Partition")->required();
  eigen->add_option("--z", o.z, "z, e.g. 1");
  eigen->add_option("--w", o.w, "w, e.g. 5");
  eigen->add_option("--iseq", o.iseq, "Restrict to one i-sequence, e.g. 1,2");
  eigen->add_option("--jseq", o.jseq, "Restrict to one j-sequence");
  eigen->add_option("--Lambda", o.Lambda, "Tableau of shape lambda; default the column tableau");
  eigen->add_option("--M", o.M, "Tableau of shape mu; default the column tableau");

  auto* fixtures = app.add_subcommand("fixtures", "Write F, G, E for every tableau up to lmax as JSON");
  fixtures->add_option("--out", o.out, "Output root");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (o.lmax > kHardCap) {
    if (!o.allow_large) {
      std::cerr << "error: lmax " << o.lmax << " exceeds the hard cap " << kHardCap << " (use --allow-large)\n";
      return 2;
    }
    std::cerr << "warning: lmax " << o.lmax << " is above the hard cap " << kHardCap << "; expect long run times\n";
  }

  try {
    if (*fusion) return cmd_fusion(o);
    if (*verify) return cmd_verify(o);
    if (*hook) return cmd_hook(o);
    if (*rep) return cmd_rep(o);
    if (*eigen) return cmd_eigen(o);
    if (*fixtures) return cmd_fixtures(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
