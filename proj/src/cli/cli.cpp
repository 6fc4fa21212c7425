#include "nakai/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "nakai/derivations.hpp"
#include "nakai/errors.hpp"
#include "nakai/expr.hpp"
#include "nakai/log.hpp"
#include "nakai/symdet.hpp"
#include "nakai/witness.hpp"

namespace nakai::cli {

namespace {

using Json = nlohmann::ordered_json;
using Vars = std::vector<std::string>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string vars;
  std::string order = "grevlex";
  std::uint64_t seed = 0;
  int bound = 3;
  unsigned retries = 200;
  bool json = false;
  std::string out_path;
  std::size_t max_pairs = GroebnerOptions{}.max_pairs;
  std::string file;
  bool prefilter = false;
  std::string slice;

  std::string expr;
  std::string ideal;
  std::string certificate;
  int i = 0, j = 0, k = 0;
};

struct Input {
  Polynomial f;
  Vars vars;
};

std::string fmt(const Polynomial& p, const Vars& vars) { return format_poly(p, vars); }

std::string join(const Vars& names, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) out += (k ? sep : "") + names[k];
  return out;
}

std::string read_stream(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string read_path(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return read_stream(in);
}

// Input file: '#' starts a comment, an optional "vars: x, y, z" line, the
// remaining lines form the expression.
std::pair<std::string, std::optional<Vars>> read_input_file(const std::string& path) {
  std::istringstream lines(read_path(path));
  std::string line, expr;
  std::optional<Vars> vars;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line.compare(first, 5, "vars:") == 0) {
      if (vars) throw UsageError("'" + path + "' declares variables twice");
      vars = parse_variable_list(line.substr(first + 5));
      continue;
    }
    expr += line + " ";
  }
  if (expr.find_first_not_of(" \t\r") == std::string::npos) throw UsageError("'" + path + "' has no expression");
  return {expr, vars};
}

std::vector<std::string> split_commas(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const auto& s : out)
    if (s.find_first_not_of(" \t") == std::string::npos) throw UsageError("empty entry in a comma-separated list");
  return out;
}

// Expression and variables from the positional argument or --file; --vars
// wins over a file header, and without either the identifiers are inferred.
std::pair<std::string, Vars> expression_and_vars(const Options& o, std::vector<std::string> also_inferred = {}) {
  if (o.expr.empty() == o.file.empty()) throw UsageError("give exactly one of an expression or --file");
  std::string text = o.expr;
  std::optional<Vars> header;
  if (!o.file.empty()) std::tie(text, header) = read_input_file(o.file);
  Vars vars;
  if (!o.vars.empty()) {
    vars = parse_variable_list(o.vars);
  } else if (header) {
    vars = *header;
  } else {
    also_inferred.push_back(text);
    vars = infer_variables(also_inferred);
  }
  if (vars.empty()) throw UsageError("no variables: pass --vars");
  return {text, vars};
}

Input read_input(const Options& o) {
  auto [text, vars] = expression_and_vars(o);
  return {parse_poly(text, vars), vars};
}

GroebnerOptions limits(const Options& o) {
  GroebnerOptions g;
  g.max_pairs = o.max_pairs;
  return g;
}

PipelineConfig pipeline(const Options& o) {
  PipelineConfig cfg;
  cfg.bound = o.bound;
  cfg.retries = o.retries;
  cfg.seed = o.seed;
  cfg.order = parse_order(o.order);
  cfg.limits = limits(o);
  cfg.prefilter = o.prefilter;
  if (!o.slice.empty())
    for (const auto& a : split_commas(o.slice)) {
      try {
        cfg.slice.push_back(parse_rational(a));
      } catch (const std::invalid_argument&) {
        throw UsageError("bad slice coefficient '" + a + "'");
      }
    }
  return cfg;
}

// Milnor number when J(f) is zero-dimensional.
std::optional<std::size_t> milnor_number(const Polynomial& f, const Options& o) {
  GroebnerBasis gb = buchberger(jacobian_ideal(f), parse_order(o.order), limits(o));
  if (!is_zero_dimensional(gb)) return std::nullopt;
  return quotient_dimension(gb);
}

std::string weights_text(const QuasiHomogeneity& w) {
  std::string out;
  for (std::size_t k = 0; k < w.weights.size(); ++k) out += (k ? ", " : "") + std::to_string(w.weights[k]);
  return out;
}

// check

int cmd_check(const Options& o, std::ostream& out) {
  Input in = read_input(o);
  const Polynomial& f = in.f;
  Json j;
  j["f"] = fmt(f, in.vars);
  j["variables"] = in.vars;

  auto deg = homogeneous_degree(f);
  j["homogeneous"] = deg.has_value() && !f.is_zero();
  j["degree"] = f.total_degree() ? Json(*f.total_degree()) : Json(nullptr);

  std::optional<QuasiHomogeneity> w;
  if (!f.is_constant()) w = quasi_homogeneous_weights(f);
  j["weights"] = w ? Json(w->weights) : Json(nullptr);
  j["weighted_degree"] = w ? Json(w->degree) : Json(nullptr);

  std::optional<std::size_t> mu;
  if (!f.is_constant()) mu = milnor_number(f, o);
  j["jacobian_zero_dimensional"] = mu.has_value();
  if (w)
    j["isolated_singularity"] = mu.has_value() && is_isolated_quasi_homogeneous(f, parse_order(o.order));
  else
    j["isolated_singularity"] = nullptr;
  j["milnor_number"] = mu ? Json(*mu) : Json(nullptr);

  if (o.json) {
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  out << "f = " << j["f"].get<std::string>() << "\n";
  out << "variables: " << join(in.vars) << "\n";
  if (j["homogeneous"].get<bool>())
    out << "homogeneous: yes, degree " << *deg << "\n";
  else
    out << "homogeneous: no\n";
  if (w)
    out << "weights: " << weights_text(*w) << " (weighted degree " << w->degree << ")\n";
  else
    out << "weights: none (not quasi-homogeneous)\n";
  out << "jacobian ideal: " << (mu ? "zero-dimensional" : "not zero-dimensional") << "\n";
  if (w)
    out << "isolated singularity: " << (j["isolated_singularity"].get<bool>() ? "yes" : "no") << "\n";
  else
    out << "isolated singularity: unknown (not quasi-homogeneous)\n";
  out << "milnor number: " << (mu ? std::to_string(*mu) : std::string("infinite")) << "\n";
  return kSuccess;
}

// milnor

int cmd_milnor(const Options& o, std::ostream& out, std::ostream& err) {
  Input in = read_input(o);
  if (in.f.is_constant()) {
    err << "error: constant polynomial\n";
    return kRejected;
  }
  auto mu = milnor_number(in.f, o);
  if (o.json) {
    Json j;
    j["f"] = fmt(in.f, in.vars);
    j["milnor_number"] = mu ? Json(*mu) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else if (mu) {
    out << *mu << "\n";
  } else {
    out << "infinite\n";
  }
  if (!mu) err << "J(f) is not zero-dimensional\n";
  return mu ? kSuccess : kRejected;
}

// member

int cmd_member(const Options& o, std::ostream& out) {
  if (o.ideal.empty()) throw UsageError("--ideal is required");
  std::vector<std::string> gen_texts = split_commas(o.ideal);
  auto [text, vars] = expression_and_vars(o, gen_texts);
  Polynomial p = parse_poly(text, vars);
  std::vector<Polynomial> gens;
  for (const auto& g : gen_texts) gens.push_back(parse_poly(g, vars));

  GroebnerOptions opts = limits(o);
  opts.track_cofactors = true;
  GroebnerBasis gb = buchberger(Ideal(gens), parse_order(o.order), opts);
  Polynomial nf = normal_form(p, gb);
  bool member = nf.is_zero();
  std::optional<std::vector<Polynomial>> lift;
  if (member) lift = lift_membership(p, gb);

  if (o.json) {
    Json j;
    j["p"] = fmt(p, vars);
    j["variables"] = vars;
    Json g = Json::array();
    for (const auto& q : gens) g.push_back(fmt(q, vars));
    j["ideal"] = std::move(g);
    Json b = Json::array();
    for (const auto& q : gb.basis()) b.push_back(fmt(q, vars));
    j["basis"] = std::move(b);
    j["normal_form"] = fmt(nf, vars);
    j["member"] = member;
    if (lift) {
      Json c = Json::array();
      for (const auto& q : *lift) c.push_back(fmt(q, vars));
      j["cofactors"] = std::move(c);
    } else {
      j["cofactors"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  out << "normal form: " << fmt(nf, vars) << "\n";
  if (lift)
    for (std::size_t k = 0; k < lift->size(); ++k)
      out << "  cofactor of g" << k + 1 << ": " << fmt((*lift)[k], vars) << "\n";
  out << (member ? "MEMBER" : "NOT MEMBER") << "\n";
  return kSuccess;
}

// identity

int cmd_identity(const Options& o, std::ostream& out, std::ostream& err) {
  Input in = read_input(o);
  const std::size_t n = in.f.nvars();
  auto deg = homogeneous_degree(in.f);
  if (!deg || in.f.is_zero() || *deg < 2) {
    err << "error: the identity needs a homogeneous polynomial of degree >= 2\n";
    return kRejected;
  }
  auto range = [&](int v, const char* name) {
    if (v < 0 || std::size_t(v) > n) throw UsageError(std::string("-") + name + " must lie in 1.." + std::to_string(n));
    return v == 0 ? std::pair<std::size_t, std::size_t>{0, n} : std::pair<std::size_t, std::size_t>{v - 1, v};
  };
  auto [i0, i1] = range(o.i, "i");
  auto [j0, j1] = range(o.j, "j");
  auto [k0, k1] = range(o.k, "k");
  const bool single = o.i && o.j && o.k;

  Json rows = Json::array();
  bool all = true;
  for (std::size_t i = i0; i < i1; ++i)
    for (std::size_t j = j0; j < j1; ++j)
      for (std::size_t k = k0; k < k1; ++k) {
        IdentityReport r = verify_cofactor_identity(in.f, i, j, k);
        all = all && r.holds;
        if (o.json) {
          Json e;
          e["i"] = i + 1;
          e["j"] = j + 1;
          e["k"] = k + 1;
          e["lhs"] = fmt(r.lhs, in.vars);
          e["rhs"] = fmt(r.rhs, in.vars);
          e["residual"] = fmt(r.residual, in.vars);
          e["holds"] = r.holds;
          rows.push_back(std::move(e));
          continue;
        }
        if (single) {
          out << "lhs = " << fmt(r.lhs, in.vars) << "\n";
          out << "rhs = " << fmt(r.rhs, in.vars) << "\n";
        }
        out << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ") residual = " << fmt(r.residual, in.vars) << "  "
            << (r.holds ? "HOLDS" : "FAILS") << "\n";
      }
  if (o.json) {
    Json j;
    j["f"] = fmt(in.f, in.vars);
    j["triples"] = std::move(rows);
    j["all_hold"] = all;
    out << j.dump(2) << "\n";
  }
  if (!all) err << "error: a cofactor identity has a nonzero residual\n";
  return all ? kSuccess : kInternal;
}

// symmetrize

std::string hamiltonian_name(std::size_t k, std::size_t l, const Vars& vars) {
  return "D[" + vars[k] + "," + vars[l] + "]";
}

Json tuple_json(const DerivationTuple& t, const Vars& vars) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.size(); ++j) row.push_back(fmt(t.entry(i, j), vars));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_tuple(const DerivationTuple& t, const Vars& vars, std::ostream& out) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      out << "  d_" << i + 1 << "(" << vars[j] << ") = " << fmt(t.entry(i, j), vars) << "\n";
}

int cmd_symmetrize(const Options& o, std::ostream& out, std::ostream& err) {
  Input in = read_input(o);
  std::optional<QuasiHomogeneity> w;
  if (!in.f.is_constant()) w = quasi_homogeneous_weights(in.f);
  if (!w) {
    err << "error: f is not quasi-homogeneous\n";
    return kRejected;
  }
  if (!is_isolated_quasi_homogeneous(in.f, parse_order(o.order))) {
    err << "error: f does not have an isolated singularity\n";
    return kRejected;
  }
  GroebnerOptions opts = limits(o);
  opts.track_cofactors = true;
  GroebnerBasis jgb = buchberger(jacobian_ideal(in.f), MonomialOrder::grevlex(), opts);
  DerivationTuple candidate = build_candidate_tuple(in.f, *w);
  SymmetrizeResult sym = symmetrize(candidate, in.f, &jgb);

  if (o.json) {
    Json j;
    j["f"] = fmt(in.f, in.vars);
    j["variables"] = in.vars;
    j["weights"] = w->weights;
    j["candidate_tuple"] = tuple_json(candidate, in.vars);
    Json ledger = Json::array();
    for (const auto& a : sym.ledger) {
      Json e;
      e["target"] = a.target + 1;
      e["k"] = a.k + 1;
      e["l"] = a.l + 1;
      e["coefficient"] = fmt(a.coeff, in.vars);
      ledger.push_back(std::move(e));
    }
    j["adjustments"] = std::move(ledger);
    j["symmetric_tuple"] = tuple_json(sym.tuple, in.vars);
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  out << "f = " << fmt(in.f, in.vars) << "\n";
  out << "candidate tuple:\n";
  print_tuple(candidate, in.vars, out);
  out << "adjustments: " << sym.ledger.size() << "\n";
  for (const auto& a : sym.ledger)
    out << "  d_" << a.target + 1 << " += (" << fmt(a.coeff, in.vars) << ") * "
        << hamiltonian_name(a.k, a.l, in.vars) << "\n";
  out << "symmetric tuple:\n";
  print_tuple(sym.tuple, in.vars, out);
  return kSuccess;
}

// witness

int verdict_code(const std::string& verdict) {
  if (verdict == kWitnessFound) return kSuccess;
  if (verdict == kInputRejected) return kRejected;
  if (verdict == kResourceExhausted) return kExhausted;
  return kInternal;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content) || !f.flush()) throw UsageError("cannot write '" + path + "'");
}

void print_summary(const CertificateDocument& doc, std::ostream& out) {
  const Vars& xv = doc.input.variables;
  out << "verdict: " << doc.verdict << "\n";
  out << "message: " << doc.message << "\n";
  out << "f = " << fmt(doc.input.f, xv) << "\n";
  if (!doc.input.weights.empty()) {
    std::string ws;
    for (std::size_t k = 0; k < doc.input.weights.size(); ++k)
      ws += (k ? ", " : "") + std::to_string(doc.input.weights[k]);
    out << "weights: " << ws << " (weighted degree " << doc.input.weighted_degree << ")\n";
  }
  if (!doc.change) return;
  const auto& c = *doc.change;
  const Vars& yv = c.variables;
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c.slice.size(); ++k) {
    ExponentVector e(xv.size());
    e.set(k, 1);
    terms.push_back({e, c.slice[k]});
  }
  out << "slice: " << yv[0] << " = " << fmt(Polynomial::from_terms(xv.size(), std::move(terms)), xv) << " (attempt "
      << c.attempts << ")\n";
  out << "g = " << fmt(c.g, yv) << "\n";
  if (doc.adjustments) out << "adjustments: " << doc.adjustments->size() << "\n";
  if (!doc.membership) return;
  const auto& m = *doc.membership;
  std::string gens;
  for (std::size_t k = 0; k < m.ji.ideal.generators.size(); ++k)
    gens += (k ? ", " : "") + fmt(m.ji.ideal.generators[k], yv);
  out << "d'_1(" << yv[0] << ") = " << fmt(m.ji.value, yv) << "\n";
  out << "J_1 = (" << gens << ")\n";
  out << "in J_1: " << (m.ji.member ? "yes" : "no") << " (normal form " << fmt(m.ji.normal_form, yv) << ")\n";
  out << "in (" << yv[0] << ", g_2, ..., g_n)^2: " << (m.square.member ? "yes" : "no") << "\n";
  out << "saito determinant: " << fmt(m.saito.determinant, yv) << " (member: " << (m.saito.member ? "yes" : "no")
      << ")\n";
}

int cmd_witness(const Options& o, std::ostream& out) {
  Input in = read_input(o);
  CertificateDocument doc = build_witness(in.f, in.vars, pipeline(o));
  std::string cert = write_certificate(doc);
  if (!o.out_path.empty()) write_file(o.out_path, cert);
  if (o.json)
    out << cert;
  else
    print_summary(doc, out);
  return verdict_code(doc.verdict);
}

// verify

int cmd_verify(const Options& o, std::ostream& out) {
  CertificateDocument doc = read_certificate(read_path(o.certificate));
  VerificationReport rep = verify_certificate(doc);
  if (o.json) {
    Json j;
    j["verified"] = rep.ok();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["detail"] = c.detail;
      checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    out << (rep.ok() ? "VERIFIED" : "NOT VERIFIED") << "\n";
  }
  return rep.ok() ? kSuccess : kRejected;
}

// examples

struct Example {
  std::string name;
  std::string f;
  Vars vars;
};

const std::vector<Example>& corpus() {
  static const std::vector<Example> examples{
      {"cyclic cubic", "x^2*y + y^2*z + z^2*x", {"x", "y", "z"}},
      {"Fermat cubic", "x^3 + y^3 + z^3", {"x", "y", "z"}},
      {"Fermat quartic", "x^4 + y^4 + z^4", {"x", "y", "z"}},
      {"Fermat cubic, 4 vars", "x^3 + y^3 + z^3 + w^3", {"x", "y", "z", "w"}},
      {"quadric", "x^2 + y^2 + z^2", {"x", "y", "z"}},
      {"Brieskorn (2,3,4)", "x^2 + y^3 + z^4", {"x", "y", "z"}},
      {"Brieskorn (3,3,4)", "x^3 + y^3 + z^4", {"x", "y", "z"}},
  };
  return examples;
}

int cmd_examples(const Options& o, std::ostream& out) {
  PipelineConfig cfg = pipeline(o);
  Json rows = Json::array();
  bool all = true;
  std::ostringstream table;
  table << std::left << std::setw(22) << "name" << std::setw(26) << "f" << std::setw(8) << "milnor" << std::setw(16)
        << "verdict" << std::setw(10) << "attempts" << "verified\n";
  for (const auto& ex : corpus()) {
    Polynomial f = parse_poly(ex.f, ex.vars);
    auto mu = milnor_number(f, o);
    CertificateDocument doc = build_witness(f, ex.vars, cfg);
    bool verified = doc.verdict == kWitnessFound && verify_certificate(doc).ok();
    all = all && verified;
    unsigned attempts = doc.change ? doc.change->attempts : 0;
    Json r;
    r["name"] = ex.name;
    r["f"] = fmt(f, ex.vars);
    r["milnor_number"] = mu ? Json(*mu) : Json(nullptr);
    r["verdict"] = doc.verdict;
    r["attempts"] = attempts;
    r["verified"] = verified;
    rows.push_back(std::move(r));
    table << std::setw(22) << ex.name << std::setw(26) << fmt(f, ex.vars) << std::setw(8)
          << (mu ? std::to_string(*mu) : "inf") << std::setw(16) << doc.verdict << std::setw(10) << attempts
          << (verified ? "yes" : "no") << "\n";
  }
  if (o.json)
    out << rows.dump(2) << "\n";
  else
    out << table.str();
  return all ? kSuccess : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact certificates for second-order derivations on graded hypersurface rings", "nakai-forge"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--vars", o.vars, "Comma-separated variable list (default: inferred)");
  app.add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--seed", o.seed, "Seed for the slice search");
  app.add_option("--bound", o.bound, "Slice coefficients lie in [-B, B]")->check(CLI::Range(1, 1000000));
  app.add_option("--retries", o.retries, "Random slices tried after the identity")->check(CLI::Range(1u, 100000000u));
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--out", o.out_path, "Output file (witness: the certificate)");
  app.add_option("--max-pairs", o.max_pairs, "S-pair cap per Groebner basis")->check(CLI::PositiveNumber);
  app.add_option("--file", o.file, "Read the input from a file ('vars:' header allowed)");
  app.add_flag("--prefilter", o.prefilter, "Discard slices that fail modulo a prime before the exact test");

  auto expr_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("expr", o.expr, "Polynomial expression");
    return c;
  };
  CLI::App* check = expr_cmd("check", "Homogeneity, weights, isolatedness and Milnor number");
  CLI::App* witness = expr_cmd("witness", "Run the full construction and emit a certificate");
  witness->add_option("--slice", o.slice, "Fixed y1 coefficients a1,...,an instead of the search");
  CLI::App* verify = app.add_subcommand("verify", "Replay-check a certificate file ('-' for stdin)");
  verify->add_option("certificate", o.certificate, "Certificate path")->required();
  CLI::App* identity = expr_cmd("identity", "Residuals of the Hessian cofactor identity");
  identity->add_option("-i", o.i, "1-based index (default: all)");
  identity->add_option("-j", o.j, "1-based index (default: all)");
  identity->add_option("-k", o.k, "1-based index (default: all)");
  CLI::App* symm = expr_cmd("symmetrize", "Candidate tuple, adjustment ledger and symmetric tuple");
  CLI::App* member = expr_cmd("member", "Ideal membership by normal form");
  member->add_option("--ideal", o.ideal, "Comma-separated generators")->required();
  CLI::App* milnor = expr_cmd("milnor", "Quotient dimension of the Jacobian ideal");
  CLI::App* examples = app.add_subcommand("examples", "Run the built-in corpus");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool redirect = !o.out_path.empty() && !witness->parsed();
  std::ostringstream buffer;
  std::ostream& primary = redirect ? static_cast<std::ostream&>(buffer) : out;

  int code = kInternal;
  try {
    if (check->parsed()) code = cmd_check(o, primary);
    else if (witness->parsed()) code = cmd_witness(o, primary);
    else if (verify->parsed()) code = cmd_verify(o, primary);
    else if (identity->parsed()) code = cmd_identity(o, primary, err);
    else if (symm->parsed()) code = cmd_symmetrize(o, primary, err);
    else if (member->parsed()) code = cmd_member(o, primary);
    else if (milnor->parsed()) code = cmd_milnor(o, primary, err);
    else if (examples->parsed()) code = cmd_examples(o, primary);
    if (redirect) write_file(o.out_path, buffer.str());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    err << "certificate error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceExhausted& e) {
    err << "resource exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << "\n";
    return kInternal;
  }
  log_line(LogLevel::debug, "exit code " + std::to_string(code));
  return code;
}

}  // namespace nakai::cli
