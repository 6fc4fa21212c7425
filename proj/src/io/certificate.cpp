#include "nakai/certificate.hpp"

#include <json.hpp>

#include "nakai/errors.hpp"
#include "nakai/expr.hpp"

namespace nakai {

namespace {

using Json = nlohmann::ordered_json;
using Vars = std::vector<std::string>;

std::string text(const Polynomial& p, const Vars& vars) { return format_poly(p, vars); }

Json poly_list(const std::vector<Polynomial>& ps, const Vars& vars) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(text(p, vars));
  return out;
}

Json poly_matrix(const std::vector<std::vector<Polynomial>>& rows, const Vars& vars) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(poly_list(row, vars));
  return out;
}

Json gb_json(const GroebnerRecord& r, const Vars& vars) {
  Json out;
  out["generators"] = poly_list(r.generators, vars);
  out["basis"] = poly_list(r.basis, vars);
  out["cofactors"] = r.cofactors ? poly_matrix(*r.cofactors, vars) : Json(nullptr);
  return out;
}

Json membership_json(const MembershipRecord& r, const Vars& vars) {
  Json out;
  out["value"] = text(r.value, vars);
  out["normal_form"] = text(r.normal_form, vars);
  out["member"] = r.member;
  out["ideal"] = gb_json(r.ideal, vars);
  return out;
}

// Reading.

Polynomial read_poly(const Json& j, const Vars& vars) {
  if (!j.is_string()) throw SchemaError("expected a polynomial string");
  try {
    return parse_poly(j.get<std::string>(), vars);
  } catch (const ParseError& e) {
    throw SchemaError(std::string("bad polynomial in certificate: ") + e.what());
  }
}

std::vector<Polynomial> read_poly_list(const Json& j, const Vars& vars) {
  if (!j.is_array()) throw SchemaError("expected a list of polynomials");
  std::vector<Polynomial> out;
  for (const auto& e : j) out.push_back(read_poly(e, vars));
  return out;
}

std::vector<std::vector<Polynomial>> read_poly_matrix(const Json& j, const Vars& vars) {
  if (!j.is_array()) throw SchemaError("expected a list of polynomial lists");
  std::vector<std::vector<Polynomial>> out;
  for (const auto& row : j) out.push_back(read_poly_list(row, vars));
  return out;
}

GroebnerRecord read_gb(const Json& j, const Vars& vars) {
  GroebnerRecord r;
  r.generators = read_poly_list(j.at("generators"), vars);
  r.basis = read_poly_list(j.at("basis"), vars);
  if (!j.at("cofactors").is_null()) r.cofactors = read_poly_matrix(j.at("cofactors"), vars);
  return r;
}

MembershipRecord read_membership(const Json& j, const Vars& vars) {
  MembershipRecord r;
  r.value = read_poly(j.at("value"), vars);
  r.normal_form = read_poly(j.at("normal_form"), vars);
  r.member = j.at("member").get<bool>();
  r.ideal = read_gb(j.at("ideal"), vars);
  return r;
}

Rational read_rational(const Json& j) {
  if (!j.is_string()) throw SchemaError("expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("bad rational in certificate: ") + e.what());
  }
}

std::size_t read_index(const Json& j, std::size_t n) {
  auto v = j.get<long long>();
  if (v < 1 || std::size_t(v) > n) throw SchemaError("index out of range");
  return std::size_t(v - 1);
}

Vars read_vars(const Json& j) {
  Vars out = j.get<Vars>();
  if (out.empty()) throw SchemaError("empty variable list");
  if (out.size() > kMaxVars) throw SchemaError("too many variables");
  return out;
}

}  // namespace

std::string write_certificate(const CertificateDocument& doc) {
  Json j;
  j["schema"] = doc.schema;

  const Vars& in_vars = doc.input.variables;
  Json input;
  input["variables"] = in_vars;
  input["f"] = text(doc.input.f, in_vars);
  input["weights"] = doc.input.weights.empty() ? Json(nullptr) : Json(doc.input.weights);
  input["weighted_degree"] = doc.input.weights.empty() ? Json(nullptr) : Json(doc.input.weighted_degree);
  input["order"] = doc.input.order;
  j["input"] = std::move(input);

  const Vars vars = doc.change ? doc.change->variables : Vars{};
  if (doc.change) {
    Json c;
    c["variables"] = vars;
    Json slice = Json::array();
    for (const auto& a : doc.change->slice) slice.push_back(to_string(a));
    c["slice"] = std::move(slice);
    c["attempts"] = doc.change->attempts;
    c["g"] = text(doc.change->g, vars);
    c["restricted_jacobian"] = gb_json(doc.change->restricted_jacobian, vars);
    j["change_of_coordinates"] = std::move(c);
  } else {
    j["change_of_coordinates"] = nullptr;
  }

  if (doc.candidate) {
    Json c;
    c["tuple"] = poly_matrix(doc.candidate->tuple, vars);
    Json diffs = Json::array();
    for (const auto& d : doc.candidate->differences) {
      Json e;
      e["i"] = d.i + 1;
      e["j"] = d.j + 1;
      e["difference"] = text(d.difference, vars);
      e["coefficients"] = poly_list(d.coefficients, vars);
      diffs.push_back(std::move(e));
    }
    c["differences"] = std::move(diffs);
    j["candidate_tuple"] = std::move(c);
  } else {
    j["candidate_tuple"] = nullptr;
  }

  if (doc.adjustments) {
    Json adj = Json::array();
    for (const auto& a : *doc.adjustments) {
      Json e;
      e["target"] = a.target + 1;
      e["k"] = a.k + 1;
      e["l"] = a.l + 1;
      e["coefficient"] = text(a.coeff, vars);
      adj.push_back(std::move(e));
    }
    j["adjustments"] = std::move(adj);
  } else {
    j["adjustments"] = nullptr;
  }

  j["symmetric_tuple"] = doc.symmetric_tuple ? poly_matrix(*doc.symmetric_tuple, vars) : Json(nullptr);

  if (doc.lifted_operator) {
    Json op = Json::array();
    for (const auto& t : *doc.lifted_operator) {
      Json e;
      std::vector<unsigned> alpha(t.alpha.exponents().begin(), t.alpha.exponents().end());
      e["alpha"] = alpha;
      e["coefficient"] = text(t.coeff, vars);
      op.push_back(std::move(e));
    }
    j["lifted_operator"] = std::move(op);
  } else {
    j["lifted_operator"] = nullptr;
  }

  if (doc.membership) {
    const auto& m = *doc.membership;
    Json t;
    t["jacobian"] = gb_json(m.jacobian, vars);
    t["J1"] = membership_json(m.ji, vars);
    t["square"] = membership_json(m.square, vars);
    Json s;
    s["determinant"] = text(m.saito.determinant, vars);
    s["normal_form"] = text(m.saito.normal_form, vars);
    s["member"] = m.saito.member;
    t["saito"] = std::move(s);
    j["membership_tests"] = std::move(t);
  } else {
    j["membership_tests"] = nullptr;
  }

  Json verdict;
  verdict["status"] = doc.verdict;
  verdict["message"] = doc.message;
  j["verdict"] = std::move(verdict);
  return j.dump(2) + "\n";
}

CertificateDocument read_certificate(std::string_view text_in) {
  Json j;
  try {
    j = Json::parse(text_in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    CertificateDocument doc;
    if (!j.is_object()) throw SchemaError("certificate must be a JSON object");
    doc.schema = j.at("schema").get<std::string>();
    if (doc.schema != kCertificateSchema)
      throw SchemaError("unsupported certificate schema '" + doc.schema + "' (expected '" +
                        std::string(kCertificateSchema) + "')");

    const Json& input = j.at("input");
    doc.input.variables = read_vars(input.at("variables"));
    doc.input.f = read_poly(input.at("f"), doc.input.variables);
    if (!input.at("weights").is_null()) {
      doc.input.weights = input.at("weights").get<std::vector<unsigned>>();
      doc.input.weighted_degree = input.at("weighted_degree").get<unsigned>();
    }
    doc.input.order = input.at("order").get<std::string>();

    Vars vars;
    const Json& change = j.at("change_of_coordinates");
    if (!change.is_null()) {
      CoordinateRecord c;
      c.variables = read_vars(change.at("variables"));
      vars = c.variables;
      for (const auto& a : change.at("slice")) c.slice.push_back(read_rational(a));
      c.attempts = change.at("attempts").get<unsigned>();
      c.g = read_poly(change.at("g"), vars);
      c.restricted_jacobian = read_gb(change.at("restricted_jacobian"), vars);
      doc.change = std::move(c);
    }
    const std::size_t n = vars.size();
    auto need_change = [&](const char* key) {
      if (!j.at(key).is_null() && !doc.change)
        throw SchemaError(std::string("'") + key + "' requires change_of_coordinates");
      return !j.at(key).is_null();
    };

    if (need_change("candidate_tuple")) {
      const Json& c = j.at("candidate_tuple");
      CandidateRecord r;
      r.tuple = read_poly_matrix(c.at("tuple"), vars);
      for (const auto& e : c.at("differences")) {
        DifferenceRecord d;
        d.i = read_index(e.at("i"), n);
        d.j = read_index(e.at("j"), n);
        d.difference = read_poly(e.at("difference"), vars);
        d.coefficients = read_poly_list(e.at("coefficients"), vars);
        r.differences.push_back(std::move(d));
      }
      doc.candidate = std::move(r);
    }
    if (need_change("adjustments")) {
      std::vector<AdjustmentRecord> adj;
      for (const auto& e : j.at("adjustments")) {
        AdjustmentRecord a;
        a.target = read_index(e.at("target"), n);
        a.k = read_index(e.at("k"), n);
        a.l = read_index(e.at("l"), n);
        a.coeff = read_poly(e.at("coefficient"), vars);
        adj.push_back(std::move(a));
      }
      doc.adjustments = std::move(adj);
    }
    if (need_change("symmetric_tuple")) doc.symmetric_tuple = read_poly_matrix(j.at("symmetric_tuple"), vars);
    if (need_change("lifted_operator")) {
      std::vector<OperatorTerm> op;
      for (const auto& e : j.at("lifted_operator")) {
        auto alpha = e.at("alpha").get<std::vector<unsigned>>();
        if (alpha.size() != n) throw SchemaError("multi-index has the wrong length");
        op.push_back({ExponentVector(std::span<const unsigned>(alpha)), read_poly(e.at("coefficient"), vars)});
      }
      doc.lifted_operator = std::move(op);
    }
    if (need_change("membership_tests")) {
      const Json& t = j.at("membership_tests");
      MembershipTests m;
      m.jacobian = read_gb(t.at("jacobian"), vars);
      m.ji = read_membership(t.at("J1"), vars);
      m.square = read_membership(t.at("square"), vars);
      const Json& s = t.at("saito");
      m.saito.determinant = read_poly(s.at("determinant"), vars);
      m.saito.normal_form = read_poly(s.at("normal_form"), vars);
      m.saito.member = s.at("member").get<bool>();
      doc.membership = std::move(m);
    }

    const Json& verdict = j.at("verdict");
    doc.verdict = verdict.at("status").get<std::string>();
    doc.message = verdict.at("message").get<std::string>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed certificate: ") + e.what());
  } catch (const DomainError& e) {
    throw SchemaError(std::string("malformed certificate: ") + e.what());
  } catch (const ArityError& e) {
    throw SchemaError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace nakai
