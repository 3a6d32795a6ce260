#include "dfinv/io.hpp"

#include "dfinv/error.hpp"

namespace dfinv::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw SchemaError(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

RationalMatrix matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) throw SchemaError("basis must be an array of rows");
  RationalMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    RationalVector row = vector_from_json(j[i], cols);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

Json basis_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row_vector(i)));
  return rows;
}

Json components_json(const VarietyDescription& d) {
  Json cs = Json::array();
  for (const auto& c : d.components()) cs.push_back(to_json(c));
  return cs;
}

VarietyDescription components_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw SchemaError("components must be an array");
  VarietyDescription d(n);
  for (const auto& c : j) d.add(component_from_json(c, n));
  return d;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw SchemaError("rationals must be strings \"p/q\" or integers");
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

RationalVector vector_from_json(const Json& j, std::size_t expected_size) {
  if (!j.is_array()) throw SchemaError("expected an array of rationals");
  if (j.size() != expected_size)
    throw SchemaError("expected " + std::to_string(expected_size) + " entries, got " +
                      std::to_string(j.size()));
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const RationalSubspace& s) {
  Json j;
  j["n"] = s.ambient_dim();
  j["basis"] = basis_json(s.basis());
  return j;
}

RationalSubspace subspace_from_json(const Json& j) {
  std::size_t n = size_field(j, "n");
  return canonicalize(matrix_from_json(field(j, "basis"), n));
}

Json to_json(const TranslatedTorus& c) {
  Json j;
  j["lambda"] = to_json(c.rho().lambda());
  j["basis"] = basis_json(c.subspace().basis());
  return j;
}

TranslatedTorus component_from_json(const Json& j, std::size_t n) {
  RationalVector lambda = vector_from_json(field(j, "lambda"), n);
  RationalSubspace l = canonicalize(matrix_from_json(field(j, "basis"), n));
  return TranslatedTorus(TorsionCharacter(std::move(lambda)), std::move(l));
}

Json to_json(const VarietyDescription& d, std::optional<std::size_t> degree) {
  Json j;
  j["n"] = d.ambient_dim();
  if (degree) j["degree"] = *degree;
  j["components"] = components_json(d);
  return j;
}

VarietyDescription description_from_json(const Json& j) {
  std::size_t n = size_field(j, "n");
  return components_from_json(field(j, "components"), n);
}

Json to_json(const GradedDescription& g) {
  Json j;
  j["n"] = g.ambient_dim();
  Json levels = Json::array();
  for (const auto& [deg, d] : g.degrees()) {
    Json l;
    l["degree"] = deg;
    l["components"] = components_json(d);
    levels.push_back(std::move(l));
  }
  j["graded"] = std::move(levels);
  return j;
}

GradedDescription graded_from_json(const Json& j) {
  std::size_t n = size_field(j, "n");
  const Json& levels = field(j, "graded");
  if (!levels.is_array()) throw SchemaError("'graded' must be an array");
  GradedDescription g(n);
  for (const auto& l : levels) g.set(size_field(l, "degree"), components_from_json(field(l, "components"), n));
  return g;
}

Json to_json(const SubspaceArrangement& a) {
  Json j;
  j["n"] = a.ambient_dim();
  Json subs = Json::array();
  for (const auto& s : a.subspaces()) subs.push_back(basis_json(s.basis()));
  j["subspaces"] = std::move(subs);
  return j;
}

SubspaceArrangement arrangement_from_json(const Json& j) {
  std::size_t n = size_field(j, "n");
  const Json& subs = field(j, "subspaces");
  if (!subs.is_array()) throw SchemaError("'subspaces' must be an array");
  SubspaceArrangement a(n);
  for (const auto& s : subs) a.add(canonicalize(matrix_from_json(s, n)));
  return a;
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [a, c] : f.terms()) {
    Json t;
    t["exponents"] = a;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

LaurentPoly laurent_from_json(const Json& j, std::size_t n) {
  if (j.is_string()) {
    try {
      return parse_laurent(j.get<std::string>(), n);
    } catch (const ParseError& e) {
      throw SchemaError(e.what());
    }
  }
  if (!j.is_array()) throw SchemaError("a polynomial is a string or an array of terms");
  LaurentPoly f(n);
  for (const auto& t : j) {
    const Json& e = field(t, "exponents");
    if (!e.is_array() || e.size() != n) throw SchemaError("exponent vector has wrong length");
    Exponent a;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw SchemaError("exponents must be integers");
      a.push_back(x.get<long>());
    }
    f.add_term(std::move(a), rational_from_json(field(t, "coeff")));
  }
  return f;
}

Json to_json(const AdmissiblePartition& p, const LaurentPoly& f) {
  const auto s = support(f);
  Json parts = Json::array();
  for (const auto& part : p.parts) {
    Json ps = Json::array();
    for (auto i : part) ps.push_back(s.at(i));
    parts.push_back(std::move(ps));
  }
  Json j;
  j["parts"] = std::move(parts);
  j["subspace"] = to_json(partition_subspace(p, f));
  return j;
}

Json to_json(const AlexanderMatrix& a) {
  Json j;
  j["n"] = a.num_vars();
  j["rows"] = a.entries.rows();
  j["cols"] = a.entries.cols();
  Json tors = Json::array();
  for (const auto& t : a.alpha.torsion) tors.push_back(t.get_str());
  j["torsion"] = std::move(tors);
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.entries.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.entries.cols(); ++k) row.push_back(to_string(a.entries(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json to_json(const OmegaVerdict& v) {
  Json j;
  j["member"] = v.member;
  Json bs = Json::array();
  for (const auto& b : v.blockers) {
    Json x;
    x["component"] = to_json(b.component);
    x["reason"] = to_string(b.reason);
    bs.push_back(std::move(x));
  }
  j["blockers"] = std::move(bs);
  return j;
}

OmegaVerdict verdict_from_json(const Json& j, std::size_t n) {
  OmegaVerdict v;
  const Json& m = field(j, "member");
  if (!m.is_boolean()) throw SchemaError("'member' must be a boolean");
  v.member = m.get<bool>();
  for (const auto& b : field(j, "blockers")) {
    std::string reason = field(b, "reason").get<std::string>();
    if (reason != "sigma_rho" && reason != "dim_ge_1") throw SchemaError("unknown blocking reason");
    v.blockers.push_back({component_from_json(field(b, "component"), n),
                          reason == "sigma_rho" ? BlockReason::sigma_rho : BlockReason::dim_ge_1});
  }
  if (v.member != v.blockers.empty()) throw SchemaError("verdict and blockers disagree");
  return v;
}

Json to_json(const NonOpenWitness& w) {
  Json j;
  j["P"] = to_json(w.p);
  j["P_verdict"] = to_json(w.p_verdict);
  Json fam = Json::array();
  for (const auto& s : w.family) {
    Json x;
    x["q"] = s.q;
    x["plane"] = to_json(s.plane);
    x["plucker_distance"] = s.plucker_distance ? to_json(*s.plucker_distance) : Json(nullptr);
    x["verdict"] = to_json(s.verdict);
    fam.push_back(std::move(x));
  }
  j["family"] = std::move(fam);
  return j;
}

Json to_json(const FpkReport& r) {
  Json j;
  j["k"] = r.k;
  j["r"] = r.r;
  j["certified_empty"] = r.certified_empty;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  j["message"] = r.message;
  return j;
}

Json to_json(const PluckerForm& f) {
  Json j;
  j["r"] = f.r;
  j["n"] = f.n;
  Json terms = Json::array();
  auto ks = subsets(f.n, f.r);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (is_zero(f.coeffs[i])) continue;
    Json t;
    Json idx = Json::array();
    for (auto k : ks[i]) idx.push_back(k + 1);
    t["subset"] = std::move(idx);
    t["coeff"] = to_json(f.coeffs[i]);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace dfinv::io
