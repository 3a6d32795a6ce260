#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dfinv/error.hpp"
#include "dfinv/fox.hpp"
#include "dfinv/io.hpp"
#include "dfinv/omega.hpp"
#include "dfinv/tcone.hpp"
#include "dfinv/tori.hpp"

namespace dfinv::cli {

namespace {

using io::Json;

struct Options {
  std::string format = "json";
  std::string pres;
  std::vector<std::string> polys;
  std::string desc;
  std::string plane;
  std::string subspace;
  std::string bouquets;
  std::string q_list = "1,2,3,4,5,6,7,8,9,10";
  std::optional<std::size_t> r;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> num_vars;
  std::size_t component = 0;
  std::size_t max_support = kDefaultMaxSupport;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

// Missing or conflicting command-line inputs; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  return slurp(in);
}

// "@path" reads a file, anything else is literal text.
std::string read_text(const std::string& arg) {
  return !arg.empty() && arg.front() == '@' ? read_file(arg.substr(1)) : arg;
}

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
Json read_json(const std::string& arg) {
  std::string text = !arg.empty() && (arg.front() == '{' || arg.front() == '[') ? arg : read_file(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

VarietyDescription load_description(const Options& o) {
  Json j = read_json(o.desc);
  if (j.contains("graded")) {
    if (!o.degree) throw UsageError("a graded description needs --degree");
    return io::graded_from_json(j).at(*o.degree);
  }
  if (o.degree && j.contains("degree") && j["degree"] != *o.degree)
    throw SchemaError("description is for degree " + j["degree"].dump() + ", not " +
                      std::to_string(*o.degree));
  return io::description_from_json(j);
}

GradedDescription bouquet_product(const std::string& text, std::size_t k) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long b = std::stol(item, &pos);
      if (pos != item.size() || b < 1) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(b));
    } catch (const std::exception&) {
      throw SchemaError("--bouquets expects positive integers, got '" + item + "'");
    }
  }
  if (sizes.empty()) throw SchemaError("--bouquets is empty");
  std::optional<GradedDescription> acc;
  for (std::size_t b : sizes) {
    GradedDescription g(b);
    g.set(0, VarietyDescription::identity_point(b));
    for (std::size_t i = 1; i <= k; ++i)
      g.set(i, b == 1 ? VarietyDescription::identity_point(1) : VarietyDescription::full(b));
    acc = acc ? product_description(*acc, g, k) : g;
  }
  return *acc;
}

std::vector<long> parse_q_list(const std::string& text) {
  std::vector<long> qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long q = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      qs.push_back(q);
    } catch (const std::exception&) {
      throw SchemaError("--q expects a comma-separated list of integers");
    }
  }
  return qs;
}

std::vector<LaurentPoly> load_polys(const Options& o) {
  std::size_t n = o.num_vars.value_or(0);
  std::vector<std::string> texts;
  for (const auto& p : o.polys) texts.push_back(read_text(p));
  if (n == 0)
    for (const auto& t : texts) n = std::max(n, parse_laurent(t).num_vars());
  std::vector<LaurentPoly> out;
  for (const auto& t : texts) out.push_back(parse_laurent(t, n));
  return out;
}

std::size_t require_r(const Options& o) {
  if (!o.r) throw UsageError("this subcommand needs --r");
  return *o.r;
}

// ---------------------------------------------------------------------------
// Plain-text rendering

std::string text(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::string text(const RationalSubspace& l) {
  if (l.is_zero()) return "{0}";
  std::string s = "span{";
  for (std::size_t i = 0; i < l.dim(); ++i) s += (i ? ", " : "") + text(l.basis().row_vector(i));
  return s + "}";
}

std::string text(const TranslatedTorus& c) {
  return "lambda=" + text(c.rho().lambda()) + " L=" + text(c.subspace());
}

std::string text(const OmegaVerdict& v) {
  std::string s = v.member ? "member\n" : "blocked\n";
  for (const auto& b : v.blockers) s += "  by " + text(b.component) + " [" + to_string(b.reason) + "]\n";
  return s;
}

std::string text(const PluckerForm& f) {
  std::string s;
  auto ks = subsets(f.n, f.r);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (is_zero(f.coeffs[i])) continue;
    Rational c = f.coeffs[i];
    s += s.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    Rational a = abs(c);
    if (a != 1) s += to_string(a) + "*";
    s += "p";
    for (auto k : ks[i]) s += std::to_string(k + 1);
  }
  return s + " = 0";
}

// ---------------------------------------------------------------------------
// Subcommands.  Each returns the JSON document and its text rendering.

struct Output {
  Json json;
  std::string text;
};

Output cmd_alexander(const Options& o) {
  Presentation p = parse_presentation(read_text(o.pres));
  AlexanderMatrix a = alexander_matrix(p);
  Output out;
  out.json["presentation"] = to_string(p);
  Json proj = Json::array();
  for (std::size_t j = 0; j < a.alpha.projection.rows(); ++j) proj.push_back(a.alpha.image(j));
  out.json["abelianization"] = {{"free_rank", a.alpha.free_rank}, {"projection", proj}};
  out.json["matrix"] = io::to_json(a);
  std::ostringstream t;
  t << "presentation: " << to_string(p) << "\nb1 = " << a.alpha.free_rank;
  if (!a.alpha.torsion.empty()) {
    t << ", torsion";
    for (const auto& x : a.alpha.torsion) t << " Z/" << x.get_str();
  }
  t << "\nAlexander matrix (" << a.entries.rows() << " x " << a.entries.cols() << "):\n";
  for (std::size_t i = 0; i < a.entries.rows(); ++i) {
    t << "  [";
    for (std::size_t j = 0; j < a.entries.cols(); ++j) t << (j ? ", " : "") << to_string(a.entries(i, j));
    t << "]\n";
  }
  out.text = t.str();
  return out;
}

Output cmd_tcone(const Options& o) {
  Output out;
  SubspaceArrangement arr;
  if (!o.polys.empty()) {
    auto polys = load_polys(o);
    Json per = Json::array();
    for (const auto& f : polys) {
      Json parts = Json::array();
      for (const auto& p : admissible_partitions_maximal(f, o.max_support)) parts.push_back(io::to_json(p, f));
      per.push_back({{"poly", to_string(f)}, {"maximal_partitions", parts}});
    }
    arr = tangent_cone_polys(polys, o.max_support);
    out.json["arrangement"] = io::to_json(arr);
    out.json["polynomials"] = per;
  } else if (!o.desc.empty()) {
    arr = tangent_cone_description(load_description(o));
    out.json["arrangement"] = io::to_json(arr);
  } else {
    throw UsageError("tcone needs --poly or --desc");
  }
  std::string t = "tau_1 in Q^" + std::to_string(arr.ambient_dim()) + ":";
  if (arr.empty()) t += " empty (1 is not in the variety)\n";
  else {
    t += "\n";
    for (const auto& l : arr.subspaces()) t += "  " + text(l) + "\n";
  }
  out.text = t;
  return out;
}

Output cmd_charvar_check(const Options& o) {
  if (o.pres.empty() || o.desc.empty()) throw UsageError("charvar-check needs --pres and --desc");
  AlexanderMatrix a = alexander_matrix(parse_presentation(read_text(o.pres)));
  VarietyDescription w = load_description(o);
  if (w.ambient_dim() != a.num_vars())
    throw DimensionMismatch("description has n = " + std::to_string(w.ambient_dim()) +
                            " but b1 = " + std::to_string(a.num_vars()));
  Output out;
  Json comps = Json::array();
  bool all = true;
  std::string t;
  for (const auto& c : w.components()) {
    bool generic = contains_translated_torus(a, c);
    bool at_rho = depth1_membership(a, c.rho());
    all = all && generic && at_rho;
    comps.push_back({{"component", io::to_json(c)}, {"generic_containment", generic},
                     {"translation_point_in_W1", at_rho}});
    t += text(c) + ": " + (generic && at_rho ? "contained" : "NOT contained") + "\n";
  }
  out.json["n"] = w.ambient_dim();
  out.json["components"] = comps;
  out.json["all_contained"] = all;
  out.text = t + (all ? "all components lie in W^1\n" : "some component is not in W^1\n");
  return out;
}

Output cmd_omega_test(const Options& o) {
  if (o.desc.empty() || o.plane.empty()) throw UsageError("omega-test needs --desc and --plane");
  VarietyDescription w = load_description(o);
  RationalSubspace p = io::subspace_from_json(read_json(o.plane));
  if (o.r && *o.r != p.dim())
    throw PreconditionError("plane has dimension " + std::to_string(p.dim()) + ", not r = " +
                            std::to_string(*o.r));
  OmegaVerdict v = omega_membership(w, p);
  return {io::to_json(v), text(p) + ": " + text(v)};
}

Output cmd_omega_describe(const Options& o) {
  std::size_t r = require_r(o);
  std::optional<VarietyDescription> w;
  SubspaceArrangement cone;
  if (!o.desc.empty()) {
    w = load_description(o);
    cone = tangent_cone_description(*w);
  } else if (!o.polys.empty()) {
    cone = tangent_cone_polys(load_polys(o), o.max_support);
  } else {
    throw UsageError("omega-describe needs --desc or --poly");
  }
  const std::size_t n = cone.ambient_dim();
  if (r < 1 || r > n) throw PreconditionError("need 1 <= r <= n");
  Output out;
  std::string t;
  out.json["r"] = r;
  out.json["tangent_cone"] = io::to_json(cone);
  if (r == 1) {
    Json ex = Json::array();
    t += "Omega_1 = QP^" + std::to_string(n - 1) + " minus the projectivizations of:\n";
    for (const auto& l : omega1_r1_description(cone)) {
      ex.push_back(io::to_json(l));
      t += "  " + text(l) + "\n";
    }
    out.json["excluded"] = ex;
  }
  Json closed = nullptr;
  if (w) {
    try {
      Codim1ClosedForm cf = omega_codim1_closed_form(*w, r);
      const char* shape = cf.shape == Codim1ClosedForm::Shape::all            ? "all"
                          : cf.shape == Codim1ClosedForm::Shape::grassmannian ? "grassmannian"
                                                                              : "empty";
      closed = {{"shape", shape}, {"subspace", io::to_json(cf.l)}};
      t += std::string("closed form: ") + shape +
           (cf.shape == Codim1ClosedForm::Shape::grassmannian ? " of " + text(cf.l) : "") + "\n";
    } catch (const PreconditionError&) {
      closed = nullptr;
    }
  }
  out.json["closed_form"] = closed;
  Json bound = Json::array();
  t += "Schubert upper bound (planes must avoid):\n";
  for (const auto& l : cone.subspaces()) {
    Json eqs = Json::array();
    t += "  sigma_" + std::to_string(r) + "(" + text(l) + "):";
    auto forms = schubert_equations(l, r);
    for (const auto& f : forms) eqs.push_back(io::to_json(f));
    if (l.is_zero()) t += " no plane meets {0}";
    else if (forms.empty()) t += " every plane";
    else
      for (const auto& f : forms) t += " " + text(f) + ";";
    t += "\n";
    bound.push_back({{"subspace", io::to_json(l)}, {"equations", eqs}});
  }
  out.json["schubert_bound"] = bound;
  out.text = t;
  return out;
}

Output cmd_schubert_eqs(const Options& o) {
  std::size_t r = require_r(o);
  std::vector<RationalSubspace> ls;
  if (!o.subspace.empty()) ls.push_back(io::subspace_from_json(read_json(o.subspace)));
  else if (!o.desc.empty()) ls = tangent_cone_description(load_description(o)).subspaces();
  else throw UsageError("schubert-eqs needs --subspace or --desc");
  Output out;
  Json all = Json::array();
  for (const auto& l : ls) {
    Json eqs = Json::array();
    out.text += "sigma_" + std::to_string(r) + "(" + text(l) + "):\n";
    auto forms = schubert_equations(l, r);
    for (const auto& f : forms) eqs.push_back(io::to_json(f));
    if (l.is_zero()) out.text += "  (no plane meets {0})\n";
    else if (forms.empty()) out.text += "  (every " + std::to_string(r) + "-plane)\n";
    else
      for (const auto& f : forms) out.text += "  " + text(f) + "\n";
    all.push_back({{"subspace", io::to_json(l)}, {"r", r}, {"equations", eqs}});
  }
  out.json["schubert"] = all;
  return out;
}

Output cmd_witness(const Options& o) {
  if (o.desc.empty()) throw UsageError("witness needs --desc");
  VarietyDescription w = load_description(o);
  NonOpenWitness wit = nonopen_witness(w, o.component, require_r(o), parse_q_list(o.q_list));
  std::string t = "P = " + text(wit.p) + ": " + text(wit.p_verdict);
  for (const auto& s : wit.family)
    t += "q = " + std::to_string(s.q) + ": " + text(s.plane) + ", distance " +
         (s.plucker_distance ? to_string(*s.plucker_distance) : "undefined") + ", " +
         (s.verdict.member ? "member" : "blocked") + "\n";
  return {io::to_json(wit), t};
}

Output cmd_fpk(const Options& o) {
  if (!o.degree) throw UsageError("fpk needs --degree");
  std::size_t r = require_r(o);
  GradedDescription g;
  if (!o.bouquets.empty()) g = bouquet_product(o.bouquets, *o.degree);
  else if (!o.desc.empty()) g = io::graded_from_json(read_json(o.desc));
  else throw UsageError("fpk needs --desc or --bouquets");
  FpkReport rep = fpk_report(g, *o.degree, r);
  Json j = io::to_json(rep);
  j["description"] = io::to_json(g.at(*o.degree), *o.degree);
  std::string t = rep.message + "\n";
  if (rep.certificate) t += "certificate: " + text(*rep.certificate) + "\n";
  return {j, t};
}

void error_object(std::ostream& out, const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  out << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dwyer-Fried invariants from characteristic varieties", "dfinv"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_r = [&](CLI::App* s) { s->add_option("--r", o.r, "Plane dimension r"); };
  auto add_degree = [&](CLI::App* s) { s->add_option("--degree", o.degree, "Homological degree i"); };
  auto add_desc = [&](CLI::App* s) {
    s->add_option("--desc", o.desc, "Variety description (JSON file, '-' or inline JSON)");
  };
  auto add_polys = [&](CLI::App* s) {
    s->add_option("--poly", o.polys, "Laurent polynomial in t1..tn (repeatable, '@file' reads a file)");
    s->add_option("--n", o.num_vars, "Number of variables (default: largest index used)");
    s->add_option("--max-support", o.max_support, "Largest support searched for partitions");
  };

  auto* alex = app.add_subcommand("alexander", "Alexander matrix of a presentation via Fox calculus");
  alex->add_option("--pres", o.pres, "Presentation <g1,...|r1,...> or @file")->required();
  add_format(alex);

  auto* tcone = app.add_subcommand("tcone", "Exponential tangent cone of polynomials or a description");
  add_polys(tcone);
  add_desc(tcone);
  add_degree(tcone);
  add_format(tcone);

  auto* check = app.add_subcommand("charvar-check", "Verify asserted W^1 components against a presentation");
  check->add_option("--pres", o.pres, "Presentation or @file")->required();
  add_desc(check);
  add_degree(check);
  add_format(check);

  auto* test = app.add_subcommand("omega-test", "Decide whether a plane lies in Omega");
  add_desc(test);
  test->add_option("--plane", o.plane, "Plane {n, basis} (JSON file or inline)");
  add_r(test);
  add_degree(test);
  add_format(test);

  auto* describe = app.add_subcommand("omega-describe", "Describe Omega_r: line complement, closed form, Schubert bound");
  add_desc(describe);
  add_polys(describe);
  add_r(describe);
  add_degree(describe);
  add_format(describe);

  auto* sch = app.add_subcommand("schubert-eqs", "Plücker equations of the special Schubert variety sigma_r(L)");
  sch->add_option("--subspace", o.subspace, "Subspace {n, basis} (JSON file or inline)");
  add_desc(sch);
  add_r(sch);
  add_degree(sch);
  add_format(sch);

  auto* wit = app.add_subcommand("witness", "Sequence of blocked planes converging to a member plane");
  add_desc(wit);
  wit->add_option("--component", o.component, "Index of the translated component");
  wit->add_option("--q", o.q_list, "Comma-separated list of q values");
  add_r(wit);
  add_degree(wit);
  add_format(wit);

  auto* fpk = app.add_subcommand("fpk", "Finiteness obstruction for kernels of maps to Z^r");
  fpk->add_option("--desc", o.desc, "Graded description (JSON file or inline)");
  fpk->add_option("--bouquets", o.bouquets, "Product of bouquets of circles, e.g. 2,2,2");
  add_r(fpk);
  add_degree(fpk);
  add_format(fpk);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      if (auto subs = app.get_subcommands(); !subs.empty()) out << subs.front()->help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Output result;
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "alexander") result = cmd_alexander(o);
    else if (name == "tcone") result = cmd_tcone(o);
    else if (name == "charvar-check") result = cmd_charvar_check(o);
    else if (name == "omega-test") result = cmd_omega_test(o);
    else if (name == "omega-describe") result = cmd_omega_describe(o);
    else if (name == "schubert-eqs") result = cmd_schubert_eqs(o);
    else if (name == "witness") result = cmd_witness(o);
    else result = cmd_fpk(o);
    if (o.format == "text") out << result.text;
    else out << result.json.dump(2) << "\n";
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    error_object(out, e.kind(), e.what());
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    error_object(out, "internal", e.what());
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dfinv::cli
