// Runs the end-to-end acceptance checks and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dfinv/fox.hpp"
#include "dfinv/io.hpp"
#include "dfinv/omega.hpp"
#include "dfinv/tcone.hpp"
#include "dfinv/tori.hpp"
#include "generators.hpp"
#include "properties.hpp"

namespace {

using namespace dfinv;
using dfinv::io::Json;

const std::string kData = DFINV_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

Json run_cli(Check& c, std::vector<std::string> args) {
  args.insert(args.begin(), "dfinv");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  c.expect(code == 0, "exit code " + std::to_string(code) + " from " + args[1] + ": " + err.str());
  return code == 0 ? Json::parse(out.str()) : Json();
}

RationalSubspace span_of(std::size_t n, const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return rows.empty() ? RationalSubspace(n) : canonicalize(m);
}

RationalVector vec(const std::vector<Rational>& v) { return v; }

GradedDescription circle(std::size_t k) {
  GradedDescription g(1);
  for (std::size_t i = 0; i <= k; ++i) g.set(i, VarietyDescription::identity_point(1));
  return g;
}

GradedDescription bouquet2(std::size_t k) { return wedge_description(circle(k), circle(k), k); }

// ---------------------------------------------------------------------------

void chain_link(Check& c) {
  const std::string delta = "t1+t2+t3-t1*t2-t1*t3-t2*t3";
  SubspaceArrangement expected(3, {span_of(3, {{0, 1, -1}}), span_of(3, {{1, 0, -1}}), span_of(3, {{1, -1, 0}})});

  Json cone = run_cli(c, {"tcone", "--poly", delta});
  if (!cone.is_null())
    c.expect(io::arrangement_from_json(cone["arrangement"]) == expected, "tcone arrangement differs");

  Json desc = run_cli(c, {"omega-describe", "--poly", delta, "--r", "1"});
  if (!desc.is_null()) {
    std::vector<RationalSubspace> excluded;
    for (const Json& s : desc["excluded"]) excluded.push_back(io::subspace_from_json(s));
    c.expect(SubspaceArrangement(3, excluded) == expected && excluded.size() == 3,
             "excluded points differ from (0,1,-1), (1,0,-1), (1,-1,0)");
  }
}

void toy_cone(Check& c) {
  SubspaceArrangement cone = tangent_cone_polys({parse_laurent("t1+t2-2")});
  c.expect(cone == SubspaceArrangement(2, {RationalSubspace(2)}), "tau1 is not {0}");
}

void omega_closed(Check& c) {
  Presentation pres = parse_presentation(
      "<x1,x2,x3 | [x1^2,x2], [x1,x3], x1 [x2,x3] x1^-1 [x2,x3]>");
  AlexanderMatrix a = alexander_matrix(pres);
  const char* display[3][3] = {{"(t2-1)*(1+t1)", "(1-t1)*(1+t1)", "0"},
                               {"t3-1", "0", "1-t1"},
                               {"0", "(t3-1)*(1+t1)", "(1-t2)*(1+t1)"}};
  // The display is the matrix of the inverted relators; the relators as
  // written give its negative row by row.
  Presentation inverted = pres;
  for (auto& r : inverted.relators) r = r.inverse();
  AlexanderMatrix b = alexander_matrix(inverted);
  bool same = a.num_vars() == 3 && a.entries.rows() == 3 && a.entries.cols() == 3;
  for (std::size_t i = 0; same && i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      LaurentPoly want = parse_laurent(display[i][j], 3);
      same = same && b.entries(i, j) == want && a.entries(i, j) == -want;
    }
  c.expect(same, "Alexander matrix differs from the displayed one");

  TranslatedTorus t1_minus_one(TorsionCharacter(vec({Rational(1, 2), 0, 0})), span_of(3, {{0, 1, 0}, {0, 0, 1}}));
  c.expect(generic_rank_on_torus(a.entries, t1_minus_one) == 1, "generic rank on {t1=-1} is not 1");
  c.expect(rank_at_character(a.entries, TorsionCharacter(vec({Rational(1, 3), 0, 0}))) == 2,
           "rank at (1/3,0,0) is not 2");
  c.expect(contains_translated_torus(a, t1_minus_one), "{t1=-1} not inside W1");

  VarietyDescription w = io::description_from_json(Json::parse(std::ifstream(data("omega_closed.json"))));
  Codim1ClosedForm closed = omega_codim1_closed_form(w, 2);
  RationalSubspace plane = span_of(3, {{0, 1, 0}, {0, 0, 1}});
  c.expect(closed.shape == Codim1ClosedForm::Shape::grassmannian && closed.l == plane,
           "closed form is not Grass_2 of {x1=0}");

  Json member = run_cli(c, {"omega-test", "--desc", data("omega_closed.json"), "--plane", data("omega_closed_plane.json")});
  if (!member.is_null()) c.expect(member["member"] == true, "{x1=0} not certified");

  testing::Rng rng(2024);
  std::size_t blocked = 0;
  while (blocked < 200) {
    RationalSubspace p = rng.subspace(3, 2, 3);
    if (p == plane) continue;
    Json v = run_cli(c, {"omega-test", "--desc", data("omega_closed.json"), "--plane", io::to_json(p).dump()});
    if (v.is_null()) return;
    c.expect(v["member"] == false, "random plane not blocked: " + io::to_json(p).dump());
    c.expect(!closed.contains(p), "closed form admits a random plane");
    ++blocked;
  }
}

Rational minor(const RationalSubspace& p, std::size_t i, std::size_t j) {
  const RationalMatrix& b = p.basis();
  return b(0, i) * b(1, j) - b(0, j) * b(1, i);
}

void f2_times_f2(Check& c) {
  GradedDescription w = product_description(bouquet2(1), bouquet2(1), 1);
  RationalSubspace l1 = span_of(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});  // {x1 = x2 = 0}
  RationalSubspace l2 = span_of(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});  // {x3 = x4 = 0}
  VarietyDescription expected(4, {TranslatedTorus::subtorus(l1), TranslatedTorus::subtorus(l2)});
  c.expect(w.at(1) == expected, "degree-1 components are not L1, L2");

  auto single = [](const std::vector<PluckerForm>& forms, std::vector<std::size_t> subset) {
    if (forms.size() != 1) return false;
    RationalVector want(forms[0].coeffs.size());
    want[subset_index(4, subset)] = 1;
    return forms[0].coeffs == want;
  };
  c.expect(single(schubert_equations(l1, 2), {0, 1}), "sigma_2(L1) is not {p12 = 0}");
  c.expect(single(schubert_equations(l2, 2), {2, 3}), "sigma_2(L2) is not {p34 = 0}");

  testing::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    RationalSubspace p = rng.subspace(4, 2, 2);
    bool expected_member = !is_zero(minor(p, 0, 1)) && !is_zero(minor(p, 2, 3));
    c.expect(omega_membership(w.at(1), p).member == expected_member,
             "verdict disagrees with p12*p34 != 0 on " + io::to_json(p).dump());
  }
}

void link_421(Check& c) {
  VarietyDescription w = io::description_from_json(Json::parse(std::ifstream(data("link421.json"))));
  c.expect(tangent_cone_description(w) == SubspaceArrangement(2, {RationalSubspace(2)}), "tau1 is not {0}");
  c.expect(omega1_r1_description(tangent_cone_description(w)).empty(), "some line is excluded");
  testing::Rng rng(11);
  for (int i = 0; i < 50; ++i)
    c.expect(omega_membership(w, rng.subspace(2, 1, 5)).member, "a line is blocked");
  c.expect(!maximal_cover_finiteness(w), "W reported finite");
  c.expect(!omega_membership(w, RationalSubspace::full(2)).member, "Q^2 not blocked");
}

void deleted_b3(Check& c) {
  VarietyDescription w = io::description_from_json(Json::parse(std::ifstream(data("deleted_b3_component.json"))));
  const TranslatedTorus& rho_t = w.components().at(0);
  RationalVector mu = {-1, 1, 0, 0, 1, -1, -2, 2};
  RationalVector lambda = {Rational(1, 2), 0, Rational(1, 2), Rational(1, 2), 0, Rational(1, 2), 0, 0};
  RationalVector two_lambda = lambda;
  for (auto& x : two_lambda) x *= 2;
  RationalSubspace line = canonicalize(RationalMatrix::from_rows({mu}, 8));
  RationalSubspace p = canonicalize(RationalMatrix::from_rows({mu, two_lambda}, 8));
  c.expect(io::subspace_from_json(Json::parse(std::ifstream(data("deleted_b3_plane.json")))) == p, "plane file differs");
  c.expect(rho_t.subspace() == line, "component is not rho*exp(span{mu})");

  c.expect(sigma_rho_membership(p, line, TorsionCharacter(lambda)), "P not in sigma_2(span{mu}, rho)");
  c.expect(tangent_cone_description(w).empty(), "tau1 of rho*T is not empty");
  c.expect(schubert_upper_bound(tangent_cone_description(w), p), "Schubert bound of rho*T rejects P");

  // The characteristic arrangement, rebuilt from the hyperplanes
  // x, y, z, x-y, x-z, y-z, x-y-z, x-y+z.
  const long normals[8][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0},
                              {1, 0, -1}, {0, 1, -1}, {1, -1, -1}, {1, -1, 1}};
  auto on = [&](std::size_t k, const long pt[3]) {
    return normals[k][0] * pt[0] + normals[k][1] * pt[1] + normals[k][2] * pt[2] == 0;
  };
  std::vector<std::vector<std::size_t>> points;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      const long* a = normals[i];
      const long* b = normals[j];
      long pt[3] = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      std::vector<std::size_t> s;
      for (std::size_t k = 0; k < 8; ++k)
        if (on(k, pt)) s.push_back(k);
      if (s.size() >= 3 && s[0] == i && s[1] == j) points.push_back(s);
    }
  std::size_t triples = 0, quadruples = 0;
  SubspaceArrangement arrangement(8);
  for (const auto& s : points) {
    if (s.size() == 3) ++triples;
    if (s.size() == 4) ++quadruples;
    std::vector<RationalVector> eqs;
    RationalVector sum(8);
    for (std::size_t k = 0; k < 8; ++k) {
      if (std::find(s.begin(), s.end(), k) != s.end()) {
        sum[k] = 1;
      } else {
        RationalVector e(8);
        e[k] = 1;
        eqs.push_back(e);
      }
    }
    eqs.push_back(sum);
    arrangement.add(RationalSubspace::solutions(RationalMatrix::from_rows(eqs, 8)));
  }
  c.expect(triples == 6 && quadruples == 1, "expected 6 triple points and 1 quadruple point");

  // Braid sub-arrangements: six lines with four triple points among them,
  // each line on exactly two.  Opposite lines pair up.
  std::size_t braids = 0;
  for (const auto& six : subsets(8, 6)) {
    std::vector<std::vector<std::size_t>> inside;
    bool higher = false;
    for (const auto& pt : points) {
      std::vector<std::size_t> t;
      for (std::size_t k : pt)
        if (std::find(six.begin(), six.end(), k) != six.end()) t.push_back(k);
      if (t.size() == 3) inside.push_back(t);
      higher = higher || t.size() > 3;
    }
    if (higher || inside.size() != 4) continue;
    std::vector<int> count(8, 0);
    for (const auto& t : inside)
      for (std::size_t k : t) ++count[k];
    if (!std::all_of(six.begin(), six.end(), [&](std::size_t k) { return count[k] == 2; })) continue;
    ++braids;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) {
        bool share = false;
        for (const auto& t : inside)
          share = share || (std::find(t.begin(), t.end(), six[i]) != t.end() &&
                            std::find(t.begin(), t.end(), six[j]) != t.end());
        if (!share) pairs.emplace_back(six[i], six[j]);
      }
    if (pairs.size() != 3) {
      c.expect(false, "braid sub-arrangement without three opposite pairs");
      continue;
    }
    RationalVector u(8), v(8);
    u[pairs[0].first] = u[pairs[0].second] = 1;
    v[pairs[1].first] = v[pairs[1].second] = 1;
    for (auto* x : {&u, &v}) (*x)[pairs[2].first] = (*x)[pairs[2].second] = -1;
    arrangement.add(canonicalize(RationalMatrix::from_rows({u, v}, 8)));
  }
  c.expect(braids == 5, "expected 5 braid sub-arrangements, found " + std::to_string(braids));

  std::size_t planes = 0, three_planes = 0;
  for (const auto& l : arrangement.subspaces()) (l.dim() == 2 ? planes : three_planes) += 1;
  c.expect(planes == 11 && three_planes == 1, "arrangement is not eleven 2-planes and a 3-plane");
  c.expect(schubert_upper_bound(arrangement, p), "P meets a member of the characteristic arrangement");

  VarietyDescription full = w;
  for (const auto& l : arrangement.subspaces()) full.add(TranslatedTorus::subtorus(l));
  OmegaVerdict verdict = omega_membership(full, p);
  c.expect(!verdict.member, "P not excluded from Omega");
  bool by_rho_t = false;
  for (const auto& b : verdict.blockers) by_rho_t = by_rho_t || (b.component == rho_t && b.reason == BlockReason::sigma_rho);
  c.expect(by_rho_t, "P not blocked by the translated component");
}

void ccm(Check& c) {
  std::ifstream in(data("ccm.pres"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Presentation pres = parse_presentation(text);
  c.expect(pres.num_generators() == 6 && pres.relators.size() == 16, "presentation shape");
  AlexanderMatrix a = alexander_matrix(pres);
  c.expect(a.num_vars() == 6, "b1 is not 6");

  TranslatedTorus t1 = TranslatedTorus::subtorus(span_of(6, {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));
  RationalSubspace l2 = span_of(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}});
  TranslatedTorus rho_t2(TorsionCharacter(vec({0, 0, Rational(1, 2), 0, 0, 0})), l2);
  c.expect(contains_translated_torus(a, t1), "T1 not certified");
  c.expect(contains_translated_torus(a, rho_t2), "rho*T2 not certified");

  VarietyDescription w = io::description_from_json(Json::parse(std::ifstream(data("ccm.json"))));
  std::size_t beta = 0;
  while (beta < w.components().size() && !(w.components()[beta] == rho_t2)) ++beta;
  c.expect(beta < w.components().size(), "rho*T2 missing from the description");
  if (beta == w.components().size()) return;

  std::vector<long> qs;
  for (long q = 1; q <= 10; ++q) qs.push_back(q);
  NonOpenWitness wit = nonopen_witness(w, beta, 2, qs);
  c.expect(wit.p == l2 && wit.p_verdict.member, "P is not L2 or is blocked");
  std::optional<Rational> previous;
  for (const WitnessStep& s : wit.family) {
    c.expect(!s.verdict.member, "P_" + std::to_string(s.q) + " is not blocked");
    c.expect(s.plucker_distance.has_value(), "missing distance");
    if (!s.plucker_distance) continue;
    if (previous) c.expect(*s.plucker_distance <= *previous, "distances increase");
    // d_q · q bounded by d_1 forces d_q → 0.
    c.expect(*s.plucker_distance * s.q <= *wit.family.front().plucker_distance, "distance not O(1/q)");
    previous = s.plucker_distance;
  }
  c.expect(wit.family.size() == 10, "family size");
}

void stallings(Check& c) {
  GradedDescription f2 = bouquet2(3);
  GradedDescription cube = product_description(product_description(f2, f2, 3), f2, 3);
  c.expect(cube.at(3) == VarietyDescription::full(6), "degree 3 is not the full torus");
  FpkReport report = fpk_report(cube, 3, 1);
  c.expect(report.certified_empty && report.certificate && report.certificate->dim() == 6,
           "emptiness of Omega^3_1 not certified");
  c.expect(report.message.find("H_3") != std::string::npos &&
               report.message.find("not finitely generated") != std::string::npos,
           "deduction missing: " + report.message);
  Json cli = run_cli(c, {"fpk", "--bouquets", "2,2,2", "--degree", "3", "--r", "1"});
  if (!cli.is_null()) c.expect(cli["certified_empty"] == true, "CLI fpk not certified");
}

void properties(Check& c) {
  std::uint64_t seed = 0x5eed;
  for (const auto& prop : testing::all_properties()) {
    testing::PropertyResult r = prop.run(seed++, testing::kDefaultCases);
    std::printf("      %-24s %4zu cases, %zu failures\n", prop.name, r.cases, r.failures);
    c.expect(r.cases >= 200, std::string(prop.name) + ": fewer than 200 cases");
    c.expect(r.ok(), std::string(prop.name) + ": " + r.first_failure);
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "chain link tangent cone and excluded points", 1, chain_link},
      {2, "toy tangent cone {t1+t2=2}", 1, toy_cone},
      {3, "Fox pipeline and Omega^1_2 of a three-generator group", 5, omega_closed},
      {4, "F2 x F2 Schubert hyperplanes", 5, f2_times_f2},
      {5, "link 4^2_1", 1, link_421},
      {6, "deleted B3 translated component", 1, deleted_b3},
      {7, "CCM surface witnesses", 120, ccm},
      {8, "Stallings finiteness obstruction", 1, stallings},
      {9, "randomized property suites", 60, properties},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.problems.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= cr.limit_seconds)
      check.problems.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(cr.limit_seconds) + " s");
    bool ok = check.problems.empty();
    failed += !ok;
    std::printf("%s %d %s (%.3f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, seconds);
    for (std::size_t i = 0; i < check.problems.size() && i < 5; ++i)
      std::printf("      %s\n", check.problems[i].c_str());
  }
  return failed == 0 ? 0 : 1;
}
