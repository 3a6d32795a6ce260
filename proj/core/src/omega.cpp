#include "dfinv/omega.hpp"

#include <algorithm>
#include <stdexcept>

#include "dfinv/error.hpp"

namespace dfinv {

std::string to_string(BlockReason r) {
  return r == BlockReason::sigma_rho ? "sigma_rho" : "dim_ge_1";
}

namespace {

void check_plane(const VarietyDescription& w, const RationalSubspace& p) {
  if (p.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch("plane and variety live in different dimensions");
  if (p.dim() == 0) throw PreconditionError("the plane must have dimension at least 1");
}

}  // namespace

OmegaVerdict omega_membership(const VarietyDescription& w, const RationalSubspace& p) {
  check_plane(w, p);
  OmegaVerdict v;
  const TranslatedTorus exp_p = TranslatedTorus::subtorus(p);
  for (const auto& c : w.components()) {
    if (c.dim() == 0) continue;
    bool by_sigma = sigma_rho_membership(p, c.subspace(), c.rho());
    auto meet = intersect_translated(exp_p, c);
    bool by_intersection = meet && meet->dim >= 1;
    if (by_sigma != by_intersection)
      throw std::logic_error("omega_membership: intersection criteria disagree");
    if (by_sigma)
      v.blockers.push_back(
          {c, c.contains_identity() ? BlockReason::dim_ge_1 : BlockReason::sigma_rho});
  }
  v.member = v.blockers.empty();
  if (p.dim() == 1) {
    RationalVector dir = p.basis().row_vector(0);
    if (omega1_r1_member(tangent_cone_description(w), dir) != v.member)
      throw std::logic_error("omega_membership: tangent-cone cross-check failed");
  }
  return v;
}

std::vector<RationalSubspace> omega1_r1_description(const SubspaceArrangement& c) {
  std::vector<RationalSubspace> out;
  for (const auto& l : c.subspaces())
    if (!l.is_zero()) out.push_back(l);
  return out;
}

bool omega1_r1_member(const SubspaceArrangement& c, const RationalVector& v) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); }))
    throw PreconditionError("omega1_r1_member: zero vector spans no line");
  return !c.contains_vector(v);
}

bool Codim1ClosedForm::contains(const RationalSubspace& p) const {
  if (p.dim() != r) throw PreconditionError("closed form queried with a plane of wrong dimension");
  switch (shape) {
    case Shape::all: return true;
    case Shape::empty: return false;
    case Shape::grassmannian: return dfinv::contains(l, p);
  }
  return false;
}

Codim1ClosedForm omega_codim1_closed_form(const VarietyDescription& w, std::size_t r) {
  const std::size_t n = w.ambient_dim();
  if (r < 1 || r > n) throw PreconditionError("omega_codim1_closed_form: need 1 <= r <= n");
  std::optional<RationalSubspace> l;
  for (const auto& c : w.components()) {
    if (c.dim() == 0) continue;
    if (c.dim() + 1 != n)
      throw PreconditionError("omega_codim1_closed_form: a component is not of codimension one");
    if (l && *l != c.subspace())
      throw PreconditionError("omega_codim1_closed_form: components are not parallel");
    if (c.contains_identity())
      throw PreconditionError("omega_codim1_closed_form: a translate passes through 1");
    l = c.subspace();
  }
  if (!l) throw PreconditionError("omega_codim1_closed_form: no positive-dimensional component");
  Codim1ClosedForm out;
  out.r = r;
  out.l = *l;
  if (r == 1) out.shape = Codim1ClosedForm::Shape::all;
  else if (r < n) out.shape = Codim1ClosedForm::Shape::grassmannian;
  else out.shape = Codim1ClosedForm::Shape::empty;
  return out;
}

bool schubert_upper_bound(const SubspaceArrangement& c, const RationalSubspace& p) {
  if (p.ambient_dim() != c.ambient_dim()) throw DimensionMismatch("schubert_upper_bound");
  return std::none_of(c.subspaces().begin(), c.subspaces().end(),
                      [&](const RationalSubspace& l) { return sigma_membership(p, l); });
}

NonOpenWitness nonopen_witness(const VarietyDescription& w, std::size_t beta, std::size_t r,
                               const std::vector<long>& qs) {
  const std::size_t n = w.ambient_dim();
  if (beta >= w.components().size())
    throw PreconditionError("(1) fails: no component with index " + std::to_string(beta));
  const TranslatedTorus& cb = w.components()[beta];
  const RationalSubspace& l = cb.subspace();
  const std::size_t d = l.dim();
  if (d < 2) throw PreconditionError("(1) fails: the chosen component has dimension below 2");
  if (r < 2 || r > d) throw PreconditionError("(1) fails: need 2 <= r <= dim L");
  for (const auto& c : w.components()) {
    if (c.dim() == 0) continue;
    if (c.subspace() == l) {
      if (c.contains_identity())
        throw PreconditionError("(1.5) fails: a component parallel to L passes through 1");
    } else if (!intersect(c.subspace(), l).is_zero()) {
      throw PreconditionError("(2) fails: another component meets L in positive dimension");
    }
  }
  for (long q : qs)
    if (q <= 0) throw PreconditionError("nonopen_witness: q must be positive");

  const RationalMatrix& v = l.basis();
  RationalMatrix pb = v.row_block(0, r);
  NonOpenWitness out;
  out.p = canonicalize(pb);
  out.p_verdict = omega_membership(w, out.p);
  if (!out.p_verdict.member) throw std::logic_error("nonopen_witness: P is not a member");

  const PluckerVector pp = plucker(out.p);
  std::size_t k0 = 0;
  while (is_zero(pp.coords[k0])) ++k0;

  for (long q : qs) {
    RationalMatrix m = pb;
    for (std::size_t j = 0; j < n; ++j) m(r - 1, j) += cb.rho().lambda()[j] / Rational(q);
    WitnessStep step;
    step.q = q;
    step.plane = canonicalize(m);
    if (step.plane.dim() != r) throw std::logic_error("nonopen_witness: P_q degenerated");
    PluckerVector pq = plucker(step.plane);
    if (!is_zero(pq.coords[k0])) {
      Rational scale = pp.coords[k0] / pq.coords[k0];
      Rational dist = 0;
      for (std::size_t i = 0; i < pq.coords.size(); ++i)
        dist = std::max(dist, Rational(abs(pq.coords[i] * scale - pp.coords[i])));
      step.plucker_distance = dist;
    }
    step.verdict = omega_membership(w, step.plane);
    if (step.verdict.member) throw std::logic_error("nonopen_witness: P_q is not blocked");
    out.family.push_back(std::move(step));
  }
  return out;
}

bool maximal_cover_finiteness(const VarietyDescription& w) { return w.is_finite(); }

FpkReport fpk_report(const GradedDescription& w, std::size_t k, std::size_t r) {
  const VarietyDescription& d = w.at(k);
  const std::size_t n = d.ambient_dim();
  if (r < 1 || r > n) throw PreconditionError("fpk_report: need 1 <= r <= n");
  FpkReport out;
  out.k = k;
  out.r = r;
  for (const auto& c : d.components()) {
    if (c.contains_identity() && n - c.dim() + 1 <= r) {
      out.certified_empty = true;
      out.certificate = c;
      break;
    }
  }
  const std::string ks = std::to_string(k), rs = std::to_string(r);
  if (out.certified_empty) {
    out.message = "Omega^" + ks + "_" + rs + " is empty; for every epimorphism nu: G -> Z^" + rs +
                  " whose kernel Gamma is of type FF_" + std::to_string(k == 0 ? 0 : k - 1) +
                  ", b_" + ks + "(Gamma) is infinite, so H_" + ks +
                  "(Gamma, Z) is not finitely generated and Gamma is not of type FP_" + ks;
  } else {
    out.message = "emptiness of Omega^" + ks + "_" + rs + " not certified by this tool";
  }
  return out;
}

}  // namespace dfinv
