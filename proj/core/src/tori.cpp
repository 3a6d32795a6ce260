#include "dfinv/tori.hpp"

#include <algorithm>

#include "dfinv/error.hpp"

namespace dfinv {

namespace {

// Some c with c · rows = target, when target lies in the row space.
std::optional<RationalVector> solve_combination(const RationalMatrix& rows,
                                                const RationalVector& target) {
  const std::size_t k = rows.rows(), n = target.size();
  RationalMatrix a(n, k + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) a(j, i) = rows(i, j);
    a(j, k) = -target[j];
  }
  RationalMatrix ker = kernel(a);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    if (is_zero(ker(r, k))) continue;
    RationalVector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = ker(r, i) / ker(r, k);
    return c;
  }
  return std::nullopt;
}

RationalVector combine(const RationalVector& c, const RationalMatrix& rows, std::size_t offset,
                       std::size_t count) {
  RationalVector v(rows.cols(), Rational(0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) v[j] += c[offset + i] * rows(i, j);
  return v;
}

}  // namespace

VarietyDescription::VarietyDescription(std::size_t ambient_dim,
                                       const std::vector<TranslatedTorus>& components)
    : n_(ambient_dim) {
  for (const auto& c : components) add(c);
}

VarietyDescription VarietyDescription::identity_point(std::size_t n) {
  return VarietyDescription(n, {TranslatedTorus::point(TorsionCharacter(n))});
}

VarietyDescription VarietyDescription::full(std::size_t n) {
  return VarietyDescription(n, {TranslatedTorus::full(n)});
}

void VarietyDescription::add(const TranslatedTorus& c) {
  if (c.ambient_dim() != n_) throw DimensionMismatch("VarietyDescription: component dimension");
  for (const auto& d : components_)
    if (d.contains(c)) return;
  std::erase_if(components_, [&](const TranslatedTorus& d) { return c.contains(d); });
  components_.insert(std::upper_bound(components_.begin(), components_.end(), c), c);
}

bool VarietyDescription::contains_point(const TorsionCharacter& x) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const TranslatedTorus& c) { return c.contains_point(x); });
}

bool VarietyDescription::is_finite() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const TranslatedTorus& c) { return c.dim() == 0; });
}

VarietyDescription unite(const VarietyDescription& a, const VarietyDescription& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("unite");
  VarietyDescription out = a;
  for (const auto& c : b.components()) out.add(c);
  return out;
}

std::size_t GradedDescription::max_degree() const {
  if (by_degree_.empty()) throw PreconditionError("graded description has no degrees");
  return by_degree_.rbegin()->first;
}

const VarietyDescription& GradedDescription::at(std::size_t degree) const {
  auto it = by_degree_.find(degree);
  if (it == by_degree_.end())
    throw PreconditionError("degree " + std::to_string(degree) + " is not described");
  return it->second;
}

void GradedDescription::set(std::size_t degree, VarietyDescription d) {
  if (d.ambient_dim() != n_) throw DimensionMismatch("GradedDescription::set");
  by_degree_[degree] = std::move(d);
}

GradedDescription GradedDescription::constant_above_zero(const VarietyDescription& d,
                                                         std::size_t k) {
  GradedDescription g(d.ambient_dim());
  g.set(0, VarietyDescription::identity_point(d.ambient_dim()));
  for (std::size_t i = 1; i <= k; ++i) g.set(i, d);
  return g;
}

TranslatedTorus product(const TranslatedTorus& a, const TranslatedTorus& b) {
  const std::size_t p = a.ambient_dim(), q = b.ambient_dim();
  RationalVector lambda = a.rho().lambda();
  lambda.insert(lambda.end(), b.rho().lambda().begin(), b.rho().lambda().end());
  const RationalMatrix& ba = a.subspace().basis();
  const RationalMatrix& bb = b.subspace().basis();
  RationalMatrix basis(ba.rows() + bb.rows(), p + q, Rational(0));
  for (std::size_t i = 0; i < ba.rows(); ++i)
    for (std::size_t j = 0; j < p; ++j) basis(i, j) = ba(i, j);
  for (std::size_t i = 0; i < bb.rows(); ++i)
    for (std::size_t j = 0; j < q; ++j) basis(ba.rows() + i, p + j) = bb(i, j);
  return TranslatedTorus(TorsionCharacter(std::move(lambda)), canonicalize(basis));
}

GradedDescription product_description(const GradedDescription& a, const GradedDescription& b,
                                      std::size_t k) {
  GradedDescription out(a.ambient_dim() + b.ambient_dim());
  for (std::size_t i = 0; i <= k; ++i) {
    VarietyDescription d(out.ambient_dim());
    for (std::size_t p = 0; p <= i; ++p)
      for (const auto& ca : a.at(p).components())
        for (const auto& cb : b.at(i - p).components()) d.add(product(ca, cb));
    out.set(i, std::move(d));
  }
  return out;
}

GradedDescription wedge_description(const GradedDescription& a, const GradedDescription& b,
                                    std::size_t k) {
  if (a.ambient_dim() == 0 || b.ambient_dim() == 0)
    throw PreconditionError("wedge_description: both factors need positive first Betti number");
  return GradedDescription::constant_above_zero(
      VarietyDescription::full(a.ambient_dim() + b.ambient_dim()), k);
}

VarietyDescription pushforward(const VarietyDescription& d, const IntegerMatrix& dual,
                               const std::vector<TorsionCharacter>& torsion_images) {
  if (dual.cols() != d.ambient_dim()) throw DimensionMismatch("pushforward: matrix columns");
  const std::size_t n = dual.rows();
  RationalMatrix q = to_rational(dual);
  if (rank(q) != dual.cols())
    throw PreconditionError("pushforward: character map is not injective (rank deficient)");
  for (const auto& t : torsion_images)
    if (t.ambient_dim() != n) throw DimensionMismatch("pushforward: torsion image dimension");
  VarietyDescription out(n);
  for (const auto& c : d.components()) {
    RationalVector lambda = q * c.rho().lambda();
    RationalSubspace l = image(q, c.subspace());
    for (const auto& t : torsion_images) {
      RationalVector shifted = lambda;
      for (std::size_t i = 0; i < n; ++i) shifted[i] += t.lambda()[i];
      out.add(TranslatedTorus(TorsionCharacter(std::move(shifted)), l));
    }
  }
  return out;
}

OrbifoldDatum orbifold_v1(OrbifoldKind kind, std::size_t g, std::size_t s,
                          const std::vector<Integer>& m) {
  for (const auto& mi : m)
    if (mi < 2) throw PreconditionError("orbifold_v1: cone orders must be at least 2");
  const std::size_t t = m.size();
  OrbifoldDatum out;
  if (kind == OrbifoldKind::compact) {
    if (s != 0) throw PreconditionError("orbifold_v1: a compact orbifold has no punctures");
    if (g < 1) throw PreconditionError("orbifold_v1: compact case needs genus at least 1");
    out.free_rank = 2 * g;
    IntegerMatrix rel(t + 1, t, Integer(0));
    for (std::size_t i = 0; i < t; ++i) {
      rel(i, i) = m[i];
      rel(t, i) = 1;
    }
    if (t > 0) out.torsion = torsion_invariants(rel);
    if (g >= 2) out.kind = OrbifoldCase::full;
    else out.kind = t > 1 ? OrbifoldCase::off_identity : OrbifoldCase::trivial;
    return out;
  }
  if (s < 1) throw PreconditionError("orbifold_v1: punctured case needs s >= 1");
  out.free_rank = 2 * g + s - 1;
  if (out.free_rank == 0)
    throw PreconditionError("orbifold_v1: free rank 0 (g = 0, s = 1) is not covered");
  IntegerMatrix rel(t, t, Integer(0));
  for (std::size_t i = 0; i < t; ++i) rel(i, i) = m[i];
  if (t > 0) out.torsion = torsion_invariants(rel);
  if (out.free_rank >= 2) out.kind = OrbifoldCase::full;
  else out.kind = t > 0 ? OrbifoldCase::off_identity : OrbifoldCase::trivial;
  return out;
}

std::optional<TranslatedIntersection> intersect_translated(const TranslatedTorus& a,
                                                           const TranslatedTorus& b) {
  const std::size_t n = a.ambient_dim();
  if (b.ambient_dim() != n) throw DimensionMismatch("intersect_translated");
  RationalVector d = b.rho().lambda();
  for (std::size_t i = 0; i < n; ++i) d[i] -= a.rho().lambda()[i];
  RationalSubspace both = sum(a.subspace(), b.subspace());
  if (!lattice_coset_membership(d, both)) return std::nullopt;

  IntegerVector z = integer_part_in_coset(d, both);
  for (std::size_t i = 0; i < n; ++i) d[i] -= z[i];
  // d = x1 − x2 with x1 ∈ L1, x2 ∈ L2; the witness is λ1 + x1.
  const RationalMatrix& b1 = a.subspace().basis();
  const RationalMatrix& b2 = b.subspace().basis();
  RationalMatrix rows = RationalMatrix::stack(b1, b2);
  RationalVector x1(n, Rational(0));
  if (rows.rows() > 0) {
    auto c = solve_combination(rows, d);
    if (!c) throw std::logic_error("intersect_translated: decomposition failed");
    x1 = combine(*c, b1, 0, b1.rows());
  }
  RationalVector w = a.rho().lambda();
  for (std::size_t i = 0; i < n; ++i) w[i] += x1[i];
  TranslatedIntersection out{intersect(a.subspace(), b.subspace()).dim(),
                             TorsionCharacter(std::move(w))};
  if (!a.contains_point(out.witness) || !b.contains_point(out.witness))
    throw std::logic_error("intersect_translated: witness check failed");
  return out;
}

bool sigma_rho_membership(const RationalSubspace& p, const RationalSubspace& l,
                          const TorsionCharacter& rho) {
  if (p.ambient_dim() != l.ambient_dim() || rho.ambient_dim() != l.ambient_dim())
    throw DimensionMismatch("sigma_rho_membership");
  return !intersect(p, l).is_zero() && lattice_coset_membership(rho.lambda(), sum(p, l));
}

}  // namespace dfinv
