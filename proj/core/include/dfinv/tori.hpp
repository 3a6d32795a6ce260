#pragma once

// Characteristic-variety descriptions built from torsion-translated subtori,
// their combinators, and intersection theory of translated tori.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "dfinv/qlinalg.hpp"
#include "dfinv/torus.hpp"

namespace dfinv {

/// A finite union of translated subtori of (C*)^n, kept pruned (no component
/// inside another) and sorted.  Isolated points are components with L = 0.
class VarietyDescription {
 public:
  explicit VarietyDescription(std::size_t ambient_dim = 0) : n_(ambient_dim) {}
  VarietyDescription(std::size_t ambient_dim, const std::vector<TranslatedTorus>& components);

  /// {1}, the variety of a space whose homology never jumps off the identity.
  static VarietyDescription identity_point(std::size_t n);
  static VarietyDescription full(std::size_t n);

  std::size_t ambient_dim() const noexcept { return n_; }
  const std::vector<TranslatedTorus>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }

  void add(const TranslatedTorus& c);
  bool contains_point(const TorsionCharacter& x) const;
  /// True iff every component is a point.
  bool is_finite() const;

  friend bool operator==(const VarietyDescription&, const VarietyDescription&) = default;

 private:
  std::size_t n_;
  std::vector<TranslatedTorus> components_;
};

VarietyDescription unite(const VarietyDescription& a, const VarietyDescription& b);

/// Descriptions W^0 ⊆ W^1 ⊆ … indexed by degree.
class GradedDescription {
 public:
  explicit GradedDescription(std::size_t ambient_dim = 0) : n_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return n_; }
  /// Highest degree stored (throws when empty).
  std::size_t max_degree() const;
  const VarietyDescription& at(std::size_t degree) const;
  void set(std::size_t degree, VarietyDescription d);
  const std::map<std::size_t, VarietyDescription>& degrees() const noexcept { return by_degree_; }

  /// {1} in degree 0 and `d` in every degree 1..k.
  static GradedDescription constant_above_zero(const VarietyDescription& d, std::size_t k);

  friend bool operator==(const GradedDescription&, const GradedDescription&) = default;

 private:
  std::size_t n_;
  std::map<std::size_t, VarietyDescription> by_degree_;
};

/// (λ_a ⊕ λ_b, L_a ⊕ L_b).
TranslatedTorus product(const TranslatedTorus& a, const TranslatedTorus& b);

/// W^i(X1 × X2) = ∪_{p+q=i} W^p(X1) × W^q(X2), for i = 0..k.
GradedDescription product_description(const GradedDescription& a, const GradedDescription& b,
                                      std::size_t k);

/// W^i(X1 ∨ X2) for i = 0..k: {1} in degree 0 and the full torus above.
/// Both factors must have positive first Betti number.
GradedDescription wedge_description(const GradedDescription& a, const GradedDescription& b,
                                    std::size_t k);

/// Image of a description under the character map induced by an epimorphism
/// onto a quotient group.  `dual` is n × m with λ_G = dual · λ_Q and must have
/// rank m.  Each component is translated by every character in
/// `torsion_images` (the images of characters of the quotient's torsion part;
/// pass the identity alone when there is none).
VarietyDescription pushforward(const VarietyDescription& d, const IntegerMatrix& dual,
                               const std::vector<TorsionCharacter>& torsion_images);

enum class OrbifoldKind { compact, punctured };

enum class OrbifoldCase {
  full,          ///< V¹ is the whole character group
  off_identity,  ///< the non-identity components, together with {1}
  trivial        ///< V¹ = {1}
};

struct OrbifoldDatum {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  OrbifoldCase kind = OrbifoldCase::trivial;
};

/// First characteristic variety of an orbifold fundamental group of genus g
/// with s punctures and cone orders m.  Compact orbifolds need s = 0, g ≥ 1;
/// punctured ones need s ≥ 1 and 2g + s ≥ 2.
OrbifoldDatum orbifold_v1(OrbifoldKind kind, std::size_t g, std::size_t s,
                          const std::vector<Integer>& m);

struct TranslatedIntersection {
  std::size_t dim = 0;
  TorsionCharacter witness;
};

/// ρ1T1 ∩ ρ2T2: empty, or a union of translates of T1 ∩ T2 containing the
/// returned torsion point.
std::optional<TranslatedIntersection> intersect_translated(const TranslatedTorus& a,
                                                           const TranslatedTorus& b);

/// ρ ∈ exp((P + L) ⊗ C) and P ∩ L ≠ 0.
bool sigma_rho_membership(const RationalSubspace& p, const RationalSubspace& l,
                          const TorsionCharacter& rho);

}  // namespace dfinv
