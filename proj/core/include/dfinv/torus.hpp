#pragma once

#include <cstddef>
#include <vector>

#include "dfinv/qlinalg.hpp"
#include "dfinv/rational.hpp"

namespace dfinv {

/// A torsion point ρ = exp(2πiλ) of (C*)^n, stored by λ ∈ [0,1)^n.
class TorsionCharacter {
 public:
  explicit TorsionCharacter(std::size_t ambient_dim = 0);
  /// Reduces every entry of λ into [0, 1).
  explicit TorsionCharacter(RationalVector lambda);

  static TorsionCharacter identity(std::size_t n) { return TorsionCharacter(n); }

  std::size_t ambient_dim() const noexcept { return lambda_.size(); }
  const RationalVector& lambda() const noexcept { return lambda_; }
  /// Multiplicative order of ρ: the lcm of the denominators of λ.
  Integer order() const;
  bool is_identity() const;

  TorsionCharacter operator*(const TorsionCharacter& o) const;
  TorsionCharacter inverse() const;

  friend bool operator==(const TorsionCharacter&, const TorsionCharacter&) = default;
  friend auto operator<=>(const TorsionCharacter& a, const TorsionCharacter& b) {
    return a.lambda_ <=> b.lambda_;
  }

 private:
  RationalVector lambda_;
};

/// A torsion-translated subtorus ρ·exp(L ⊗ C).  Points are L = 0, the whole
/// torus is L = Q^n.  λ is kept as the canonical representative of its class
/// in Q^n / (L + Z^n), so equal sets have identical representations.
class TranslatedTorus {
 public:
  explicit TranslatedTorus(std::size_t ambient_dim = 0);
  TranslatedTorus(const TorsionCharacter& rho, RationalSubspace l);

  static TranslatedTorus subtorus(RationalSubspace l);
  static TranslatedTorus point(const TorsionCharacter& rho);
  static TranslatedTorus full(std::size_t n);

  std::size_t ambient_dim() const noexcept { return l_.ambient_dim(); }
  std::size_t dim() const noexcept { return l_.dim(); }
  const TorsionCharacter& rho() const noexcept { return rho_; }
  const RationalSubspace& subspace() const noexcept { return l_; }

  /// True iff the coset passes through the identity (ρ ∈ exp(L ⊗ C)).
  bool contains_identity() const;
  bool contains_point(const TorsionCharacter& x) const;
  /// True iff `other` ⊆ *this as subsets of the torus.
  bool contains(const TranslatedTorus& other) const;

  friend bool operator==(const TranslatedTorus&, const TranslatedTorus&) = default;
  /// Canonical order: subspace (dimension first), then λ.
  friend bool operator<(const TranslatedTorus& a, const TranslatedTorus& b);

 private:
  TorsionCharacter rho_;
  RationalSubspace l_;
};

}  // namespace dfinv
