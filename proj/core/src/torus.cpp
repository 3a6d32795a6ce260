#include "dfinv/torus.hpp"

#include <algorithm>

#include "dfinv/error.hpp"

namespace dfinv {

TorsionCharacter::TorsionCharacter(std::size_t ambient_dim)
    : lambda_(ambient_dim, Rational(0)) {}

TorsionCharacter::TorsionCharacter(RationalVector lambda) : lambda_(std::move(lambda)) {
  for (auto& x : lambda_) x = frac(x);
}

Integer TorsionCharacter::order() const { return common_denominator(lambda_); }

bool TorsionCharacter::is_identity() const {
  return std::all_of(lambda_.begin(), lambda_.end(), [](const Rational& q) { return is_zero(q); });
}

TorsionCharacter TorsionCharacter::operator*(const TorsionCharacter& o) const {
  if (o.ambient_dim() != ambient_dim()) throw DimensionMismatch("TorsionCharacter product");
  RationalVector v = lambda_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.lambda_[i];
  return TorsionCharacter(std::move(v));
}

TorsionCharacter TorsionCharacter::inverse() const {
  RationalVector v = lambda_;
  for (auto& x : v) x = -x;
  return TorsionCharacter(std::move(v));
}

TranslatedTorus::TranslatedTorus(std::size_t ambient_dim)
    : rho_(ambient_dim), l_(ambient_dim) {}

TranslatedTorus::TranslatedTorus(const TorsionCharacter& rho, RationalSubspace l)
    : rho_(rho), l_(std::move(l)) {
  if (rho.ambient_dim() != l_.ambient_dim())
    throw DimensionMismatch("TranslatedTorus: character and subspace dimensions differ");
  rho_ = TorsionCharacter(coset_representative(rho.lambda(), l_));
}

TranslatedTorus TranslatedTorus::subtorus(RationalSubspace l) {
  auto n = l.ambient_dim();
  return TranslatedTorus(TorsionCharacter(n), std::move(l));
}

TranslatedTorus TranslatedTorus::point(const TorsionCharacter& rho) {
  return TranslatedTorus(rho, RationalSubspace(rho.ambient_dim()));
}

TranslatedTorus TranslatedTorus::full(std::size_t n) {
  return subtorus(RationalSubspace::full(n));
}

bool TranslatedTorus::contains_identity() const { return rho_.is_identity(); }

bool TranslatedTorus::contains_point(const TorsionCharacter& x) const {
  if (x.ambient_dim() != ambient_dim()) throw DimensionMismatch("contains_point");
  RationalVector d = x.lambda();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= rho_.lambda()[i];
  return lattice_coset_membership(d, l_);
}

bool TranslatedTorus::contains(const TranslatedTorus& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("TranslatedTorus::contains");
  return dfinv::contains(l_, other.l_) && contains_point(other.rho_);
}

bool operator<(const TranslatedTorus& a, const TranslatedTorus& b) {
  if (a.l_ < b.l_) return true;
  if (b.l_ < a.l_) return false;
  return a.rho_ < b.rho_;
}

}  // namespace dfinv
