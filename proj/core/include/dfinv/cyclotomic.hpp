#pragma once

// Exact arithmetic in cyclotomic fields Q(ζ_m) = Q[x]/Φ_m(x).

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "dfinv/rational.hpp"

namespace dfinv {

/// Dense univariate polynomial over Q, coefficients low to high, no trailing
/// zeros (the zero polynomial is empty).
using UPoly = std::vector<Rational>;

namespace upoly {
void trim(UPoly& p);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
/// Quotient and remainder of a by b (b non-zero).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
}  // namespace upoly

/// The m-th cyclotomic polynomial, by dividing x^m - 1 by Φ_d for d | m, d < m.
UPoly cyclotomic_polynomial(unsigned long m);

unsigned long euler_phi(unsigned long m);

class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned long order);
  unsigned long order() const noexcept { return m_; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }
  const UPoly& modulus() const noexcept { return phi_; }
  /// Reduces an arbitrary polynomial in ζ into a length-degree() vector.
  std::vector<Rational> reduce(const UPoly& p) const;

 private:
  unsigned long m_;
  UPoly phi_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

FieldPtr cyclotomic_field(unsigned long m);

/// An element of Q(ζ_m), stored in the power basis 1, ζ, …, ζ^(φ(m)-1).
/// Binary operations on elements of different orders lift both operands to
/// the lcm of the orders.  The default value is 0 ∈ Q = Q(ζ_1).
class CyclotomicNumber {
 public:
  CyclotomicNumber();
  CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs);
  CyclotomicNumber(const Rational& q);  // NOLINT: implicit embedding of Q
  CyclotomicNumber(long q) : CyclotomicNumber(Rational(q)) {}  // NOLINT

  static CyclotomicNumber zero(FieldPtr field);
  static CyclotomicNumber rational(FieldPtr field, const Rational& q);
  /// ζ_m^k for any integer k.
  static CyclotomicNumber root_power(FieldPtr field, long k);

  unsigned long order() const noexcept { return field_->order(); }
  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  /// Same element viewed in Q(ζ_m') for a multiple m' of order().
  CyclotomicNumber lift(const FieldPtr& target) const;

  CyclotomicNumber inverse() const;

  /// Value under ζ_m ↦ exp(2πi/m).
  std::complex<double> to_complex() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const CyclotomicNumber& c) { return c.is_zero(); }

/// "3/2", or "[m=3](1 + 2*z)" with z = ζ_m for non-rational values.
std::string to_string(const CyclotomicNumber& c);

}  // namespace dfinv
