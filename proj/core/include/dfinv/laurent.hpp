#pragma once

// Sparse multivariate Laurent polynomials over Q and over cyclotomic fields.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dfinv/cyclotomic.hpp"
#include "dfinv/error.hpp"
#include "dfinv/matrix.hpp"
#include "dfinv/rational.hpp"
#include "dfinv/torus.hpp"

namespace dfinv {

using Exponent = std::vector<long>;

/// Σ c_a t^a with exponents a ∈ Z^n and non-zero coefficients.  Terms are
/// kept in lexicographic exponent order; the zero polynomial has no terms.
template <class Coeff>
class Laurent {
 public:
  using TermMap = std::map<Exponent, Coeff>;

  explicit Laurent(std::size_t num_vars = 0) : n_(num_vars) {}

  static Laurent constant(std::size_t n, const Coeff& c) {
    return monomial(n, Exponent(n, 0), c);
  }
  static Laurent monomial(std::size_t n, Exponent a, const Coeff& c) {
    Laurent p(n);
    p.add_term(std::move(a), c);
    return p;
  }
  /// t_i (0-based index).
  static Laurent variable(std::size_t n, std::size_t i, long power = 1) {
    Exponent a(n, 0);
    a.at(i) = power;
    return monomial(n, std::move(a), Coeff(1));
  }

  std::size_t num_vars() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c·t^a, dropping the term if the coefficient cancels.
  void add_term(Exponent a, const Coeff& c) {
    if (a.size() != n_) throw DimensionMismatch("Laurent: exponent length mismatch");
    if (dfinv::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(a), c);
    if (!inserted) {
      it->second += c;
      if (dfinv::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Coefficient of t^a (zero if absent).
  Coeff coeff(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Sum of coefficients, i.e. the value at t = (1, …, 1).
  Coeff value_at_one() const {
    Coeff s(0);
    for (const auto& [a, c] : terms_) s += c;
    return s;
  }

  Laurent shifted(const Exponent& by) const {
    Laurent out(n_);
    for (const auto& [a, c] : terms_) {
      Exponent b = a;
      for (std::size_t i = 0; i < n_; ++i) b[i] += by[i];
      out.terms_.emplace(std::move(b), c);
    }
    return out;
  }

  /// Componentwise minimum of the exponents of all terms (zeros if empty).
  Exponent min_exponent() const {
    Exponent lo(n_, 0);
    bool first = true;
    for (const auto& [a, c] : terms_) {
      for (std::size_t i = 0; i < n_; ++i) lo[i] = first ? a[i] : std::min(lo[i], a[i]);
      first = false;
    }
    return lo;
  }

  Laurent operator-() const {
    Laurent out = *this;
    for (auto& [a, c] : out.terms_) c = -c;
    return out;
  }
  Laurent& operator+=(const Laurent& o) {
    check(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    check(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check(b);
    Laurent out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e = ea;
        for (std::size_t i = 0; i < a.n_; ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent scaled(const Coeff& k) const {
    Laurent out(n_);
    for (const auto& [a, c] : terms_) out.add_term(a, c * k);
    return out;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.n_ == b.n_ && (a - b).is_zero();
  }

  /// Exact quotient in the Laurent ring.  Throws std::domain_error when
  /// `divisor` does not divide *this.  Uses lexicographic leading terms; every
  /// quotient exponent of an exact division is bounded below by
  /// low(dividend) - low(divisor), which detects inexact division.
  Laurent exact_divide(const Laurent& divisor) const {
    check(divisor);
    if (divisor.is_zero()) throw std::domain_error("Laurent: division by zero");
    Laurent q(n_), r = *this;
    if (r.is_zero()) return q;
    const auto& [dlead, dcoeff] = *divisor.terms_.rbegin();
    Exponent bound = r.terms_.begin()->first;
    const Exponent& dlow = divisor.terms_.begin()->first;
    for (std::size_t i = 0; i < n_; ++i) bound[i] -= dlow[i];
    while (!r.is_zero()) {
      const auto& [rlead, rcoeff] = *r.terms_.rbegin();
      Exponent e = rlead;
      for (std::size_t i = 0; i < n_; ++i) e[i] -= dlead[i];
      if (e < bound) throw std::domain_error("Laurent: inexact division");
      Coeff f = rcoeff / dcoeff;
      Laurent term = monomial(n_, e, f);
      q.add_term(e, f);
      r -= term * divisor;
    }
    return q;
  }

 private:
  void check(const Laurent& o) const {
    if (o.n_ != n_) throw DimensionMismatch("Laurent: variable count mismatch");
  }

  std::size_t n_;
  TermMap terms_;
};

using LaurentPoly = Laurent<Rational>;
using CycloLaurentPoly = Laurent<CyclotomicNumber>;

/// Parses text such as "t1^2*t2^-1 - 3/2*t1 + (t1-1)*(t2+1)".  Variables are
/// t1..tn; `num_vars` = 0 infers n from the largest index used.
LaurentPoly parse_laurent(std::string_view text, std::size_t num_vars = 0);

std::string to_string(const LaurentPoly& f);
std::string to_string(const CycloLaurentPoly& f);

/// f(ρ) for ρ = exp(2πiλ), exactly in Q(ζ_m), m = order of ρ.
CyclotomicNumber evaluate_at_character(const LaurentPoly& f, const TorsionCharacter& lambda);
CyclotomicNumber evaluate_at_character(const CycloLaurentPoly& f, const TorsionCharacter& lambda);

/// Pullback of f along u ↦ ρ·u^B, where the rows of B (HNF) form a basis of
/// the saturated lattice L ∩ Z^n.  f vanishes on ρT iff the result is zero.
CycloLaurentPoly restrict_to_translated_torus(const LaurentPoly& f, const TranslatedTorus& torus);

/// Pullback along the monomial map t_i ↦ u^{z_i} to one variable.
LaurentPoly restrict_to_line(const LaurentPoly& f, const std::vector<Integer>& z);

CycloLaurentPoly to_cyclo(const LaurentPoly& f);

/// Exact rank over Q(ζ_m) by Gaussian elimination.
std::size_t rank(Matrix<CyclotomicNumber> m);

/// Rank over the fraction field of the coefficient ring (the rank at a generic
/// point), by fraction-free Bareiss elimination with full pivoting.  Rows are
/// first divided by their monomial content.
std::size_t generic_rank(Matrix<CycloLaurentPoly> m);

}  // namespace dfinv
