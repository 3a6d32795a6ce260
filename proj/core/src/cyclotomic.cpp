#include "dfinv/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dfinv/error.hpp"

namespace dfinv {

namespace upoly {

void trim(UPoly& p) {
  while (!p.empty() && dfinv::is_zero(p.back())) p.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (dfinv::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  UPoly q(r.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational f = r.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

}  // namespace upoly

UPoly cyclotomic_polynomial(unsigned long m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: order 0");
  UPoly p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = upoly::divmod(p, cyclotomic_polynomial(d));
    p = std::move(q);
  }
  return p;
}

unsigned long euler_phi(unsigned long m) {
  unsigned long count = 0;
  for (unsigned long k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++count;
  return count;
}

CyclotomicField::CyclotomicField(unsigned long order)
    : m_(order), phi_(cyclotomic_polynomial(order)) {}

std::vector<Rational> CyclotomicField::reduce(const UPoly& p) const {
  auto r = upoly::divmod(p, phi_).second;
  r.resize(degree(), Rational(0));
  return r;
}

FieldPtr cyclotomic_field(unsigned long m) { return std::make_shared<const CyclotomicField>(m); }

namespace {

const FieldPtr& rational_field() {
  static const FieldPtr q = cyclotomic_field(1);
  return q;
}

UPoly as_upoly(const std::vector<Rational>& v) {
  UPoly p = v;
  upoly::trim(p);
  return p;
}

// Brings a and b to a common field; returns the shared field.
FieldPtr common_field(CyclotomicNumber& a, CyclotomicNumber& b) {
  if (a.order() == b.order()) return a.field();
  unsigned long m = std::lcm(a.order(), b.order());
  FieldPtr f = m == a.order() ? a.field() : m == b.order() ? b.field() : cyclotomic_field(m);
  if (a.order() != m) a = a.lift(f);
  if (b.order() != m) b = b.lift(f);
  return f;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree()) coeffs_ = field_->reduce(as_upoly(coeffs_));
}

CyclotomicNumber::CyclotomicNumber(const Rational& q)
    : field_(rational_field()), coeffs_{q} {}

CyclotomicNumber CyclotomicNumber::zero(FieldPtr field) {
  std::size_t d = field->degree();
  return CyclotomicNumber(std::move(field), std::vector<Rational>(d, Rational(0)));
}

CyclotomicNumber CyclotomicNumber::rational(FieldPtr field, const Rational& q) {
  auto z = zero(std::move(field));
  z.coeffs_[0] = q;
  return z;
}

CyclotomicNumber CyclotomicNumber::root_power(FieldPtr field, long k) {
  long m = static_cast<long>(field->order());
  long e = ((k % m) + m) % m;
  UPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[static_cast<std::size_t>(e)] = 1;
  auto coeffs = field->reduce(p);
  return CyclotomicNumber(std::move(field), std::move(coeffs));
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& q) { return dfinv::is_zero(q); });
}

bool CyclotomicNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& q) { return dfinv::is_zero(q); });
}

CyclotomicNumber CyclotomicNumber::lift(const FieldPtr& target) const {
  if (target->order() % order() != 0)
    throw std::invalid_argument("CyclotomicNumber::lift: order does not divide target");
  const unsigned long step = target->order() / order();
  UPoly p(coeffs_.size() * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  upoly::trim(p);
  return CyclotomicNumber(target, target->reduce(p));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
  // Extended Euclid: s*a + t*phi = g, g a non-zero constant.
  UPoly r0 = field_->modulus(), r1 = as_upoly(coeffs_);
  UPoly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = upoly::divmod(r0, r1);
    UPoly s = upoly::sub(s0, upoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Rational g = r1.front();
  for (auto& c : s1) c /= g;
  return CyclotomicNumber(field_, field_->reduce(s1));
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(order()));
  std::complex<double> acc = 0, pw = 1;
  for (const auto& c : coeffs_) {
    acc += c.get_d() * pw;
    pw *= z;
  }
  return acc;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  CyclotomicNumber b = o;
  field_ = common_field(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  CyclotomicNumber b = o;
  field_ = common_field(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  CyclotomicNumber b = o;
  field_ = common_field(*this, b);
  if (field_->degree() == 1) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  coeffs_ = field_->reduce(upoly::mul(as_upoly(coeffs_), as_upoly(b.coeffs_)));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  return *this *= o.inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return (a - b).is_zero();
}

std::string to_string(const CyclotomicNumber& c) {
  if (c.is_rational()) return to_string(c.coeffs().front());
  std::ostringstream os;
  os << "[m=" << c.order() << "](";
  bool first = true;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    const auto& q = c.coeffs()[i];
    if (is_zero(q)) continue;
    if (!first) os << (sgn(q) < 0 ? " - " : " + ");
    else if (sgn(q) < 0) os << "-";
    Rational a = abs(q);
    if (i == 0) os << to_string(a);
    else {
      if (a != 1) os << to_string(a) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace dfinv
