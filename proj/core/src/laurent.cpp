#include "dfinv/laurent.hpp"

#include <cctype>
#include <sstream>

namespace dfinv {

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  LaurentPoly parse() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  LaurentPoly expr() {
    LaurentPoly acc(n_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = s_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly factor() {
    LaurentPoly base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    Integer k = digits();
    if (!k.fits_slong_p()) fail("exponent too large");
    long e = k.get_si();
    if (neg) {
      if (base.size() != 1) fail("negative power of a non-monomial");
      Exponent a = base.terms().begin()->first;
      Rational c = base.terms().begin()->second;
      for (auto& x : a) x = -x;
      base = LaurentPoly::monomial(n_, a, Rational(1) / c);
    }
    LaurentPoly out = LaurentPoly::constant(n_, Rational(1));
    for (long i = 0; i < e; ++i) out *= base;
    return out;
  }

  LaurentPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 't') {
      ++pos_;
      std::size_t at = pos_;
      Integer idx = digits();
      if (idx < 1 || idx > static_cast<long>(n_)) {
        pos_ = at;
        fail("variable index out of range");
      }
      return LaurentPoly::variable(n_, idx.get_ui() - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (peek('/')) {
        ++pos_;
        skip();
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return LaurentPoly::constant(n_, q);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::size_t max_variable_index(std::string_view s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 't') continue;
    std::size_t j = i + 1, v = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
      v = v * 10 + static_cast<std::size_t>(s[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

std::string monomial_string(const Exponent& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (a[i] != 1) out += "^" + std::to_string(a[i]);
  }
  return out;
}

template <class Coeff, class Fmt>
std::string format_poly(const Laurent<Coeff>& f, Fmt coeff_string) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : f.terms()) {
    std::string mono = monomial_string(a);
    auto [negative, text] = coeff_string(c);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    if (mono.empty()) os << text;
    else if (text == "1") os << mono;
    else os << text << "*" << mono;
    first = false;
  }
  return os.str();
}

long dot_exponent(const Exponent& a, const IntegerMatrix& b, std::size_t row) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += b(row, i) * a[i];
  return to_long(acc);
}

// m·(a·λ) as an integer, m a multiple of the order of λ.
long character_exponent(const Exponent& a, const TorsionCharacter& lambda, const Integer& m) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += lambda.lambda()[i] * a[i];
  acc *= m;
  return to_long(floor_div(acc.get_num(), acc.get_den()));
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t num_vars) {
  std::size_t n = num_vars == 0 ? max_variable_index(text) : num_vars;
  return LaurentParser(text, n).parse();
}

std::string to_string(const LaurentPoly& f) {
  return format_poly(f, [](const Rational& c) {
    return std::pair<bool, std::string>{sgn(c) < 0, to_string(Rational(abs(c)))};
  });
}

std::string to_string(const CycloLaurentPoly& f) {
  return format_poly(f, [](const CyclotomicNumber& c) {
    if (c.is_rational()) {
      const Rational& q = c.coeffs().front();
      return std::pair<bool, std::string>{sgn(q) < 0, to_string(Rational(abs(q)))};
    }
    return std::pair<bool, std::string>{false, to_string(c)};
  });
}

CyclotomicNumber evaluate_at_character(const LaurentPoly& f, const TorsionCharacter& lambda) {
  if (f.num_vars() != lambda.ambient_dim())
    throw DimensionMismatch("evaluate_at_character: variable count mismatch");
  Integer m = lambda.order();
  auto field = cyclotomic_field(m.get_ui());
  auto acc = CyclotomicNumber::zero(field);
  for (const auto& [a, c] : f.terms())
    acc += CyclotomicNumber::root_power(field, character_exponent(a, lambda, m)) *
           CyclotomicNumber::rational(field, c);
  return acc;
}

CyclotomicNumber evaluate_at_character(const CycloLaurentPoly& f, const TorsionCharacter& lambda) {
  if (f.num_vars() != lambda.ambient_dim())
    throw DimensionMismatch("evaluate_at_character: variable count mismatch");
  Integer m = lambda.order();
  for (const auto& [a, c] : f.terms()) mpz_lcm_ui(m.get_mpz_t(), m.get_mpz_t(), c.order());
  auto field = cyclotomic_field(m.get_ui());
  auto acc = CyclotomicNumber::zero(field);
  for (const auto& [a, c] : f.terms())
    acc += CyclotomicNumber::root_power(field, character_exponent(a, lambda, m)) * c.lift(field);
  return acc;
}

CycloLaurentPoly restrict_to_translated_torus(const LaurentPoly& f, const TranslatedTorus& torus) {
  if (f.num_vars() != torus.ambient_dim())
    throw DimensionMismatch("restrict_to_translated_torus: variable count mismatch");
  const IntegerMatrix b = saturated_lattice(torus.subspace()).basis();
  const std::size_t k = b.rows();
  Integer m = torus.rho().order();
  auto field = cyclotomic_field(m.get_ui());
  CycloLaurentPoly out(k);
  for (const auto& [a, c] : f.terms()) {
    Exponent e(k);
    for (std::size_t j = 0; j < k; ++j) e[j] = dot_exponent(a, b, j);
    out.add_term(std::move(e),
                 CyclotomicNumber::root_power(field, character_exponent(a, torus.rho(), m)) *
                     CyclotomicNumber::rational(field, c));
  }
  return out;
}

LaurentPoly restrict_to_line(const LaurentPoly& f, const std::vector<Integer>& z) {
  if (z.size() != f.num_vars()) throw DimensionMismatch("restrict_to_line: length mismatch");
  LaurentPoly out(1);
  for (const auto& [a, c] : f.terms()) {
    Integer e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) e += z[i] * a[i];
    out.add_term(Exponent{to_long(e)}, c);
  }
  return out;
}

CycloLaurentPoly to_cyclo(const LaurentPoly& f) {
  CycloLaurentPoly out(f.num_vars());
  for (const auto& [a, c] : f.terms()) out.add_term(a, CyclotomicNumber(c));
  return out;
}

std::size_t rank(Matrix<CyclotomicNumber> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    CyclotomicNumber inv = m(r, c).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      CyclotomicNumber f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t generic_rank(Matrix<CycloLaurentPoly> m) {
  if (m.empty()) return 0;
  const std::size_t nvars = m(0, 0).num_vars();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).num_vars() != nvars) throw DimensionMismatch("generic_rank: entries use different variable counts");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Exponent lo(nvars, 0);
    bool any = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      Exponent e = m(i, j).min_exponent();
      for (std::size_t v = 0; v < nvars; ++v) lo[v] = any ? std::min(lo[v], e[v]) : e[v];
      any = true;
    }
    for (auto& x : lo) x = -x;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).shifted(lo);
  }

  CycloLaurentPoly prev = CycloLaurentPoly::constant(nvars, CyclotomicNumber(1));
  std::size_t k = 0;
  for (; k < std::min(m.rows(), m.cols()); ++k) {
    std::size_t pi = m.rows(), pj = m.cols();
    for (std::size_t i = k; i < m.rows(); ++i)
      for (std::size_t j = k; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && (pi == m.rows() || m(i, j).size() < m(pi, pj).size())) {
          pi = i;
          pj = j;
        }
    if (pi == m.rows()) break;
    m.swap_rows(k, pi);
    m.swap_cols(k, pj);
    for (std::size_t i = k + 1; i < m.rows(); ++i)
      for (std::size_t j = k + 1; j < m.cols(); ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_divide(prev);
    prev = m(k, k);
  }
  return k;
}

}  // namespace dfinv
