#include "dfinv/fox.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "dfinv/qlinalg.hpp"

namespace dfinv {

FreeWord FreeWord::generator(std::size_t gen, long exp) {
  FreeWord w;
  w.append({gen, exp});
  return w;
}

FreeWord FreeWord::from_letters(const std::vector<Letter>& letters) {
  FreeWord w;
  for (const Letter& l : letters) w.append(l);
  return w;
}

void FreeWord::append(Letter l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append({it->gen, -it->exp});
  return w;
}

FreeWord FreeWord::pow(long k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

FreeWord conjugate(const FreeWord& u, const FreeWord& w) { return w.inverse() * u * w; }

namespace {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : s_(text) {}

  Presentation parse() {
    expect('<');
    do {
      skip();
      std::size_t at = pos_;
      std::string name = identifier();
      if (index_.count(name)) {
        pos_ = at;
        fail("duplicate generator '" + name + "'");
      }
      index_[name] = p_.generators.size();
      p_.generators.push_back(name);
    } while (accept(','));
    if (accept('|')) {
      if (!peek('>')) {
        do p_.relators.push_back(relation());
        while (accept(','));
      }
    }
    expect('>');
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return p_;
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
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    skip();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected a generator name");
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return ident_start(c) || c == '[' || c == '(' || c == '1';
  }

  FreeWord relation() {
    FreeWord lhs = word();
    if (accept('=')) return lhs * word().inverse();
    return lhs;
  }

  FreeWord word() {
    if (!starts_atom()) fail("expected a word");
    FreeWord w;
    for (;;) {
      w = w * atom();
      if (accept('*')) {
        if (!starts_atom()) fail("expected a word after '*'");
        continue;
      }
      if (!starts_atom()) return w;
    }
  }

  FreeWord primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      FreeWord u = word();
      expect(',');
      FreeWord v = word();
      expect(']');
      return commutator(u, v);
    }
    if (c == '(') {
      ++pos_;
      FreeWord u = word();
      expect(')');
      return u;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    std::size_t at = pos_;
    std::string name = identifier();
    auto it = index_.find(name);
    if (it == index_.end()) {
      pos_ = at;
      fail("unknown generator '" + name + "'");
    }
    return FreeWord::generator(it->second);
  }

  FreeWord atom() {
    FreeWord base = primary();
    while (accept('^')) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+' ||
                               std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        base = base.pow(integer());
      } else {
        base = conjugate(base, primary());
      }
    }
    return base;
  }

  long integer() {
    bool neg = false;
    if (s_[pos_] == '-' || s_[pos_] == '+') neg = s_[pos_++] == '-';
    skip();
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("exponent too large");
    }
    if (start == pos_) fail("expected an integer exponent");
    return neg ? -v : v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Presentation p_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

std::string to_string(const FreeWord& w, const Presentation& p) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << ' ';
    os << p.generators.at(l.gen);
    if (l.exp != 1) os << '^' << l.exp;
    first = false;
  }
  return os.str();
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? "," : "") << p.generators[i];
  os << " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    os << (i ? ", " : "") << to_string(p.relators[i], p);
  os << '>';
  return os.str();
}

Exponent Abelianization::image(std::size_t gen) const {
  Exponent e(free_rank);
  for (std::size_t k = 0; k < free_rank; ++k) e[k] = to_long(projection(gen, k));
  return e;
}

Exponent Abelianization::image(const FreeWord& w) const {
  Exponent e(free_rank, 0);
  for (const Letter& l : w.letters())
    for (std::size_t k = 0; k < free_rank; ++k) e[k] += l.exp * to_long(projection(l.gen, k));
  return e;
}

Abelianization abelianize(const Presentation& p) {
  const std::size_t q = p.num_generators();
  IntegerMatrix sums(p.relators.size(), q, Integer(0));
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const Letter& l : p.relators[i].letters()) sums(i, l.gen) += l.exp;

  Abelianization a;
  if (sums.rows() == 0) {
    a.free_rank = q;
    a.projection = IntegerMatrix::identity(q);
    return a;
  }
  SmithForm f = snf(sums);
  a.free_rank = q - f.rank;
  a.projection = f.v.col_block(f.rank, q);
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.s(i, i) > 1) a.torsion.push_back(f.s(i, i));
  return a;
}

LaurentPoly fox_derivative_abelianized(const FreeWord& w, std::size_t j,
                                       const Abelianization& alpha) {
  const std::size_t n = alpha.free_rank;
  LaurentPoly out(n);
  Exponent prefix(n, 0);
  for (const Letter& l : w.letters()) {
    Exponent step = alpha.image(l.gen);
    if (l.gen == j) {
      if (l.exp > 0) {
        Exponent e = prefix;
        for (long k = 0; k < l.exp; ++k) {
          out.add_term(e, Rational(1));
          for (std::size_t v = 0; v < n; ++v) e[v] += step[v];
        }
      } else {
        Exponent e = prefix;
        for (long k = 0; k < -l.exp; ++k) {
          for (std::size_t v = 0; v < n; ++v) e[v] -= step[v];
          out.add_term(e, Rational(-1));
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) prefix[v] += l.exp * step[v];
  }
  return out;
}

LaurentPoly AlexanderMatrix::boundary1(std::size_t j) const {
  const std::size_t n = num_vars();
  return LaurentPoly::monomial(n, alpha.image(j), Rational(1)) -
         LaurentPoly::constant(n, Rational(1));
}

AlexanderMatrix alexander_matrix(const Presentation& p) {
  AlexanderMatrix a;
  a.alpha = abelianize(p);
  const std::size_t q = p.num_generators();
  a.entries = Matrix<LaurentPoly>(p.relators.size(), q, LaurentPoly(a.alpha.free_rank));
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (std::size_t j = 0; j < q; ++j)
      a.entries(i, j) = fox_derivative_abelianized(p.relators[i], j, a.alpha);
  return a;
}

std::size_t rank_at_character(const Matrix<LaurentPoly>& m, const TorsionCharacter& lambda) {
  Matrix<CyclotomicNumber> values(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      values(i, j) = evaluate_at_character(m(i, j), lambda);
  return rank(std::move(values));
}

std::size_t generic_rank_on_torus(const Matrix<LaurentPoly>& m, const TranslatedTorus& torus) {
  Matrix<CycloLaurentPoly> restricted(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      restricted(i, j) = restrict_to_translated_torus(m(i, j), torus);
  return generic_rank(std::move(restricted));
}

bool depth1_membership(const AlexanderMatrix& a, const TorsionCharacter& lambda) {
  if (lambda.ambient_dim() != a.num_vars())
    throw DimensionMismatch("depth1_membership: character dimension differs from b1");
  const std::size_t q = a.num_generators();
  std::size_t r1 = 0;
  for (std::size_t j = 0; j < q && r1 == 0; ++j)
    if (!evaluate_at_character(a.boundary1(j), lambda).is_zero()) r1 = 1;
  return rank_at_character(a.entries, lambda) + r1 + 1 <= q;
}

bool depth1_membership(const Presentation& p, const TorsionCharacter& lambda) {
  return depth1_membership(alexander_matrix(p), lambda);
}

bool contains_translated_torus(const AlexanderMatrix& a, const TranslatedTorus& torus) {
  if (torus.ambient_dim() != a.num_vars())
    throw DimensionMismatch("contains_translated_torus: torus dimension differs from b1");
  const std::size_t q = a.num_generators();
  std::size_t r1 = 0;
  for (std::size_t j = 0; j < q && r1 == 0; ++j)
    if (!restrict_to_translated_torus(a.boundary1(j), torus).is_zero()) r1 = 1;
  return generic_rank_on_torus(a.entries, torus) + r1 + 1 <= q;
}

bool contains_translated_torus(const Presentation& p, const TranslatedTorus& torus) {
  return contains_translated_torus(alexander_matrix(p), torus);
}

}  // namespace dfinv
