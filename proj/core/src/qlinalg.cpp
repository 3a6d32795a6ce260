#include "dfinv/qlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dfinv/error.hpp"

namespace dfinv {

namespace {

void require_same_ambient(const RationalSubspace& a, const RationalSubspace& b,
                          const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": ambient dimensions " +
                            std::to_string(a.ambient_dim()) + " and " +
                            std::to_string(b.ambient_dim()));
}

// Gauss–Jordan in place; returns pivot columns.
std::vector<std::size_t> gauss_jordan(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

RationalMatrix rref(const RationalMatrix& m) {
  RationalMatrix w = m;
  auto pivots = gauss_jordan(w);
  return w.row_block(0, pivots.size());
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix w = m;
  return gauss_jordan(w).size();
}

RationalMatrix kernel(const RationalMatrix& m) {
  RationalMatrix w = m;
  auto pivots = gauss_jordan(w);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(n, Rational(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -w(i, f);
    basis.push_back(std::move(x));
  }
  return rref(RationalMatrix::from_rows(basis, n));
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

RationalSubspace::RationalSubspace(std::size_t ambient_dim)
    : n_(ambient_dim), basis_(0, ambient_dim) {}

RationalSubspace RationalSubspace::span(const RationalMatrix& rows) {
  RationalSubspace s(rows.cols());
  s.basis_ = rref(rows);
  return s;
}

RationalSubspace RationalSubspace::span(std::size_t ambient_dim,
                                        const std::vector<RationalVector>& rows) {
  return span(RationalMatrix::from_rows(rows, ambient_dim));
}

RationalSubspace RationalSubspace::full(std::size_t ambient_dim) {
  return span(RationalMatrix::identity(ambient_dim));
}

RationalSubspace RationalSubspace::solutions(const RationalMatrix& equations) {
  RationalSubspace s(equations.cols());
  s.basis_ = kernel(equations);
  return s;
}

bool RationalSubspace::contains_vector(const RationalVector& v) const {
  if (v.size() != n_) throw DimensionMismatch("contains_vector: length mismatch");
  RationalVector r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (dfinv::is_zero(basis_(i, p))) ++p;
    if (dfinv::is_zero(r[p])) continue;
    Rational f = r[p];
    for (std::size_t j = 0; j < n_; ++j) r[j] -= f * basis_(i, j);
  }
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return dfinv::is_zero(x); });
}

bool operator<(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      int c = cmp(a.basis_(i, j), b.basis_(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

RationalSubspace canonicalize(const RationalMatrix& m) { return RationalSubspace::span(m); }

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b) {
  require_same_ambient(a, b, "sum");
  return RationalSubspace::span(RationalMatrix::stack(a.basis(), b.basis()));
}

RationalSubspace orthogonal(const RationalSubspace& a) {
  return RationalSubspace::solutions(a.basis());
}

RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b) {
  require_same_ambient(a, b, "intersect");
  RationalMatrix eqs = RationalMatrix::stack(kernel(a.basis()), kernel(b.basis()));
  return RationalSubspace::solutions(eqs);
}

bool contains(const RationalSubspace& a, const RationalSubspace& b) {
  require_same_ambient(a, b, "contains");
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!a.contains_vector(b.basis().row_vector(i))) return false;
  return true;
}

RationalSubspace image(const RationalMatrix& m, const RationalSubspace& a) {
  if (m.cols() != a.ambient_dim()) throw DimensionMismatch("image: shape mismatch");
  return RationalSubspace::span(a.basis() * m.transpose());
}

// ---------------------------------------------------------------------------
// Hermite / Smith

HermiteForm hnf(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < h.cols(); ++j) h(dst, j) += k * h(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += k * u(src, j);
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c))))
          best = i;
      if (best == h.rows()) break;
      h.swap_rows(best, r);
      u.swap_rows(best, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        add_row(i, r, -floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q != 0) add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SmithForm snf(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm f{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols),
              IntegerMatrix::identity(cols), IntegerMatrix::identity(rows), 0};
  auto& s = f.s;

  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < cols; ++j) s(dst, j) += k * s(src, j);
    for (std::size_t j = 0; j < rows; ++j) f.u(dst, j) += k * f.u(src, j);
    for (std::size_t i = 0; i < rows; ++i) f.u_inv(i, src) -= k * f.u_inv(i, dst);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    s.swap_rows(a, b);
    f.u.swap_rows(a, b);
    f.u_inv.swap_cols(a, b);
  };
  auto row_negate = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) s(a, j) = -s(a, j);
    for (std::size_t j = 0; j < rows; ++j) f.u(a, j) = -f.u(a, j);
    for (std::size_t i = 0; i < rows; ++i) f.u_inv(i, a) = -f.u_inv(i, a);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < rows; ++i) s(i, dst) += k * s(i, src);
    for (std::size_t i = 0; i < cols; ++i) f.v(i, dst) += k * f.v(i, src);
    for (std::size_t j = 0; j < cols; ++j) f.v_inv(src, j) -= k * f.v_inv(dst, j);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    s.swap_cols(a, b);
    f.v.swap_cols(a, b);
    f.v_inv.swap_rows(a, b);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest non-zero entry of the trailing block becomes the pivot.
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s(i, j) != 0 && (bi == rows || abs(s(i, j)) < abs(s(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    row_swap(t, bi);
    col_swap(t, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        row_add(i, t, -floor_div(s(i, t), s(t, t)));
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        col_add(j, t, -floor_div(s(t, j), s(t, t)));
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s(i, t) != 0 && abs(s(i, t)) < abs(s(bi2, bj2))) { bi2 = i; bj2 = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(t, j) != 0 && abs(s(t, j)) < abs(s(bi2, bj2))) { bi2 = t; bj2 = j; }
        row_swap(t, bi2);
        col_swap(t, bj2);
        continue;
      }
      // Divisibility chain: fold an offending row into the pivot row.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) { bad = i; break; }
      if (bad == rows) break;
      row_add(t, bad, 1);
    }
    if (s(t, t) < 0) row_negate(t);
  }
  f.rank = t;
  return f;
}

std::vector<Integer> torsion_invariants(const IntegerMatrix& m) {
  auto f = snf(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.s(i, i) > 1) out.push_back(f.s(i, i));
  return out;
}

IntegerLattice::IntegerLattice(std::size_t ambient_dim)
    : n_(ambient_dim), basis_(0, ambient_dim) {}

IntegerLattice IntegerLattice::generated_by(const IntegerMatrix& rows) {
  auto h = hnf(rows).h;
  std::size_t r = 0;
  while (r < h.rows() &&
         std::any_of(h.row(r).begin(), h.row(r).end(), [](const Integer& z) { return z != 0; }))
    ++r;
  IntegerLattice l(rows.cols());
  l.basis_ = h.row_block(0, r);
  return l;
}

bool IntegerLattice::contains(const RationalVector& v) const {
  if (v.size() != n_) throw DimensionMismatch("IntegerLattice::contains: length mismatch");
  if (!std::all_of(v.begin(), v.end(), is_integral)) return false;
  std::vector<Integer> r(n_);
  for (std::size_t j = 0; j < n_; ++j) r[j] = v[j].get_num();
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (basis_(i, p) == 0) ++p;
    for (; col < p; ++col)
      if (r[col] != 0) return false;
    if (r[p] % basis_(i, p) != 0) return false;
    Integer q = r[p] / basis_(i, p);
    for (std::size_t j = p; j < n_; ++j) r[j] -= q * basis_(i, j);
  }
  return std::all_of(r.begin(), r.end(), [](const Integer& z) { return z == 0; });
}

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer d = common_denominator(m.row(i));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational x = m(i, j) * d;
      out(i, j) = x.get_num();
    }
  }
  return out;
}

IntegerLattice saturated_lattice(const RationalSubspace& v) {
  if (v.is_zero()) return IntegerLattice(v.ambient_dim());
  auto f = snf(clear_denominators(v.basis()));
  return IntegerLattice::generated_by(f.v_inv.row_block(0, f.rank));
}

namespace {

struct OrthogonalData {
  IntegerMatrix w;          // rows: HNF basis of L^perp ∩ Z^n
  IntegerMatrix right_inv;  // n x k with w * right_inv = I
};

OrthogonalData orthogonal_data(const RationalSubspace& l) {
  OrthogonalData d;
  d.w = saturated_lattice(orthogonal(l)).basis();
  const std::size_t k = d.w.rows(), n = l.ambient_dim();
  d.right_inv = IntegerMatrix(n, k, Integer(0));
  if (k == 0) return d;
  auto f = snf(d.w);
  for (std::size_t i = 0; i < k; ++i)
    if (f.s(i, i) != 1)
      throw std::logic_error("orthogonal lattice is not saturated");
  // W = u^-1 [I 0] v^-1, so R = v [I;0] u.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Integer acc = 0;
      for (std::size_t t = 0; t < k; ++t) acc += f.v(i, t) * f.u(t, j);
      d.right_inv(i, j) = acc;
    }
  return d;
}

void require_length(const RationalVector& lambda, const RationalSubspace& l,
                    const char* op) {
  if (lambda.size() != l.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": vector length " +
                            std::to_string(lambda.size()) + " vs ambient " +
                            std::to_string(l.ambient_dim()));
}

}  // namespace

bool lattice_coset_membership(const RationalVector& lambda, const RationalSubspace& l) {
  require_length(lambda, l, "lattice_coset_membership");
  IntegerMatrix w = saturated_lattice(orthogonal(l)).basis();
  if (w.rows() == 0) return true;
  auto image_lattice = IntegerLattice::generated_by(w.transpose());
  return image_lattice.contains(to_rational(w) * lambda);
}

RationalVector coset_representative(const RationalVector& lambda,
                                    const RationalSubspace& l) {
  require_length(lambda, l, "coset_representative");
  auto d = orthogonal_data(l);
  RationalVector y = to_rational(d.w) * lambda;
  for (auto& x : y) x = frac(x);
  RationalVector rep = to_rational(d.right_inv) * y;
  for (auto& x : rep) x = frac(x);
  return rep;
}

IntegerVector integer_part_in_coset(const RationalVector& lambda,
                                    const RationalSubspace& l) {
  require_length(lambda, l, "integer_part_in_coset");
  auto d = orthogonal_data(l);
  RationalVector y = to_rational(d.w) * lambda;
  if (!std::all_of(y.begin(), y.end(), is_integral))
    throw PreconditionError("vector does not lie in L + Z^n");
  RationalVector z = to_rational(d.right_inv) * y;
  IntegerVector out;
  for (auto& x : z) out.push_back(x.get_num());
  return out;
}

// ---------------------------------------------------------------------------
// Plücker / Schubert

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t subset_index(std::size_t n, const std::vector<std::size_t>& subset) {
  const std::size_t r = subset.size();
  Integer idx = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = start; j < subset[i]; ++j) idx += binomial(n - 1 - j, r - 1 - i);
    start = subset[i] + 1;
  }
  return idx.get_ui();
}

namespace {

Rational minor(const RationalMatrix& m, const std::vector<std::size_t>& cols) {
  RationalMatrix sub(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(i, cols[j]);
  return determinant(std::move(sub));
}

void normalize_leading(RationalVector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
  if (it == v.end()) return;
  Rational lead = *it;
  for (auto& x : v) x /= lead;
}

// p_seq for an unsorted index sequence: 0 on repeats, else signed coordinate.
Rational signed_coord(const PluckerVector& p, std::vector<std::size_t> seq) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b]) return 0;
      if (seq[a] > seq[b]) ++inversions;
    }
  std::sort(seq.begin(), seq.end());
  return inversions % 2 == 0 ? p.at(seq) : Rational(-p.at(seq));
}

}  // namespace

PluckerVector plucker(const RationalSubspace& p) {
  if (p.is_zero()) throw PreconditionError("plucker: zero subspace");
  PluckerVector v{p.dim(), p.ambient_dim(), {}};
  for (const auto& k : subsets(v.n, v.r)) v.coords.push_back(minor(p.basis(), k));
  normalize_leading(v.coords);
  return v;
}

std::vector<Rational> plucker_relations(const PluckerVector& p) {
  std::vector<Rational> out;
  if (p.r == 0 || p.r >= p.n) return out;
  for (const auto& i : subsets(p.n, p.r - 1))
    for (const auto& j : subsets(p.n, p.r + 1)) {
      Rational acc = 0;
      for (std::size_t k = 0; k < j.size(); ++k) {
        auto left = i;
        left.push_back(j[k]);
        auto right = j;
        right.erase(right.begin() + static_cast<std::ptrdiff_t>(k));
        Rational term = signed_coord(p, left) * signed_coord(p, right);
        acc += (k % 2 == 0) ? term : Rational(-term);
      }
      out.push_back(acc);
    }
  return out;
}

Rational PluckerForm::evaluate(const PluckerVector& p) const {
  if (p.r != r || p.n != n) throw DimensionMismatch("PluckerForm::evaluate: shape mismatch");
  return dot(coeffs, p.coords);
}

std::vector<PluckerForm> schubert_equations(const RationalSubspace& l, std::size_t r) {
  const std::size_t n = l.ambient_dim(), s = l.dim();
  if (r < 1 || r > n)
    throw PreconditionError("schubert_equations: r=" + std::to_string(r) +
                            " outside [1," + std::to_string(n) + "]");
  std::vector<PluckerForm> forms;
  if (s + r > n) return forms;
  // Rows of P sit at 1-based positions s+1..s+r of the stacked matrix.
  const std::size_t row_sum = r * s + r * (r + 1) / 2;
  for (const auto& j : subsets(n, s + r)) {
    PluckerForm form{r, n, RationalVector(binomial(n, r).get_ui(), Rational(0))};
    for (const auto& pos : subsets(s + r, r)) {
      std::vector<std::size_t> k, rest;
      std::size_t col_sum = 0;
      for (std::size_t t = 0, q = 0; t < j.size(); ++t) {
        if (q < pos.size() && pos[q] == t) {
          k.push_back(j[t]);
          col_sum += t + 1;
          ++q;
        } else {
          rest.push_back(j[t]);
        }
      }
      Rational lminor = s == 0 ? Rational(1) : minor(l.basis(), rest);
      if (is_zero(lminor)) continue;
      if ((row_sum + col_sum) % 2 == 1) lminor = -lminor;
      form.coeffs[subset_index(n, k)] += lminor;
    }
    if (std::all_of(form.coeffs.begin(), form.coeffs.end(), is_zero)) continue;
    normalize_leading(form.coeffs);
    if (std::find(forms.begin(), forms.end(), form) == forms.end())
      forms.push_back(std::move(form));
  }
  return forms;
}

bool sigma_membership(const RationalSubspace& p, const RationalSubspace& l) {
  require_same_ambient(p, l, "sigma_membership");
  return !intersect(p, l).is_zero();
}

}  // namespace dfinv
