#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

namespace dfinv::testing {

std::optional<bool> brute_lattice_membership(const RationalVector& lambda, const RationalSubspace& l,
                                             std::size_t budget) {
  const std::size_t n = l.ambient_dim(), k = l.dim();
  const RationalMatrix& r = l.basis();
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t p = 0;
    while (is_zero(r(i, p))) ++p;
    pivots.push_back(p);
  }
  Integer m = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), r(i, j).get_den_mpz_t());
  double box = std::pow(m.get_d(), static_cast<double>(k));
  if (box > static_cast<double>(budget)) return std::nullopt;

  const long mm = m.get_si();
  std::vector<long> z(k, 0);
  for (;;) {
    RationalVector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = lambda[pivots[i]] - z[i];
    bool ok = true;
    for (std::size_t f = 0; f < n && ok; ++f) {
      if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
      Rational v = lambda[f];
      for (std::size_t i = 0; i < k; ++i) v -= c[i] * r(i, f);
      ok = v.get_den() == 1;
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < k && ++z[i] == mm) z[i++] = 0;
    if (i == k) return false;
  }
}

std::vector<std::vector<std::size_t>> all_set_partitions(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0) return {{}};
  std::vector<std::size_t> a(k, 0);
  for (;;) {
    out.push_back(a);
    // Next restricted growth string.
    std::size_t i = k - 1;
    for (;;) {
      std::size_t max_prefix = 0;
      for (std::size_t j = 0; j < i; ++j) max_prefix = std::max(max_prefix, a[j]);
      if (i > 0 && a[i] <= max_prefix) {
        ++a[i];
        for (std::size_t j = i + 1; j < k; ++j) a[j] = 0;
        break;
      }
      if (i == 0) return out;
      --i;
    }
  }
}

SubspaceArrangement tangent_cone_by_exhaustion(const LaurentPoly& f) {
  std::vector<Exponent> exps;
  std::vector<Rational> coeffs;
  for (const auto& [a, c] : f.terms()) {
    exps.push_back(a);
    coeffs.push_back(c);
  }
  const std::size_t n = f.num_vars(), k = exps.size();
  SubspaceArrangement out(n);
  for (const auto& labels : all_set_partitions(k)) {
    std::size_t blocks = k ? *std::max_element(labels.begin(), labels.end()) + 1 : 0;
    std::vector<Rational> sums(blocks);
    std::vector<long> first(blocks, -1);
    std::vector<RationalVector> eqs;
    for (std::size_t i = 0; i < k; ++i) {
      sums[labels[i]] += coeffs[i];
      if (first[labels[i]] < 0) {
        first[labels[i]] = static_cast<long>(i);
        continue;
      }
      RationalVector d(n);
      for (std::size_t v = 0; v < n; ++v) d[v] = exps[i][v] - exps[first[labels[i]]][v];
      eqs.push_back(d);
    }
    if (!std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return sgn(s) == 0; })) continue;
    out.add(eqs.empty() ? RationalSubspace::full(n)
                        : RationalSubspace::solutions(RationalMatrix::from_rows(eqs, n)));
  }
  return out;
}

CyclotomicNumber leibniz_determinant(const Matrix<CyclotomicNumber>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CyclotomicNumber total(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    CyclotomicNumber term(1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  choose(n, k, 0, cur, out);
  return out;
}

}  // namespace

bool all_minors_vanish(const Matrix<CyclotomicNumber>& m, std::size_t k) {
  if (k == 0) return false;
  if (k > m.rows() || k > m.cols()) return true;
  for (const auto& rows : combinations(m.rows(), k))
    for (const auto& cols : combinations(m.cols(), k)) {
      Matrix<CyclotomicNumber> sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      if (!leibniz_determinant(sub).is_zero()) return false;
    }
  return true;
}

bool depth1_by_minors(const AlexanderMatrix& a, const TorsionCharacter& rho) {
  const std::size_t q = a.num_generators();
  Matrix<CyclotomicNumber> values(a.entries.rows(), q);
  for (std::size_t i = 0; i < values.rows(); ++i)
    for (std::size_t j = 0; j < q; ++j) values(i, j) = evaluate_at_character(a.entries(i, j), rho);
  bool trivial_on_generators = true;
  for (std::size_t j = 0; j < q; ++j)
    if (!evaluate_at_character(a.boundary1(j), rho).is_zero()) trivial_on_generators = false;
  // rank ∂₂ ≤ q − 1 − rank ∂₁  ⟺  all minors of size q − rank ∂₁ vanish.
  std::size_t size = trivial_on_generators ? q : q - 1;
  return all_minors_vanish(values, size);
}

bool meets_by_rank(const RationalSubspace& p, const RationalSubspace& l) {
  return rank(RationalMatrix::stack(p.basis(), l.basis())) < p.dim() + l.dim();
}

std::complex<double> evaluate_numerically(const LaurentPoly& f, const RationalVector& lambda) {
  std::complex<double> acc = 0;
  for (const auto& [a, c] : f.terms()) {
    double angle = 0;
    for (std::size_t i = 0; i < a.size(); ++i) angle += static_cast<double>(a[i]) * lambda[i].get_d();
    acc += c.get_d() * std::polar(1.0, 2 * std::numbers::pi * angle);
  }
  return acc;
}

}  // namespace dfinv::testing
