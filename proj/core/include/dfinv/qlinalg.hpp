#pragma once

// Exact linear algebra over Q and Z: canonical subspaces, Hermite and Smith
// normal forms, lattice cosets, Plücker coordinates and Schubert incidence.

#include <cstddef>
#include <vector>

#include "dfinv/matrix.hpp"
#include "dfinv/rational.hpp"

namespace dfinv {

/// Reduced row-echelon form of `m` with zero rows dropped.
RationalMatrix rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Rows form a basis of the right kernel {x : m x = 0}, in RREF.
RationalMatrix kernel(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

/// A linear subspace of Q^n, stored by its unique RREF basis.  Two subspaces
/// are equal iff their stored bases are identical.
class RationalSubspace {
 public:
  /// The zero subspace of Q^n.
  explicit RationalSubspace(std::size_t ambient_dim = 0);

  /// Row space of `rows` (any spanning set).
  static RationalSubspace span(const RationalMatrix& rows);
  static RationalSubspace span(std::size_t ambient_dim,
                               const std::vector<RationalVector>& rows);
  static RationalSubspace full(std::size_t ambient_dim);
  /// Common zero set of the given linear forms.
  static RationalSubspace solutions(const RationalMatrix& equations);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == n_; }
  const RationalMatrix& basis() const noexcept { return basis_; }

  bool contains_vector(const RationalVector& v) const;

  friend bool operator==(const RationalSubspace&, const RationalSubspace&) = default;
  /// Total order: by dimension, then lexicographically by basis entries.
  friend bool operator<(const RationalSubspace& a, const RationalSubspace& b);

 private:
  std::size_t n_;
  RationalMatrix basis_;
};

/// Returns the canonical subspace spanned by the rows of `m`.
RationalSubspace canonicalize(const RationalMatrix& m);

RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b);
RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b);
/// True iff b ⊆ a.
bool contains(const RationalSubspace& a, const RationalSubspace& b);
/// Orthogonal complement with respect to the standard dot product.
RationalSubspace orthogonal(const RationalSubspace& a);
/// Image of `a` under x ↦ m·x (m has a.ambient_dim() columns).
RationalSubspace image(const RationalMatrix& m, const RationalSubspace& a);

// ---------------------------------------------------------------------------
// Integer normal forms

struct HermiteForm {
  IntegerMatrix h;  ///< row HNF, zero rows last
  IntegerMatrix u;  ///< unimodular, h = u * m
};

/// Row Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot).
HermiteForm hnf(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix s;      ///< diagonal with s_ii | s_(i+1)(i+1), non-negative
  IntegerMatrix u;      ///< unimodular, s = u * m * v
  IntegerMatrix v;      ///< unimodular
  IntegerMatrix v_inv;  ///< inverse of v
  IntegerMatrix u_inv;  ///< inverse of u
  std::size_t rank = 0;
};

SmithForm snf(const IntegerMatrix& m);

/// Non-trivial invariant factors (> 1) of the cokernel Z^cols / rowspace(m),
/// followed by nothing for the free part.
std::vector<Integer> torsion_invariants(const IntegerMatrix& m);

/// A sublattice of Z^n stored by the non-zero rows of its HNF.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_dim = 0);
  static IntegerLattice generated_by(const IntegerMatrix& rows);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntegerMatrix& basis() const noexcept { return basis_; }

  /// Exact membership by back-substitution along the HNF pivots.
  bool contains(const RationalVector& v) const;

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

 private:
  std::size_t n_;
  IntegerMatrix basis_;
};

/// Clears denominators row by row (each row scaled by its own lcm).
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// The saturated lattice V ∩ Z^n of a rational subspace V.
IntegerLattice saturated_lattice(const RationalSubspace& v);

/// True iff λ ∈ L + Z^n.  Decided through the saturated orthogonal lattice
/// W = L^⊥ ∩ Z^n: λ is in the coset iff W·λ lies in the image lattice W·Z^n.
bool lattice_coset_membership(const RationalVector& lambda,
                              const RationalSubspace& l);

/// Canonical representative in [0,1)^n of the class of λ in Q^n / (L + Z^n).
RationalVector coset_representative(const RationalVector& lambda,
                                    const RationalSubspace& l);

/// Some integer z with λ - z ∈ L, when λ ∈ L + Z^n; throws otherwise.
IntegerVector integer_part_in_coset(const RationalVector& lambda,
                                    const RationalSubspace& l);

// ---------------------------------------------------------------------------
// Plücker coordinates and Schubert incidence

/// Sorted r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r);

/// Index of a sorted subset in the lexicographic order of `subsets(n, r)`.
std::size_t subset_index(std::size_t n, const std::vector<std::size_t>& subset);

struct PluckerVector {
  std::size_t r = 0;
  std::size_t n = 0;
  /// Indexed like `subsets(n, r)`; first non-zero entry equals 1.
  RationalVector coords;

  const Rational& at(const std::vector<std::size_t>& subset) const {
    return coords[subset_index(n, subset)];
  }
  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

PluckerVector plucker(const RationalSubspace& p);

/// Grassmann–Plücker quadratic relations evaluated at `p`; all zero iff `p`
/// is decomposable.  Exposed for verification.
std::vector<Rational> plucker_relations(const PluckerVector& p);

/// A linear form Σ coeffs[K]·p_K on Plücker coordinates of r-planes in Q^n.
struct PluckerForm {
  std::size_t r = 0;
  std::size_t n = 0;
  RationalVector coeffs;

  Rational evaluate(const PluckerVector& p) const;
  friend bool operator==(const PluckerForm&, const PluckerForm&) = default;
};

/// Linear equations cutting out σ_r(L) = {P : P ∩ L ≠ 0} in the Plücker
/// embedding: the Laplace expansion, along the rows of P, of every maximal
/// minor of the stacked matrix (L over P).  Identically zero forms are
/// dropped; each form is normalized so its first non-zero coefficient is 1.
/// Empty when dim L + r > n (every r-plane meets L).
std::vector<PluckerForm> schubert_equations(const RationalSubspace& l,
                                            std::size_t r);

/// True iff P ∩ L ≠ {0}.
bool sigma_membership(const RationalSubspace& p, const RationalSubspace& l);

}  // namespace dfinv
