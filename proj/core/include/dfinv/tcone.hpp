#pragma once

// Exponential tangent cones: admissible partitions of Laurent supports and
// arrangements of rational subspaces.

#include <cstddef>
#include <vector>

#include "dfinv/laurent.hpp"
#include "dfinv/qlinalg.hpp"
#include "dfinv/tori.hpp"

namespace dfinv {

inline constexpr std::size_t kDefaultMaxSupport = 16;

/// Support exponents of f, in the order of f.terms().
std::vector<Exponent> support(const LaurentPoly& f);

/// A partition of the support of a polynomial; parts hold indices into
/// `support(f)`, each part sorted, parts ordered by their first index.
struct AdmissiblePartition {
  std::vector<std::vector<std::size_t>> parts;
  friend bool operator==(const AdmissiblePartition&, const AdmissiblePartition&) = default;
};

/// True iff every part of `p` has vanishing coefficient sum and the parts
/// partition the support of f.
bool is_admissible(const AdmissiblePartition& p, const LaurentPoly& f);

/// {x : (a − b)·x = 0 whenever a, b lie in the same part}.
RationalSubspace partition_subspace(const AdmissiblePartition& p, const LaurentPoly& f);

/// Admissible partitions of f whose subspace is maximal among all admissible
/// partitions.  The search only builds partitions into minimal zero-sum
/// blocks: splitting a block never shrinks the subspace, so every maximal
/// subspace is reached this way.  Returns nothing when f(1) ≠ 0.  Throws
/// PreconditionError for f = 0 and GuardExceeded when the support is larger
/// than `max_support`.
std::vector<AdmissiblePartition> admissible_partitions_maximal(
    const LaurentPoly& f, std::size_t max_support = kDefaultMaxSupport);

/// A finite union of rational subspaces of Q^n with no member inside
/// another.  The empty arrangement (the empty set) differs from {{0}}.
class SubspaceArrangement {
 public:
  explicit SubspaceArrangement(std::size_t ambient_dim = 0) : n_(ambient_dim) {}
  SubspaceArrangement(std::size_t ambient_dim, const std::vector<RationalSubspace>& members);

  std::size_t ambient_dim() const noexcept { return n_; }
  const std::vector<RationalSubspace>& subspaces() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }

  void add(const RationalSubspace& l);
  /// Membership of a vector in the union.
  bool contains_vector(const RationalVector& v) const;

  friend bool operator==(const SubspaceArrangement&, const SubspaceArrangement&) = default;

 private:
  std::size_t n_;
  std::vector<RationalSubspace> members_;
};

SubspaceArrangement unite(const SubspaceArrangement& a, const SubspaceArrangement& b);
/// Pairwise intersections of members.
SubspaceArrangement intersect(const SubspaceArrangement& a, const SubspaceArrangement& b);

/// τ₁ of the common zero set of the polynomials.
SubspaceArrangement tangent_cone_polys(const std::vector<LaurentPoly>& polys,
                                       std::size_t max_support = kDefaultMaxSupport);

/// τ₁ of a described variety: the subspaces of the components through 1.
SubspaceArrangement tangent_cone_description(const VarietyDescription& w);

}  // namespace dfinv
