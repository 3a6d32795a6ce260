#pragma once

// Dwyer–Fried sets Ω^i_r: membership of rational r-planes, closed forms,
// Schubert-type upper bounds and non-openness witnesses.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dfinv/qlinalg.hpp"
#include "dfinv/tcone.hpp"
#include "dfinv/tori.hpp"

namespace dfinv {

enum class BlockReason {
  sigma_rho,  ///< translated component: P ∈ σ_r(L, ρ)
  dim_ge_1    ///< component through 1 meeting exp(P ⊗ C) in positive dimension
};

std::string to_string(BlockReason r);

struct Blocker {
  TranslatedTorus component;
  BlockReason reason = BlockReason::sigma_rho;
};

struct OmegaVerdict {
  bool member = true;
  std::vector<Blocker> blockers;
};

/// Decides P ∈ Ω for the variety W: P is blocked by each positive-dimensional
/// component meeting exp(P ⊗ C) in infinitely many points.  For lines the
/// verdict is cross-checked against the tangent-cone criterion.
OmegaVerdict omega_membership(const VarietyDescription& w, const RationalSubspace& p);

/// The subspaces whose projectivizations are removed from QP^{n-1} to get
/// the lines in Ω (zero members contribute nothing and are dropped).
std::vector<RationalSubspace> omega1_r1_description(const SubspaceArrangement& c);

/// True iff the line spanned by `v` avoids every member of `c`.
bool omega1_r1_member(const SubspaceArrangement& c, const RationalVector& v);

struct Codim1ClosedForm {
  enum class Shape { all, grassmannian, empty };
  Shape shape = Shape::all;
  std::size_t r = 0;
  /// The hyperplane L when shape is `grassmannian`.
  RationalSubspace l;

  bool contains(const RationalSubspace& p) const;
};

/// Ω_r for W = (finite set) ∪ (translates ρ_α T of one codimension-one
/// subtorus T with every ρ_α ∉ T): everything for r = 1, Grass_r(L) for
/// 1 < r < n, nothing for r ≥ n.  Throws PreconditionError otherwise.
Codim1ClosedForm omega_codim1_closed_form(const VarietyDescription& w, std::size_t r);

/// True iff P avoids σ_r(L) for every L in `c`.
bool schubert_upper_bound(const SubspaceArrangement& c, const RationalSubspace& p);

struct WitnessStep {
  long q = 0;
  RationalSubspace plane;
  /// Max-norm distance between Plücker vectors, both scaled so the
  /// coordinate where P's first non-zero coordinate sits equals 1.  Empty if
  /// that coordinate of P_q vanishes.
  std::optional<Rational> plucker_distance;
  OmegaVerdict verdict;
};

struct NonOpenWitness {
  RationalSubspace p;
  OmegaVerdict p_verdict;
  std::vector<WitnessStep> family;
};

/// Builds P = span{v1..vr} inside the subspace L of component `beta` and the
/// planes P_q = span{v1..v_{r-1}, v_r + λ_β/q} converging to it; P lies in Ω
/// while every P_q is blocked.  The hypotheses are checked first and a
/// PreconditionError names the failing one: "(1)" component beta is not a
/// positive-dimensional subtorus of dimension ≥ r, "(1.5)" some component
/// parallel to L passes through 1, "(2)" some other component meets L.
NonOpenWitness nonopen_witness(const VarietyDescription& w, std::size_t beta, std::size_t r,
                               const std::vector<long>& qs);

/// True iff the variety is finite, i.e. Ω_n is non-empty.
bool maximal_cover_finiteness(const VarietyDescription& w);

struct FpkReport {
  std::size_t k = 0;
  std::size_t r = 0;
  bool certified_empty = false;
  std::optional<TranslatedTorus> certificate;
  std::string message;
};

/// Certifies Ω^k_r = ∅ through a component through 1 whose subspace has
/// codimension at most r − 1, and states the resulting finiteness obstruction.
FpkReport fpk_report(const GradedDescription& w, std::size_t k, std::size_t r);

}  // namespace dfinv
