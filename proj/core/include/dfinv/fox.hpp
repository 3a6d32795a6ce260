#pragma once

// Finitely presented groups and Fox free differential calculus.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dfinv/laurent.hpp"
#include "dfinv/matrix.hpp"
#include "dfinv/torus.hpp"

namespace dfinv {

/// One syllable x_gen^exp of a free word; `gen` is 0-based, exp ≠ 0.
struct Letter {
  std::size_t gen = 0;
  long exp = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in syllable form: adjacent syllables always have
/// distinct generators.
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(std::size_t gen, long exp = 1);
  static FreeWord from_letters(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  /// Appends one syllable, merging and cancelling as needed.
  void append(Letter l);

  FreeWord inverse() const;
  FreeWord pow(long k) const;

  friend FreeWord operator*(FreeWord a, const FreeWord& b) {
    for (const Letter& l : b.letters_) a.append(l);
    return a;
  }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// u v u⁻¹ v⁻¹.
FreeWord commutator(const FreeWord& u, const FreeWord& v);
/// w⁻¹ u w.
FreeWord conjugate(const FreeWord& u, const FreeWord& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  std::size_t num_generators() const noexcept { return generators.size(); }
};

/// Parses `<g1,g2,... | w1, w2, ...>`.  Words are juxtaposed atoms, with an
/// optional `*` between them.  An atom is a generator name, `[u,v]`, `(w)` or
/// `1`, followed by any number of `^k` (power) or `^a` (conjugation by the
/// atom a).  A relator may be written as an equation `u = v`, meaning u v⁻¹.
Presentation parse_presentation(std::string_view text);

std::string to_string(const FreeWord& w, const Presentation& p);
std::string to_string(const Presentation& p);

/// The map α from generators onto G_ab / torsion = Z^n.
struct Abelianization {
  std::size_t free_rank = 0;
  /// q × n; row j is α(x_j).
  IntegerMatrix projection;
  /// Invariant factors > 1 of the torsion subgroup.
  std::vector<Integer> torsion;

  Exponent image(std::size_t gen) const;
  Exponent image(const FreeWord& w) const;
};

Abelianization abelianize(const Presentation& p);

/// α(∂w/∂x_j) with the left convention ∂(uv) = ∂u + u·∂v.
LaurentPoly fox_derivative_abelianized(const FreeWord& w, std::size_t j,
                                       const Abelianization& alpha);

struct AlexanderMatrix {
  Abelianization alpha;
  /// m × q, entry (i, j) = α(∂r_i/∂x_j).
  Matrix<LaurentPoly> entries;

  std::size_t num_vars() const noexcept { return alpha.free_rank; }
  std::size_t num_generators() const noexcept { return entries.cols(); }
  /// t^{α(x_j)} − 1, the entries of the first boundary map.
  LaurentPoly boundary1(std::size_t j) const;
};

AlexanderMatrix alexander_matrix(const Presentation& p);

/// Exact rank of the matrix at ρ = exp(2πiλ).
std::size_t rank_at_character(const Matrix<LaurentPoly>& m, const TorsionCharacter& lambda);

/// Rank at a generic point of ρT.
std::size_t generic_rank_on_torus(const Matrix<LaurentPoly>& m, const TranslatedTorus& torus);

/// ρ ∈ W¹(G): rank ∂₂(ρ) + rank ∂₁(ρ) ≤ q − 1.
bool depth1_membership(const AlexanderMatrix& a, const TorsionCharacter& lambda);
bool depth1_membership(const Presentation& p, const TorsionCharacter& lambda);

/// Same rank inequality at a generic point of ρT.  Because W¹ is closed, a
/// generic point of the irreducible set ρT lies in W¹ iff all of ρT does.
bool contains_translated_torus(const AlexanderMatrix& a, const TranslatedTorus& torus);
bool contains_translated_torus(const Presentation& p, const TranslatedTorus& torus);

}  // namespace dfinv
