#pragma once

// Seeded random inputs for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "dfinv/fox.hpp"
#include "dfinv/laurent.hpp"
#include "dfinv/qlinalg.hpp"
#include "dfinv/torus.hpp"

namespace dfinv::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(integer(0, static_cast<long>(size) - 1)); }

  /// p/q with 1 <= q <= max_den and |p/q| <= range.
  Rational rational(long max_den, long range = 1);
  RationalVector rational_vector(std::size_t n, long max_den, long range = 1);
  IntegerMatrix integer_matrix(std::size_t rows, std::size_t cols, long lo, long hi);

  /// A random subspace of dimension exactly k, spanned by small integer vectors.
  RationalSubspace subspace(std::size_t n, std::size_t k, long entry = 2);
  TorsionCharacter character(std::size_t n, long max_den);
  /// Random Laurent polynomial with up to `terms` terms.
  LaurentPoly laurent(std::size_t n, std::size_t terms, long exp_range, long coeff_range);
  /// Freely reduced random word on q generators with `syllables` draws.
  FreeWord word(std::size_t q, std::size_t syllables, long max_exp = 2);
  Presentation presentation(std::size_t q, std::size_t m, std::size_t syllables);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dfinv::testing
