#pragma once

#include <random>

#include "levikit/lie_algebra.hpp"
#include "levikit/structure.hpp"

namespace levikit::testing {

enum class GradingKind { None, Z, Z2, S3 };

/// A Lie algebra B0 ⋉ R0 with B0 a sum of sl2 copies and R0 solvable, in a scrambled basis.
struct RandomLevi {
  LieAlgebra algebra;
  size_t levi_dim = 0;       ///< dim B0
  Subspace radical;          ///< R0 in the scrambled basis
  Subspace nilradical;       ///< [R0, R0] + module part + ... : the nilradical of the construction
  Structure structure;       ///< grading when requested (monostate otherwise)
};

struct RandomLeviOptions {
  size_t max_sl2 = 2;
  size_t max_radical = 6;
  GradingKind grading = GradingKind::None;
};

RandomLevi random_levi(std::mt19937_64& rng, const RandomLeviOptions& options);

/// Random invertible matrix with small integer entries.
Matrix random_invertible(std::mt19937_64& rng, size_t n, int range = 2);
/// Random matrix with small integer entries.
Matrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int range = 3);

}  // namespace levikit::testing
