#pragma once

#include <vector>

#include "levikit/lie_algebra.hpp"
#include "levikit/structure.hpp"

/// Small named algebras and structures used by fixtures, tests and the CLI's builders.
namespace levikit::catalog {

/// Lie algebra spanned by the given square matrices under the commutator; they must
/// be linearly independent and closed under brackets.
LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::vector<std::string> labels = {});

/// Abelian ideal V extended by b acting through rep (basis of b, then basis of V).
LieAlgebra semidirect_product(const LieAlgebra& b, const std::vector<Matrix>& rep, std::vector<std::string> labels = {});

/// Basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra sl2();
/// The natural representation of sl2 on F^2 in the basis (e, h, f).
std::vector<Matrix> sl2_natural();
/// Basis E11, E12, E21, E22.
LieAlgebra gl2();
/// [e1, e2] = e2.
LieAlgebra l_aff();
/// [x, y] = z.
LieAlgebra heisenberg();
/// sl2 + span{t} + F^2 with sl2 acting naturally on F^2 and t acting as the identity.
/// Basis (e, h, f, t, v1, v2).
LieAlgebra l7();
/// sl2 + F^2 with the natural action. Basis (e, h, f, v1, v2).
LieAlgebra sl2_natural_semidirect();

/// sl2 + V with V an abelian ideal isomorphic to the adjoint module. Basis (e, h, f, Ve, Vh, Vf).
LieAlgebra l6();
/// Sweedler's Hopf algebra acting on l6: g(a + phi b) = a - phi b, x(a + phi b) = b.
ModuleStructure sweedler_action_l6();

/// Block-diagonal gl2 + gl2 inside gl4 with basis E11, E12, E21, E22, E33, E34, E43, E44.
LieAlgebra s3_block();
/// The S3-grading of s3_block: diagonal in degree e, first block off-diagonal in (12), second in (23).
Grading s3_block_grading();

/// {(C, D) : C in sl_m, D in M_m} as upper block matrices in sl_2m, basis C then D.
LieAlgebra hnoninv(size_t m = 2);
/// phi(C, D) = (C, C + D).
CyclicAction hnoninv_automorphism(size_t m = 2);

/// sl2 + sl2 in the basis (x, x) for x = e, h, f followed by (x, -x).
LieAlgebra sl2_pair_swap();
/// Z2-grading of sl2_pair_swap: the diagonal copy even, the antidiagonal copy odd.
Grading sl2_pair_swap_grading();

/// A grading with every basis vector in the identity of the trivial group.
Grading trivial_grading(size_t dim);

}  // namespace levikit::catalog
