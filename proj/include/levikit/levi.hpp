#pragma once

#include <string>
#include <vector>

#include "levikit/lie_algebra.hpp"
#include "levikit/structure.hpp"

namespace levikit {

struct LeviPair {
  Subspace b;  ///< semisimple subalgebra complementing the radical
  Subspace r;  ///< solvable radical
};

/// Equivariant Levi subalgebra, built by induction on the radical as in the classical proof
/// with every section and cochain averaged. Throws RadicalNotInvariant or NoAveragingRoute.
LeviPair levi_decompose(const LieAlgebra& l, const Structure& s = {});

/// Invariant ideals B_1 + ... + B_s = B with no proper nonzero invariant ideal inside any B_i.
std::vector<Subspace> semisimple_split(const LieAlgebra& b, const Structure& s = {});
/// The same for a semisimple subalgebra b of l carrying the restriction of s; subspaces of l.
std::vector<Subspace> semisimple_split(const LieAlgebra& l, const Subspace& b, const Structure& s);

/// Minimal nonzero subspace of F^dim invariant under every generator, found by the MeatAxe.
Subspace minimal_invariant_subspace(const std::vector<Matrix>& generators, size_t dim);

/// V as a direct sum of invariant L-submodules, each without proper nonzero invariant submodules.
std::vector<Subspace> weyl_decompose(const HLModule& m);

/// Invariant S with R = S + N and [B, S] = 0.
Subspace radical_complement(const LieAlgebra& l, const Subspace& b, const Subspace& r, const Subspace& n,
                            const Structure& s = {});

struct Check {
  std::string name;
  bool pass = false;
};

struct LeviDecomposition {
  Subspace b, r, s, n;
  std::vector<Subspace> components;
  std::vector<Check> report;
};

/// L = B + S + N with every piece invariant and [B, S] = 0. Errors carry the failing stage.
LeviDecomposition full_decomposition(const LieAlgebra& l, const Structure& s = {});

/// Re-derives every clause of a decomposition independently; never throws on a failed clause.
std::vector<Check> verify_decomposition(const LieAlgebra& l, const Structure& s, const LeviDecomposition& d);

struct ObstructionResult {
  bool certificate = false;  ///< false means no obstruction was found; existence stays undecided
  Subspace image;            ///< image of phi - id
  Subspace fixed;            ///< kernel of phi - id
  Subspace radical;
};

/// Im(phi - id) and Fix(phi) inside a proper radical R rule out any nonzero phi-invariant
/// subspace meeting R trivially, hence any phi-invariant Levi subalgebra.
ObstructionResult automorphism_levi_obstruction(const LieAlgebra& l, const CyclicAction& phi);

}  // namespace levikit
