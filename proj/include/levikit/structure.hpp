#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "levikit/group.hpp"
#include "levikit/hopf.hpp"
#include "levikit/lie_algebra.hpp"
#include "levikit/subspace.hpp"

namespace levikit {

/// Degree of every basis vector of a homogeneous basis.
struct Grading {
  std::shared_ptr<const GroupBackend> group;
  std::vector<GroupBackend::Element> degrees;
};

/// Right H-comodule structure rho(e_i) = sum_{j,k} rho(i,j,k) e_j (x) h_k.
struct ComoduleStructure {
  std::shared_ptr<const HopfAlgebra> hopf;
  size_t dim = 0;
  std::vector<Rational> rho;

  const Rational& at(size_t i, size_t j, size_t k) const { return rho[(i * dim + j) * hopf->dim() + k]; }
  Rational& at(size_t i, size_t j, size_t k) { return rho[(i * dim + j) * hopf->dim() + k]; }
  /// Coefficient operator Omega_k: e_i -> sum_j rho(i,j,k) e_j.
  Matrix coefficient_map(size_t k) const;
};

/// Left H-module structure; act[i] is the matrix of v -> h_i . v.
struct ModuleStructure {
  std::shared_ptr<const HopfAlgebra> hopf;
  size_t dim = 0;
  std::vector<Matrix> act;
};

/// The action of Z generated by one automorphism.
struct CyclicAction {
  Matrix phi;
};

using Structure = std::variant<std::monostate, Grading, ComoduleStructure, ModuleStructure, CyclicAction>;

bool has_structure(const Structure& s);
std::string structure_kind(const Structure& s);

/// Space-level checks (no bracket involved).
void validate_grading_space(size_t dim, const Grading& g);
void validate_comodule_space(const ComoduleStructure& c);
void validate_module_space(const ModuleStructure& a);

/// Algebra-level checks; each throws the matching *Failure kind with basis indices.
void validate_grading(const LieAlgebra& l, const Grading& g);
void validate_coaction(const LieAlgebra& l, const ComoduleStructure& c);
void validate_action(const LieAlgebra& l, const ModuleStructure& a);
void validate_automorphism(const LieAlgebra& l, const CyclicAction& a);
void validate_structure(const LieAlgebra& l, const Structure& s);

/// Coaction rho(a) = a (x) g over the group algebra, for finite groups only (InfiniteGroup otherwise).
ComoduleStructure grading_to_comodule(const Grading& g);
/// rho(e_j) = sum_i (h_i . e_j) (x) h_i^* over dual_hopf(a.hopf).
ComoduleStructure comodule_of_module(const ModuleStructure& a);
/// Inverse of comodule_of_module; `original` is the Hopf algebra whose dual carries c.
ModuleStructure module_of_comodule(const ComoduleStructure& c, std::shared_ptr<const HopfAlgebra> original);
/// Module structures become comodule structures over the dual; everything else is returned unchanged.
Structure canonical_structure(const Structure& s);

/// Operators whose common invariant subspaces are exactly the invariant subspaces of s.
std::vector<Matrix> structure_operators(const Structure& s, size_t dim);

bool is_invariant(const Structure& s, const Subspace& w);
/// Smallest invariant subspace containing i. With `algebra` given, i must be an ideal
/// (NotAnIdeal otherwise) and the result is checked to be one.
Subspace invariant_hull(const Structure& s, const Subspace& i, const LieAlgebra* algebra = nullptr);

/// Structure induced on an invariant subspace w, in the echelon basis of w.
Structure restrict_structure(const Structure& s, const Subspace& w);
/// Structure induced on the quotient by an invariant subspace, in canonical complement coordinates.
Structure quotient_structure(const Structure& s, const Subspace& w);

/// For gradings: the degree of a homogeneous vector, or nullopt when v is zero or not homogeneous.
std::optional<GroupBackend::Element> homogeneous_degree(const Grading& g, const Vector& v);

struct StabilityReport {
  bool r_invariant = false;
  bool n_invariant = false;
  bool theorem_applies = false;  ///< the acting side has a normalized ad-invariant integral
};
StabilityReport radical_stability_report(const LieAlgebra& l, const Structure& s);

/// An (H,L)-module: a representation psi of L on V, with compatible structures on L and V.
struct HLModule {
  LieAlgebra algebra;
  Structure algebra_structure;
  size_t space_dim = 0;
  std::vector<Matrix> psi;  ///< psi[i] = action of e_i
  Structure space_structure;
};

/// Checks psi is a representation and the (H,L)-compatibility; returns the symmetric flag.
bool validate_hlmodule(const HLModule& m);

/// The adjoint module of a structured Lie algebra.
HLModule adjoint_module(const LieAlgebra& l, const Structure& s);

}  // namespace levikit
