#pragma once

#include <map>
#include <string>
#include <vector>

#include "levikit/matrix.hpp"
#include "levikit/subspace.hpp"

namespace levikit {

/// Finite-dimensional Lie algebra given by structure constants [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validates antisymmetry and the Jacobi identity exactly; throws
  /// AntisymmetryViolation / JacobiViolation with the failing basis indices.
  LieAlgebra(size_t dim, std::vector<Rational> constants, std::vector<std::string> labels = {});

  /// Builds the tensor from the brackets of pairs i < j (antisymmetric completion implied).
  static LieAlgebra from_brackets(size_t dim, const std::map<std::pair<size_t, size_t>, Vector>& brackets,
                                  std::vector<std::string> labels = {});
  static LieAlgebra abelian(size_t dim);

  size_t dim() const noexcept { return dim_; }
  const Rational& c(size_t i, size_t j, size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rational>& constants() const noexcept { return c_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Vector bracket_basis(size_t i, size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of y -> [x, y].
  Matrix ad(const Vector& x) const;
  const Matrix& ad_basis(size_t i) const { return ad_[i]; }

  /// Same algebra expressed in the basis given by the columns of p (must be invertible).
  LieAlgebra change_basis(const Matrix& p) const;

 private:
  size_t dim_ = 0;
  std::vector<Rational> c_;
  std::vector<std::string> labels_;
  std::vector<Matrix> ad_;
};

/// Throws AntisymmetryViolation or JacobiViolation; shape errors throw ShapeMismatch.
void validate_lie(size_t dim, const std::vector<Rational>& constants);

/// kappa(i, j) = tr(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& l);
/// Killing form of the subalgebra spanned by s, in the echelon basis of s.
Matrix killing_form_on(const LieAlgebra& l, const Subspace& s);
bool killing_nondegenerate(const LieAlgebra& l);

/// [U, V] as a subspace of L.
Subspace bracket_spaces(const LieAlgebra& l, const Subspace& u, const Subspace& v);
bool is_subalgebra(const LieAlgebra& l, const Subspace& s);
bool is_ideal(const LieAlgebra& l, const Subspace& s);

enum class SeriesKind { Derived, LowerCentral };
/// Series of L itself, listed until it stabilizes (the stable term appears once).
std::vector<Subspace> series(const LieAlgebra& l, SeriesKind kind);
/// Series of the subalgebra s (derived: [s_k, s_k]; lower central: [s, s_k]).
std::vector<Subspace> series(const LieAlgebra& l, const Subspace& s, SeriesKind kind);
bool is_solvable(const LieAlgebra& l, const Subspace& s);
bool is_nilpotent(const LieAlgebra& l, const Subspace& s);

/// Killing-orthogonal complement of [L, L]; postconditions are checked and violations throw InternalInconsistency.
Subspace solvable_radical(const LieAlgebra& l);

/// The associative algebra (without unit) generated by a set of square matrices.
struct AssociativeHull {
  size_t ambient = 0;
  std::vector<Matrix> basis;
  /// tr(a_i a_j)
  Matrix trace_gram() const;
  /// Coefficient vectors (in `basis`) spanning the trace-form radical.
  Matrix trace_radical() const;
};

AssociativeHull associative_hull(const std::vector<Matrix>& generators, size_t ambient);

/// {x : ad x in J(A)} with A the associative hull of ad L.
Subspace nilradical(const LieAlgebra& l);

/// {x : [x, m] = 0}.
Subspace centralizer(const LieAlgebra& l, const Subspace& m);

/// L / I in the canonical complement coordinates of I (see quotient_matrix / section_matrix).
LieAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal);
/// The subalgebra s in its echelon basis.
LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s);

/// Direct sum of Lie algebras, basis of a followed by basis of b.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace levikit
