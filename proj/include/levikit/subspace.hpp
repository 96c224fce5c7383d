#pragma once

#include <vector>

#include "levikit/matrix.hpp"

namespace levikit {

/// A subspace of F^n stored by its canonical reduced row-echelon basis.
/// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^ambient.
  explicit Subspace(size_t ambient);

  static Subspace span(size_t ambient, const std::vector<Vector>& vectors);
  /// Row space of `rows`.
  static Subspace row_space(const Matrix& rows);
  static Subspace full(size_t ambient);

  size_t ambient_dim() const noexcept { return ambient_; }
  size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
  const std::vector<size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its reduction against the basis; zero iff v lies in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the echelon basis; throws if v is not in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Linear combination of basis vectors with the given coordinates.
  Vector from_coordinates(const Vector& coords) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Non-pivot columns; the standard vectors there span a canonical complement.
  std::vector<size_t> complement_columns() const;
  Subspace canonical_complement() const;

  /// Image of this subspace under a linear map given as a matrix (target x ambient).
  Subspace image_under(const Matrix& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  /// Lexicographic order on the echelon basis (dimension first); used for tie-breaking.
  friend bool lex_less(const Subspace& a, const Subspace& b);

 private:
  size_t ambient_ = 0;
  Matrix basis_;
  std::vector<size_t> pivots_;
};

/// Incremental semi-echelon basis: accepts vectors one at a time and keeps the
/// independent ones. Cheaper than recomputing a canonical form after every insertion.
class SpanBuilder {
 public:
  explicit SpanBuilder(size_t ambient) : ambient_(ambient) {}
  /// Adds v if it is independent of the vectors accepted so far; returns whether it was.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  size_t dim() const noexcept { return accepted_.size(); }
  /// The accepted vectors, unmodified, in insertion order.
  const std::vector<Vector>& accepted() const noexcept { return accepted_; }
  Subspace subspace() const { return Subspace::span(ambient_, accepted_); }

 private:
  Vector reduce(Vector v) const;
  size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<size_t> pivots_;
  std::vector<Vector> accepted_;
};

/// Matrix (m x n) with columns equal to the basis vectors; maps coordinates into the ambient space.
Matrix inclusion_matrix(const Subspace& s);

/// Quotient map F^n -> F^n / I in the canonical complement coordinates.
Vector quotient_coordinates(const Subspace& ideal, const Vector& v);
/// Canonical section F^n / I -> F^n placing coordinates on the complement columns.
Vector section_vector(const Subspace& ideal, const Vector& coords);
Matrix quotient_matrix(const Subspace& ideal);
Matrix section_matrix(const Subspace& ideal);

/// Kernel of a linear map as a subspace of its source.
Subspace null_space(const Matrix& map);
/// Column space of a matrix.
Subspace column_space(const Matrix& map);

}  // namespace levikit
