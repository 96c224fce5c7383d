#include "levikit/subspace.hpp"

#include <algorithm>

#include "levikit/error.hpp"

namespace levikit {

Subspace::Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "span: vector length differs from ambient");
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Matrix& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  Echelon e = echelon(rows);
  s.basis_ = std::move(e.rref);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(size_t ambient) { return row_space(Matrix::identity(ambient)); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "reduce: vector length differs from ambient");
  Vector r = v;
  for (size_t k = 0; k < pivots_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (sgn(c) == 0) continue;
    for (size_t j = pivots_[k]; j < ambient_; ++j)
      if (sgn(basis_(k, j)) != 0) r[j] -= c * basis_(k, j);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return levikit::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "containment across ambients");
  for (size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorKind::InternalInconsistency, "coordinates requested for a vector outside the subspace");
  Vector c(pivots_.size());
  for (size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Vector Subspace::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate vector length");
  Vector v = zero_vector(ambient_);
  for (size_t k = 0; k < coords.size(); ++k) axpy(v, coords[k], basis_.row(k));
  return v;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "sum across ambients");
  return row_space(Matrix::vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "intersection across ambients");
  // U ∩ V is cut out by the union of the annihilators of U and V.
  Matrix stacked = Matrix::vstack(kernel(basis_), kernel(other.basis_));
  return row_space(kernel(stacked));
}

std::vector<size_t> Subspace::complement_columns() const {
  std::vector<bool> pivot(ambient_, false);
  for (size_t p : pivots_) pivot[p] = true;
  std::vector<size_t> out;
  for (size_t c = 0; c < ambient_; ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

Subspace Subspace::canonical_complement() const {
  std::vector<Vector> vs;
  for (size_t c : complement_columns()) vs.push_back(unit_vector(ambient_, c));
  return span(ambient_, vs);
}

Subspace Subspace::image_under(const Matrix& map) const {
  if (map.cols() != ambient_) throw Error(ErrorKind::DimensionMismatch, "image_under: map source dimension");
  std::vector<Vector> imgs;
  for (size_t i = 0; i < dim(); ++i) imgs.push_back(map * basis_vector(i));
  return span(map.rows(), imgs);
}

bool lex_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto& da = a.basis_.data();
  const auto& db = b.basis_.data();
  return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

Vector SpanBuilder::reduce(Vector v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (sgn(v[pivots_[k]]) == 0) continue;
    const Rational c = v[pivots_[k]];
    const Vector& r = rows_[k];
    for (size_t j = 0; j < ambient_; ++j)
      if (sgn(r[j]) != 0) v[j] -= c * r[j];
  }
  return v;
}

bool SpanBuilder::contains(const Vector& v) const { return levikit::is_zero(reduce(v)); }

bool SpanBuilder::add(const Vector& v) {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "SpanBuilder: vector length");
  Vector r = reduce(v);
  size_t p = 0;
  while (p < ambient_ && sgn(r[p]) == 0) ++p;
  if (p == ambient_) return false;
  const Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  accepted_.push_back(v);
  return true;
}

Matrix inclusion_matrix(const Subspace& s) { return s.basis().transpose(); }

Vector quotient_coordinates(const Subspace& ideal, const Vector& v) {
  Vector r = ideal.reduce(v);
  auto cols = ideal.complement_columns();
  Vector out(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) out[i] = r[cols[i]];
  return out;
}

Vector section_vector(const Subspace& ideal, const Vector& coords) {
  auto cols = ideal.complement_columns();
  if (coords.size() != cols.size()) throw Error(ErrorKind::DimensionMismatch, "section: coordinate length");
  Vector v = zero_vector(ideal.ambient_dim());
  for (size_t i = 0; i < cols.size(); ++i) v[cols[i]] = coords[i];
  return v;
}

Matrix quotient_matrix(const Subspace& ideal) {
  const size_t n = ideal.ambient_dim();
  auto cols = ideal.complement_columns();
  Matrix q(cols.size(), n);
  for (size_t j = 0; j < n; ++j) q.set_col(j, quotient_coordinates(ideal, unit_vector(n, j)));
  return q;
}

Matrix section_matrix(const Subspace& ideal) {
  const size_t n = ideal.ambient_dim();
  auto cols = ideal.complement_columns();
  Matrix s(n, cols.size());
  for (size_t i = 0; i < cols.size(); ++i) s(cols[i], i) = 1;
  return s;
}

Subspace null_space(const Matrix& map) { return Subspace::row_space(kernel(map)); }

Subspace column_space(const Matrix& map) { return Subspace::row_space(map.transpose()); }

}  // namespace levikit
