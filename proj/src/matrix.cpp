#include "levikit/matrix.hpp"

#include <algorithm>
#include <cctype>

#include "levikit/error.hpp"

namespace levikit {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
  auto valid_int = [](std::string_view part) {
    size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(start), part.end(),
                       [](unsigned char ch) { return std::isdigit(ch); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational fraction(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(size_t n, size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, 1, b);
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, -1, b);
  return r;
}

Vector scale(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
  if (sgn(s) == 0) return;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vector>& cols, size_t rows) {
  Matrix m(rows, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Vector Matrix::row(size_t r) const {
  return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vector Matrix::col(size_t c) const {
  Vector v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(size_t r, const Vector& v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<long>(r * cols_));
}

void Matrix::set_col(size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
  for (size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  Matrix b(nr, nc);
  for (size_t r = 0; r < nr; ++r)
    for (size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
  Matrix m(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + static_cast<long>(top.data_.size()));
  return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
  Matrix m(left.rows_, left.cols_ + right.cols_);
  for (size_t r = 0; r < left.rows_; ++r) {
    for (size_t c = 0; c < left.cols_; ++c) m(r, c) = left(r, c);
    for (size_t c = 0; c < right.cols_; ++c) m(r, left.cols_ + c) = right(r, c);
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
  for (size_t i = 0; i < data_.size(); ++i)
    if (sgn(other.data_[i]) != 0) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
  for (size_t i = 0; i < data_.size(); ++i)
    if (sgn(other.data_[i]) != 0) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  Matrix m(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += aik * b(k, j);
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
  Vector out(a.rows_, Rational(0));
  for (size_t j = 0; j < a.cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (size_t i = 0; i < a.rows_; ++i)
      if (sgn(a(i, j)) != 0) out[i] += a(i, j) * v[j];
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vector flatten(const Matrix& m) { return m.data(); }

Matrix unflatten(const Vector& v, size_t rows, size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "unflatten length");
  Matrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

Echelon echelon(const Matrix& m) {
  std::vector<Vector> rows = m.row_list();
  const size_t ncols = m.cols();
  std::vector<size_t> pivots;
  size_t lead = 0;
  for (size_t c = 0; c < ncols && lead < rows.size(); ++c) {
    size_t p = lead;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[lead], rows[p]);
    Vector& prow = rows[lead];
    if (prow[c] != 1) {
      Rational inv = 1 / prow[c];
      for (size_t j = c; j < ncols; ++j)
        if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c];
      for (size_t j = c; j < ncols; ++j)
        if (sgn(prow[j]) != 0) rows[r][j] -= f * prow[j];
    }
    pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  return {Matrix::from_rows(rows, ncols), pivots};
}

Matrix rref_canonical(const Matrix& m) { return echelon(m).rref; }

size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const size_t n = m.cols();
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(n, f);
    for (size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
    basis.push_back(std::move(v));
  }
  return rref_canonical(Matrix::from_rows(basis, n));
}

std::optional<Solution> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve: rows of a and length of b differ");
  const size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x = zero_vector(n);
  for (size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rref(k, n);
  return Solution{std::move(x), kernel(a)};
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve_matrix shape");
  const size_t n = a.cols();
  Matrix aug = Matrix::hstack(a, b);
  Echelon e = echelon(aug);
  for (size_t p : e.pivots)
    if (p >= n) return std::nullopt;
  Matrix x(n, b.cols());
  for (size_t k = 0; k < e.pivots.size(); ++k)
    for (size_t c = 0; c < b.cols(); ++c) x(e.pivots[k], c) = e.rref(k, n + c);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_matrix(m, Matrix::identity(m.rows()));
}

}  // namespace levikit
