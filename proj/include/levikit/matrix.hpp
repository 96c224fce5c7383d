#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace levikit {

/// Exact rational number, always kept in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p"; throws Error(Parse) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
/// num/den in canonical form (mpq_class(num, den) alone does not reduce).
Rational fraction(long num, long den);

Vector zero_vector(size_t n);
Vector unit_vector(size_t n, size_t i);
bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);

/// Dense row-major matrix of rationals. A matrix with `rows` rows and `cols`
/// columns represents a linear map F^cols -> F^rows acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols);

  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, size_t cols);
  static Matrix from_cols(const std::vector<Vector>& cols, size_t rows);

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vector row(size_t r) const;
  Vector col(size_t c) const;
  void set_row(size_t r, const Vector& v);
  void set_col(size_t c, const Vector& v);
  std::vector<Vector> row_list() const;

  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;
  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;

  /// Vertical concatenation; column counts must agree.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  const std::vector<Rational>& data() const noexcept { return data_; }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Commutator ab - ba of square matrices.
Matrix commutator(const Matrix& a, const Matrix& b);
/// Row-major flattening, used when matrices are treated as vectors of End(V).
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, size_t rows, size_t cols);

struct Echelon {
  Matrix rref;                  ///< reduced row-echelon form, zero rows removed
  std::vector<size_t> pivots;   ///< pivot column of each row
};

Echelon echelon(const Matrix& m);

/// Unique reduced row-echelon form of `m` with zero rows removed.
Matrix rref_canonical(const Matrix& m);
size_t rank(const Matrix& m);

/// Canonical basis (as rows, in RREF) of {x : m x = 0}.
Matrix kernel(const Matrix& m);

struct Solution {
  Vector x;       ///< particular solution with every free variable set to zero
  Matrix kernel;  ///< rows spanning {x : a x = 0}
};

/// Solves a x = b exactly; std::nullopt when b is outside the column space.
std::optional<Solution> solve(const Matrix& a, const Vector& b);

/// Solves a X = b column by column; std::nullopt when any column is unsolvable.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace levikit
