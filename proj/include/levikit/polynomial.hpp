#pragma once

#include <vector>

#include "levikit/matrix.hpp"

namespace levikit {

/// Univariate polynomial over the rationals, coefficients stored low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational eval(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p(m) by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& m);
/// Monic minimal polynomial of a square matrix.
Polynomial minimal_polynomial(const Matrix& m);

struct Factor {
  Polynomial factor;  ///< monic, irreducible over Q
  int multiplicity;
};

/// Complete factorization over Q into monic irreducibles (squarefree decomposition
/// followed by Zassenhaus factorization of each squarefree part over Z).
/// Factors are sorted by degree, then coefficients.
std::vector<Factor> factor(const Polynomial& p);

/// Distinct monic irreducible factors of p over Q.
std::vector<Polynomial> irreducible_factors(const Polynomial& p);

}  // namespace levikit
