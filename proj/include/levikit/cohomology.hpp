#pragma once

#include <vector>

#include "levikit/lie_algebra.hpp"
#include "levikit/maschke.hpp"
#include "levikit/structure.hpp"

namespace levikit {

/// Alternating multilinear map L^k -> V (k = 2 or 3), stored on strictly increasing index tuples.
class Cochain {
 public:
  Cochain() = default;
  Cochain(size_t degree, size_t algebra_dim, size_t space_dim);

  size_t degree() const noexcept { return degree_; }
  size_t algebra_dim() const noexcept { return n_; }
  size_t space_dim() const noexcept { return d_; }

  /// Value on basis vectors; any order, signs and repeated indices handled.
  Vector value(const std::vector<size_t>& idx) const;
  /// Sets the value on the given tuple (and, implicitly, on its permutations).
  void set(const std::vector<size_t>& idx, const Vector& v);

  bool is_zero() const;
  friend bool operator==(const Cochain& a, const Cochain& b) = default;

  /// Strictly increasing tuples in storage order.
  const std::vector<std::vector<size_t>>& tuples() const noexcept { return tuples_; }
  const std::vector<Vector>& values() const noexcept { return values_; }

 private:
  size_t slot(std::vector<size_t> sorted) const;
  size_t degree_ = 0, n_ = 0, d_ = 0;
  std::vector<std::vector<size_t>> tuples_;
  std::vector<Vector> values_;
};

/// (d omega)(x, y) = psi(x) omega(y) - psi(y) omega(x) - omega([x, y]); omega is dim V x dim L.
Cochain coboundary(const LieAlgebra& l, const std::vector<Matrix>& psi, const Matrix& omega);
/// The Chevalley-Eilenberg differential from 2-cochains to 3-cochains.
Cochain coboundary(const LieAlgebra& l, const std::vector<Matrix>& psi, const Cochain& phi);

/// The 2-cochain (x, y) -> [x, y] with values in the adjoint module.
Cochain bracket_cochain(const LieAlgebra& l);

/// Colinearity of a 1-cochain (a linear map L -> V).
bool is_colinear_cochain(const Matrix& omega, const Structure& on_algebra, const Structure& on_space);
/// rho_V(w(a, b)) = w(a_(0), b_(0)) (x) a_(1) b_(1) on all basis pairs; degree multiplicativity for gradings.
bool is_colinear_cochain(const Cochain& w, const Structure& on_algebra, const Structure& on_space);

/// Some omega with d omega = phi. Throws NotACocycle or NoSolution.
Matrix solve_coboundary(const LieAlgebra& l, const std::vector<Matrix>& psi, const Cochain& phi);

/// Colinear omega with d omega = phi: a plain solution averaged over the route's integral.
/// Requires L semisimple, m symmetric and an ad-invariant normalized integral (or a grading).
Matrix solve_coboundary_colinear(const HLModule& m, const Cochain& phi, const AveragingRoute& route);

}  // namespace levikit
