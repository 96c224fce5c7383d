#pragma once

#include <memory>
#include <string>
#include <vector>

#include "levikit/group.hpp"
#include "levikit/matrix.hpp"

namespace levikit {

/// Raw Hopf algebra tensors in a fixed basis h_0..h_{m-1}.
///   mult[(i*m + j)*m + k]   : h_i h_j = sum_k mult h_k
///   comult[(i*m + j)*m + k] : Delta h_i = sum_{j,k} comult h_j (x) h_k
///   antipode                : column i holds S(h_i)
struct HopfTensors {
  size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Rational> mult;
  Vector unit;
  std::vector<Rational> comult;
  Vector counit;
  Matrix antipode;
};

/// A validated finite-dimensional Hopf algebra.
class HopfAlgebra {
 public:
  /// Verifies associativity, unit, coassociativity, counit, the bialgebra axioms and
  /// the antipode axiom exactly; throws HopfAxiomFailure / AntipodeAxiomFailure / ShapeMismatch.
  explicit HopfAlgebra(HopfTensors tensors);

  size_t dim() const noexcept { return t_.dim; }
  const std::vector<std::string>& labels() const noexcept { return t_.labels; }
  const HopfTensors& tensors() const noexcept { return t_; }
  const Rational& mult(size_t i, size_t j, size_t k) const { return t_.mult[(i * dim() + j) * dim() + k]; }
  const Rational& comult(size_t i, size_t j, size_t k) const { return t_.comult[(i * dim() + j) * dim() + k]; }
  const Vector& unit() const noexcept { return t_.unit; }
  const Vector& counit() const noexcept { return t_.counit; }
  const Matrix& antipode() const noexcept { return t_.antipode; }
  bool is_commutative() const;
  bool is_cocommutative() const;

  struct Entry {
    size_t index;
    Rational value;
  };
  /// Nonzero coefficients of h_i h_j.
  const std::vector<Entry>& product_terms(size_t i, size_t j) const { return mult_sparse_[i * dim() + j]; }
  struct Pair {
    size_t left, right;
    Rational value;
  };
  /// Nonzero terms of Delta h_i.
  const std::vector<Pair>& coproduct_terms(size_t i) const { return comult_sparse_[i]; }

  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basis_product(size_t i, size_t j) const;

 private:
  HopfTensors t_;
  std::vector<std::vector<Entry>> mult_sparse_;
  std::vector<std::vector<Pair>> comult_sparse_;
};

/// Equal structure tensors (labels are ignored).
bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

/// Throws on the first failing axiom.
void validate_hopf(const HopfTensors& tensors);

/// A functional t on H. `normalized` means t(1) = 1.
struct Integral {
  Vector t;
  bool normalized = false;
  bool ad_invariant = false;
};

bool is_left_integral(const HopfAlgebra& h, const Vector& t);
/// t(a_(1) b S(a_(2))) = eps(a) t(b) on all basis pairs.
bool is_ad_invariant(const HopfAlgebra& h, const Vector& t);
Rational evaluate_functional(const Vector& t, const Vector& a);

struct GroupAlgebra {
  std::shared_ptr<const HopfAlgebra> hopf;
  Integral integral;
};

/// FG with grouplike basis in the order of the group's elements; t is the identity indicator.
GroupAlgebra group_algebra(const GroupBackend& g);

/// Sweedler's four-dimensional Hopf algebra in the basis (1, g, x, gx).
HopfAlgebra sweedler4();

/// The dual Hopf algebra on H*, in the dual basis.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

/// Solves for left integrals and normalizes one with t(1) != 0. Throws NoIntegral, or
/// NormalizationImpossible whose indices hold the dimension of the integral space.
Integral find_normalized_integral(const HopfAlgebra& h);

}  // namespace levikit
