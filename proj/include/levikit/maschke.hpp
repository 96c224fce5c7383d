#pragma once

#include <optional>
#include <string>

#include "levikit/hopf.hpp"
#include "levikit/structure.hpp"

namespace levikit {

/// True when r : V -> W satisfies rho_W(r(x)) = (r (x) id)(rho_V(x)) on every basis vector.
bool is_colinear(const Matrix& r, const ComoduleStructure& v, const ComoduleStructure& w);
/// True when r maps every homogeneous basis vector to a vector of the same degree.
bool is_graded_map(const Matrix& r, const Grading& v, const Grading& w);
/// Dispatches on the kind of the two structures (which must agree after canonicalization).
bool is_structure_map(const Matrix& r, const Structure& v, const Structure& w);

/// r~(x) = t(r(x_(0))_(1) S(x_(1))) r(x_(0))_(0). When `section_of` is given (a colinear
/// pi : W -> V with pi r = id), t must be normalized and pi r~ = id is verified.
Matrix average_colinear(const Matrix& r, const ComoduleStructure& v, const ComoduleStructure& w, const Integral& t,
                        const Matrix* section_of = nullptr);

/// Sum over degrees g of p_{W,g} r p_{V,g}.
Matrix average_graded(const Matrix& r, const Grading& v, const Grading& w);

/// Averages an L-module homomorphism pi : V -> W into a colinear one. The structures of
/// v and w are used for colinearity; t is needed only for comodule structures.
Matrix average_equivariant_projection(const Matrix& pi, const HLModule& v, const HLModule& w, const Integral* t);

/// How maps between spaces carrying a given kind of structure get averaged.
class AveragingRoute {
 public:
  enum class Kind { Identity, Graded, Integral, Unavailable };

  /// Inspects the canonical form of s; failures to find an integral are recorded, not thrown.
  static AveragingRoute for_structure(const Structure& s);

  Kind kind() const noexcept { return kind_; }
  const std::optional<Integral>& integral() const noexcept { return integral_; }
  /// Throws NoAveragingRoute unless averaging works (and, if asked, preserves L-equivariance).
  void require(bool need_ad_invariant) const;
  /// Averages r : src -> dst. Both structures must be of the kind this route was built for.
  Matrix average(const Matrix& r, const Structure& src, const Structure& dst) const;

 private:
  Kind kind_ = Kind::Identity;
  std::optional<Integral> integral_;
  std::string reason_;
};

}  // namespace levikit
