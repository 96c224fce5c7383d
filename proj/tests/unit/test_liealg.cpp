#include <random>

#include "doctest.h"
#include "levikit/catalog.hpp"
#include "levikit/error.hpp"
#include "levikit/lie_algebra.hpp"
#include "random_algebras.hpp"

using namespace levikit;

namespace {

// Oracles written directly against the structure constants.
Vector jacobi_defect(size_t n, const std::vector<Rational>& c, size_t i, size_t j, size_t k) {
  auto at = [&](size_t a, size_t b, size_t x) { return c[(a * n + b) * n + x]; };
  Vector out(n);
  for (size_t m = 0; m < n; ++m)
    for (size_t x = 0; x < n; ++x)
      out[x] += at(i, j, m) * at(m, k, x) + at(j, k, m) * at(m, i, x) + at(k, i, m) * at(m, j, x);
  return out;
}

Rational killing_oracle(const LieAlgebra& l, size_t i, size_t j) {
  Rational s = 0;
  for (size_t k = 0; k < l.dim(); ++k)
    for (size_t m = 0; m < l.dim(); ++m) s += l.c(i, k, m) * l.c(j, m, k);
  return s;
}

std::vector<Rational> tensor3(size_t n, std::initializer_list<std::tuple<size_t, size_t, size_t, long>> entries) {
  std::vector<Rational> c(n * n * n);
  for (auto [i, j, k, v] : entries) c[(i * n + j) * n + k] = v;
  return c;
}

Subspace span_units(size_t n, std::initializer_list<size_t> idx) {
  std::vector<Vector> vs;
  for (size_t i : idx) vs.push_back(unit_vector(n, i));
  return Subspace::span(n, vs);
}

Matrix diag(std::initializer_list<long> d) {
  Matrix m(d.size(), d.size());
  size_t i = 0;
  for (long x : d) m(i, i) = x, ++i;
  return m;
}

}  // namespace

TEST_CASE("sl2 satisfies Jacobi by direct summation and validates") {
  LieAlgebra s = catalog::sl2();
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k) CHECK(is_zero(jacobi_defect(3, s.constants(), i, j, k)));
  CHECK_NOTHROW(validate_lie(3, s.constants()));
}

TEST_CASE("antisymmetry violation is reported with indices") {
  auto c = tensor3(3, {{1, 2, 1, 1}, {2, 1, 1, 1}});
  try {
    validate_lie(3, c);
    FAIL("expected AntisymmetryViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AntisymmetryViolation);
    CHECK(e.indices() == std::vector<long>{1, 2, 1});
  }
}

TEST_CASE("Jacobi violations are detected exactly when the oracle finds a defect") {
  // [e1,e2] = e3 and [e1,e3] = e2: e1 acts as a derivation on an abelian ideal, so Jacobi holds.
  auto ok = tensor3(3, {{0, 1, 2, 1}, {1, 0, 2, -1}, {0, 2, 1, 1}, {2, 0, 1, -1}});
  CHECK(is_zero(jacobi_defect(3, ok, 0, 1, 2)));
  CHECK_NOTHROW(validate_lie(3, ok));
  // [e1,e2] = e2, [e1,e3] = e3, [e2,e3] = e1 has Jacobi defect 2 e1 on (e1, e2, e3).
  auto bad = tensor3(3, {{0, 1, 1, 1}, {1, 0, 1, -1}, {0, 2, 2, 1}, {2, 0, 2, -1}, {1, 2, 0, 1}, {2, 1, 0, -1}});
  CHECK(jacobi_defect(3, bad, 0, 1, 2) == Vector{2, 0, 0});
  try {
    validate_lie(3, bad);
    FAIL("expected JacobiViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::JacobiViolation);
    CHECK(e.indices() == std::vector<long>{0, 1, 2});
  }
}

TEST_CASE("ad matrices") {
  LieAlgebra aff = catalog::l_aff();
  CHECK(aff.ad(unit_vector(2, 0)) == diag({0, 1}));
  CHECK(aff.ad(zero_vector(2)).is_zero());
  CHECK(catalog::sl2().ad(unit_vector(3, 1)) == diag({2, 0, -2}));
  // ad x applied to y is the bracket
  LieAlgebra l7 = catalog::l7();
  Vector x{1, -2, 3, 1, 0, 5}, y{0, 1, 1, -1, 2, 2};
  CHECK(l7.ad(x) * y == l7.bracket(x, y));
}

TEST_CASE("Killing forms") {
  Matrix ks = killing_form(catalog::sl2());
  CHECK(ks == Matrix::from_rows({{0, 0, 4}, {0, 8, 0}, {4, 0, 0}}, 3));
  CHECK(killing_form(LieAlgebra::abelian(3)).is_zero());
  CHECK(killing_form(catalog::l_aff()) == Matrix::from_rows({{1, 0}, {0, 0}}, 2));
  LieAlgebra l7 = catalog::l7();
  Matrix k7 = killing_form(l7);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) CHECK(k7(i, j) == killing_oracle(l7, i, j));
}

TEST_CASE("derived and lower central series") {
  auto aff = series(catalog::l_aff(), SeriesKind::Derived);
  REQUIRE(aff.size() == 3);
  CHECK(aff[0].is_full());
  CHECK(aff[1] == span_units(2, {1}));
  CHECK(aff[2].is_zero());
  auto s = series(catalog::sl2(), SeriesKind::Derived);
  REQUIRE(s.size() == 1);
  CHECK(s[0].is_full());
  auto h = series(catalog::heisenberg(), SeriesKind::LowerCentral);
  REQUIRE(h.size() == 3);
  CHECK(h[1] == span_units(3, {2}));
  CHECK(h[2].is_zero());
}

TEST_CASE("solvable radical examples") {
  CHECK(solvable_radical(catalog::sl2()).is_zero());
  CHECK(solvable_radical(catalog::l_aff()).is_full());
  CHECK(solvable_radical(catalog::gl2()) == Subspace::span(4, {Vector{1, 0, 0, 1}}));
  CHECK(solvable_radical(LieAlgebra(0, {})).is_zero());
}

TEST_CASE("nilradical examples") {
  CHECK(nilradical(catalog::l_aff()) == span_units(2, {1}));
  CHECK(nilradical(catalog::heisenberg()).is_full());
  CHECK(nilradical(catalog::l7()) == span_units(6, {4, 5}));
  CHECK(nilradical(catalog::gl2()) == Subspace::span(4, {Vector{1, 0, 0, 1}}));
}

TEST_CASE("centralizer examples") {
  LieAlgebra h = catalog::heisenberg();
  CHECK(centralizer(h, Subspace::full(3)) == span_units(3, {2}));
  CHECK(centralizer(LieAlgebra::abelian(3), span_units(3, {0})).is_full());
  CHECK(centralizer(catalog::sl2(), Subspace::full(3)).is_zero());
}

TEST_CASE("associative hull is closed under products") {
  LieAlgebra l7 = catalog::l7();
  std::vector<Matrix> gens;
  for (size_t i = 0; i < l7.dim(); ++i) gens.push_back(l7.ad_basis(i));
  AssociativeHull hull = associative_hull(gens, l7.dim());
  std::vector<Vector> flat;
  for (const auto& b : hull.basis) flat.push_back(flatten(b));
  Subspace span = Subspace::span(36, flat);
  CHECK(span.dim() == hull.basis.size());
  for (const auto& a : hull.basis)
    for (const auto& b : hull.basis) CHECK(span.contains(flatten(a * b)));
  // the trace radical is an ideal of the hull consisting of nilpotent elements
  Matrix rad = hull.trace_radical();
  for (size_t r = 0; r < rad.rows(); ++r) {
    Matrix x(6, 6);
    for (size_t k = 0; k < hull.basis.size(); ++k) x += hull.basis[k] * rad(r, k);
    Matrix p = x;
    for (int i = 0; i < 6; ++i) p = p * x;
    CHECK(p.is_zero());
  }
}

TEST_CASE("subalgebra and quotient algebras") {
  LieAlgebra g = catalog::gl2();
  Subspace r = solvable_radical(g);
  LieAlgebra q = quotient_algebra(g, r);
  CHECK(q.dim() == 3);
  CHECK(killing_nondegenerate(q));
  Subspace sl = Subspace::span(4, {Vector{1, 0, 0, -1}, Vector{0, 1, 0, 0}, Vector{0, 0, 1, 0}});
  CHECK(is_subalgebra(g, sl));
  CHECK(killing_nondegenerate(subalgebra(g, sl)));
  CHECK(rank(killing_form_on(g, sl)) == 3);
}

TEST_CASE("radicals of random semidirect constructions") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 25; ++t) {
    auto c = testing::random_levi(rng, {});
    const LieAlgebra& l = c.algebra;
    Subspace r = solvable_radical(l);
    Subspace n = nilradical(l);
    CHECK(r == c.radical);
    CHECK(n == c.nilradical);
    CHECK(r.contains(n));
    CHECK(is_ideal(l, r));
    CHECK(is_ideal(l, n));
    CHECK(n.contains(bracket_spaces(l, Subspace::full(l.dim()), r)));
    // Killing form invariance on every basis triple
    Matrix k = killing_form(l);
    for (size_t x = 0; x < l.dim(); ++x)
      for (size_t y = 0; y < l.dim(); ++y)
        for (size_t z = 0; z < l.dim(); ++z) {
          Vector ex = unit_vector(l.dim(), x), ez = unit_vector(l.dim(), z);
          CHECK(dot(ex, k * l.bracket_basis(y, z)) == dot(l.bracket_basis(x, y), k * ez));
        }
  }
}
