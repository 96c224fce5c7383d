#include <random>

#include "doctest.h"
#include "levikit/error.hpp"
#include "levikit/matrix.hpp"
#include "levikit/polynomial.hpp"
#include "levikit/subspace.hpp"

using namespace levikit;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  size_t cols = 0;
  for (auto r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    cols = v.size();
    rs.push_back(v);
  }
  return Matrix::from_rows(rs, cols);
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Matrix random_matrix(std::mt19937& rng, size_t r, size_t c, int range, double zero_bias = 0.3) {
  std::uniform_int_distribution<int> d(-range, range);
  std::uniform_real_distribution<double> z(0, 1);
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zero_bias ? 0 : d(rng);
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print in canonical form") {
  CHECK(parse_rational("6/4") == fraction(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(fraction(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  // Arbitrary precision: 2^200 survives a round trip.
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 200);
  CHECK(parse_rational(big.get_str()) == Rational(big));
}

TEST_CASE("rref of small matrices") {
  CHECK(rref_canonical(mat({{2, 4}, {1, 2}})) == mat({{1, 2}}));
  CHECK(rref_canonical(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(rref_canonical(mat({{0, 1}, {1, 0}})) == Matrix::identity(2));
  CHECK(rref_canonical(Matrix(2, 3)).rows() == 0);
}

TEST_CASE("rref is idempotent and preserves the row space") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 5);
    Matrix r = rref_canonical(m);
    CHECK(rref_canonical(r) == r);
    CHECK(r.rows() == rank(m));
    // every original row is a combination of the rref rows
    Subspace s = Subspace::row_space(r);
    for (size_t i = 0; i < m.rows(); ++i) CHECK(s.contains(m.row(i)));
  }
}

TEST_CASE("solve examples") {
  auto s1 = solve(Matrix::identity(2), vec({3, 5}));
  REQUIRE(s1);
  CHECK(s1->x == vec({3, 5}));
  CHECK(s1->kernel.rows() == 0);

  auto s2 = solve(mat({{1, 1}}), vec({2}));
  REQUIRE(s2);
  CHECK(s2->x == vec({2, 0}));
  REQUIRE(s2->kernel.rows() == 1);
  CHECK(Subspace::row_space(s2->kernel) == Subspace::span(2, {vec({1, -1})}));

  CHECK_FALSE(solve(mat({{1}, {1}}), vec({0, 1})));
}

TEST_CASE("solve round trip on random systems") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix a = random_matrix(rng, r, c, 4);
    Vector b = (t % 2 == 0) ? a * random_matrix(rng, c, 1, 3).col(0) : random_matrix(rng, r, 1, 3).col(0);
    auto s = solve(a, b);
    if (t % 2 == 0) REQUIRE(s);
    if (!s) continue;
    CHECK(is_zero(sub(a * s->x, b)));
    CHECK(s->kernel.rows() + rank(a) == c);
    for (size_t k = 0; k < s->kernel.rows(); ++k) CHECK(is_zero(a * s->kernel.row(k)));
  }
}

TEST_CASE("inverse of a random invertible matrix") {
  std::mt19937 rng(3);
  int found = 0;
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 4, 4, 6, 0.1);
    auto inv = inverse(m);
    if (rank(m) < 4) {
      CHECK_FALSE(inv);
      continue;
    }
    REQUIRE(inv);
    CHECK(*inv * m == Matrix::identity(4));
    ++found;
  }
  CHECK(found > 0);
}

TEST_CASE("subspace sum, intersection and containment") {
  Vector e1 = unit_vector(3, 0), e2 = unit_vector(3, 1), e3 = unit_vector(3, 2);
  Subspace u = Subspace::span(3, {e1, e2}), v = Subspace::span(3, {e2, e3});
  CHECK(u.intersect(v) == Subspace::span(3, {e2}));
  CHECK(u + Subspace(3) == u);
  CHECK(u.contains(Subspace::span(3, {e1})));
  CHECK_FALSE(Subspace::span(3, {e1}).contains(u));
  CHECK_THROWS_AS(u + Subspace(4), Error);
}

TEST_CASE("Grassmann identity on random pairs") {
  std::mt19937 rng(19);
  for (int t = 0; t < 50; ++t) {
    size_t n = 2 + rng() % 6;
    Subspace u = Subspace::row_space(random_matrix(rng, rng() % (n + 1), n, 3, 0.5));
    Subspace v = Subspace::row_space(random_matrix(rng, rng() % (n + 1), n, 3, 0.5));
    Subspace s = u + v, i = u.intersect(v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(s.contains(u));
  }
}

TEST_CASE("quotient coordinates and sections invert each other") {
  Subspace i = Subspace::span(4, {vec({1, 1, 0, 0}), vec({0, 0, 1, 2})});
  Matrix q = quotient_matrix(i), s = section_matrix(i);
  CHECK(q * s == Matrix::identity(2));
  for (size_t k = 0; k < i.dim(); ++k) CHECK(is_zero(q * i.basis_vector(k)));
  Vector x = vec({3, -1, 4, 1});
  // x - s q x lies in the ideal
  CHECK(i.contains(sub(x, s * (q * x))));
}

TEST_CASE("polynomial arithmetic and gcd") {
  Polynomial x = Polynomial::monomial(1, 1), one = Polynomial::constant(1);
  Polynomial a = (x - one) * (x + one), b = (x - one) * (x - one);
  CHECK(gcd(a, b) == x - one);
  auto dm = divmod(a * x + one, x - one);
  CHECK(dm.quotient * (x - one) + dm.remainder == a * x + one);
  CHECK(dm.remainder.degree() < 1);
}

TEST_CASE("minimal polynomial") {
  // diag(2,0,-2) has minimal polynomial x^3 - 4x
  Matrix h = mat({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});
  Polynomial m = minimal_polynomial(h);
  CHECK(m == Polynomial(std::vector<Rational>{0, -4, 0, 1}));
  CHECK(evaluate(m, h).is_zero());
  // Nilpotent Jordan block: x^2
  CHECK(minimal_polynomial(mat({{0, 1}, {0, 0}})) == Polynomial::monomial(1, 2));
}

TEST_CASE("factorization over the rationals") {
  Polynomial x = Polynomial::monomial(1, 1);
  auto c = [](long v) { return Polynomial::constant(v); };
  // x^4 - 1 = (x-1)(x+1)(x^2+1)
  auto f = factor(x * x * x * x - c(1));
  REQUIRE(f.size() == 3);
  CHECK(f[0].factor.degree() == 1);
  CHECK(f[1].factor.degree() == 1);
  CHECK(f[2].factor == x * x + c(1));
  // x^4 + 1 is irreducible over Q but splits modulo every prime
  auto g = factor(x * x * x * x + c(1));
  REQUIRE(g.size() == 1);
  CHECK(g[0].factor.degree() == 4);
  // multiplicities and a non-monic input
  Polynomial p = c(3) * (x - c(2)) * (x - c(2)) * (x * x - c(2)) * (c(2) * x + c(1));
  auto h = factor(p);
  REQUIRE(h.size() == 3);
  Polynomial prod = c(1);
  for (const auto& fc : h)
    for (int k = 0; k < fc.multiplicity; ++k) prod = prod * fc.factor;
  CHECK(prod == p.monic());
  int mult_two = 0;
  for (const auto& fc : h)
    if (fc.factor == x - c(2)) mult_two = fc.multiplicity;
  CHECK(mult_two == 2);
}

TEST_CASE("factorization recovers random products") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-4, 4);
  Polynomial x = Polynomial::monomial(1, 1);
  for (int t = 0; t < 15; ++t) {
    Polynomial prod = Polynomial::constant(1);
    int total = 0;
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> cs(2 + rng() % 3);
      for (auto& q : cs) q = d(rng);
      cs.back() = 1;
      Polynomial f(cs);
      prod = prod * f;
      total += f.degree();
    }
    auto fs = factor(prod);
    Polynomial back = Polynomial::constant(1);
    int deg = 0;
    for (const auto& fc : fs) {
      CHECK(fc.factor.leading() == 1);
      for (int k = 0; k < fc.multiplicity; ++k) back = back * fc.factor;
      deg += fc.factor.degree() * fc.multiplicity;
      // no factor splits further: it has no rational root unless linear
      if (fc.factor.degree() > 1) CHECK(factor(fc.factor).size() == 1);
    }
    CHECK(back == prod.monic());
    CHECK(deg == total);
  }
}
