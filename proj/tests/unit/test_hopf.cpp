#include "doctest.h"
#include "levikit/error.hpp"
#include "levikit/hopf.hpp"

using namespace levikit;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

// Sweedler H4 products computed from the relations g^2 = 1, x^2 = 0, xg = -gx on words g^a x^b.
struct Word {
  int g, x;  // g^g x^x, g in {0,1}, x in {0,1}
};
// basis index of g^a x^b: 1 -> 0, g -> 1, x -> 2, gx -> 3
size_t word_index(Word w) { return w.x ? (w.g ? 3 : 2) : (w.g ? 1 : 0); }
Word index_word(size_t i) { return {static_cast<int>(i == 1 || i == 3), static_cast<int>(i >= 2)}; }
// (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}
Vector word_product(size_t i, size_t j) {
  Word a = index_word(i), b = index_word(j);
  Vector out(4);
  if (a.x + b.x > 1) return out;
  out[word_index({(a.g + b.g) % 2, a.x + b.x})] = (a.x * b.g) ? -1 : 1;
  return out;
}

}  // namespace

TEST_CASE("Sweedler algebra matches the defining relations") {
  HopfAlgebra h = sweedler4();
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(h.basis_product(i, j) == word_product(i, j));
  // Delta(gx) = Delta(g) Delta(x) = 1 (x) gx + gx (x) g
  std::vector<std::pair<size_t, size_t>> terms;
  for (const auto& p : h.coproduct_terms(3)) {
    CHECK(p.value == 1);
    terms.push_back({p.left, p.right});
  }
  CHECK(terms == std::vector<std::pair<size_t, size_t>>{{0, 3}, {3, 1}});
  CHECK(h.counit()[2] == 0);
  CHECK(h.antipode() * h.antipode() != Matrix::identity(4));
  // S^2(x) = S(-gx) = -x
  CHECK(h.antipode() * (h.antipode() * unit_vector(4, 2)) == Vector{0, 0, -1, 0});
}

TEST_CASE("Sweedler algebra with the identity antipode is rejected") {
  HopfTensors t = sweedler4().tensors();
  t.antipode = Matrix::identity(4);
  CHECK(kind_of([&] { validate_hopf(t); }) == ErrorKind::AntipodeAxiomFailure);
  HopfTensors u = sweedler4().tensors();
  u.mult[(2 * 4 + 1) * 4 + 3] = 1;  // x g = +gx breaks the bialgebra axiom
  CHECK(kind_of([&] { validate_hopf(u); }) == ErrorKind::HopfAxiomFailure);
}

TEST_CASE("group algebras and their canonical integrals") {
  auto s3 = group_algebra(GroupBackend::symmetric3());
  CHECK(s3.hopf->dim() == 6);
  CHECK(s3.integral.t == unit_vector(6, 0));
  CHECK(s3.integral.normalized);
  CHECK(s3.integral.ad_invariant);
  CHECK_FALSE(s3.hopf->is_commutative());
  CHECK(s3.hopf->is_cocommutative());

  auto triv = group_algebra(GroupBackend::trivial());
  CHECK(triv.hopf->dim() == 1);
  CHECK(triv.integral.t == triv.hopf->counit());

  auto z2 = group_algebra(GroupBackend::cyclic(2));
  CHECK(z2.integral.t == Vector{1, 0});
}

TEST_CASE("non-group tables are rejected") {
  // identity at 0 but 1*1 = 1 leaves 1 without an inverse
  CHECK(kind_of([] { GroupBackend::finite({}, {{0, 1}, {1, 1}}); }) == ErrorKind::NotAGroup);
  // not associative: a Latin square that is not a group table
  std::vector<std::vector<size_t>> bad = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { GroupBackend::finite({}, bad); }) == ErrorKind::NotAGroup);
}

TEST_CASE("duals validate and are involutive") {
  HopfAlgebra s3 = *group_algebra(GroupBackend::symmetric3()).hopf;
  HopfAlgebra d = dual_hopf(s3);
  CHECK(d.dim() == 6);
  CHECK(d.is_commutative());
  HopfAlgebra dd = dual_hopf(d);
  CHECK(dd.tensors().mult == s3.tensors().mult);
  CHECK(dd.tensors().comult == s3.tensors().comult);
  CHECK(dd.antipode() == s3.antipode());
  HopfAlgebra h4 = sweedler4();
  HopfAlgebra d4 = dual_hopf(h4);
  CHECK(dual_hopf(d4).tensors().mult == h4.tensors().mult);
}

TEST_CASE("integrals") {
  // Sweedler: t(a_(2)) a_(1) = t(a) 1 forces t = c (gx)^*, which kills 1.
  HopfAlgebra h4 = sweedler4();
  CHECK(is_left_integral(h4, Vector{0, 0, 0, 1}));
  CHECK_FALSE(is_left_integral(h4, Vector{1, 0, 0, 0}));
  try {
    find_normalized_integral(h4);
    FAIL("expected NormalizationImpossible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NormalizationImpossible);
    CHECK(e.indices() == std::vector<long>{1});
  }

  Integral s3 = find_normalized_integral(*group_algebra(GroupBackend::symmetric3()).hopf);
  CHECK(s3.t == unit_vector(6, 0));
  CHECK(s3.normalized);
  CHECK(s3.ad_invariant);

  // dual of FZ2: t(f) = (f(1) + f(g)) / 2 in the dual basis
  Integral z2 = find_normalized_integral(dual_hopf(*group_algebra(GroupBackend::cyclic(2)).hopf));
  CHECK(z2.t == Vector{fraction(1, 2), fraction(1, 2)});
  CHECK(z2.ad_invariant);

  // Commutative Hopf algebras: every integral is ad-invariant.
  for (size_t n : {2u, 3u, 4u}) {
    HopfAlgebra d = dual_hopf(*group_algebra(GroupBackend::cyclic(n)).hopf);
    REQUIRE(d.is_commutative());
    CHECK(find_normalized_integral(d).ad_invariant);
  }
  HopfAlgebra ds3 = dual_hopf(*group_algebra(GroupBackend::symmetric3()).hopf);
  CHECK(find_normalized_integral(ds3).ad_invariant);
}
