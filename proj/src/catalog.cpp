#include "levikit/catalog.hpp"

#include "levikit/error.hpp"

namespace levikit::catalog {

namespace {

Matrix unit_matrix(size_t n, size_t r, size_t c) {
  Matrix m(n, n);
  m(r, c) = 1;
  return m;
}

}  // namespace

LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::vector<std::string> labels) {
  const size_t d = basis.size();
  if (d == 0) return LieAlgebra(0, {}, {});
  const size_t n = basis[0].rows();
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  Matrix a = Matrix::from_cols(cols, n * n);
  if (rank(a) != d) throw Error(ErrorKind::DimensionMismatch, "matrix basis is linearly dependent");
  std::vector<Rational> c(d * d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      auto s = solve(a, flatten(commutator(basis[i], basis[j])));
      if (!s) throw Error(ErrorKind::NotAnIdeal, "matrix span is not closed under commutators", {long(i), long(j)});
      for (size_t k = 0; k < d; ++k) {
        c[(i * d + j) * d + k] = s->x[k];
        c[(j * d + i) * d + k] = -s->x[k];
      }
    }
  return LieAlgebra(d, std::move(c), std::move(labels));
}

LieAlgebra semidirect_product(const LieAlgebra& b, const std::vector<Matrix>& rep, std::vector<std::string> labels) {
  const size_t nb = b.dim();
  if (rep.size() != nb) throw Error(ErrorKind::ShapeMismatch, "one representation matrix per basis element required");
  const size_t nv = nb ? rep[0].rows() : 0;
  const size_t n = nb + nv;
  std::vector<Rational> c(n * n * n);
  auto set = [&](size_t i, size_t j, size_t k, const Rational& v) {
    c[(i * n + j) * n + k] = v;
    c[(j * n + i) * n + k] = -v;
  };
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = i + 1; j < nb; ++j)
      for (size_t k = 0; k < nb; ++k) set(i, j, k, b.c(i, j, k));
  for (size_t i = 0; i < nb; ++i)
    for (size_t v = 0; v < nv; ++v)
      for (size_t w = 0; w < nv; ++w) set(i, nb + v, nb + w, rep[i](w, v));
  if (labels.empty()) {
    labels = b.labels();
    for (size_t v = 0; v < nv; ++v) labels.push_back("v" + std::to_string(v + 1));
  }
  return LieAlgebra(n, std::move(c), std::move(labels));
}

LieAlgebra sl2() {
  std::map<std::pair<size_t, size_t>, Vector> br;
  br[{0, 2}] = {0, 1, 0};   // [e, f] = h
  br[{0, 1}] = {-2, 0, 0};  // [e, h] = -2e
  br[{1, 2}] = {0, 0, -2};  // [h, f] = -2f
  return LieAlgebra::from_brackets(3, br, {"e", "h", "f"});
}

std::vector<Matrix> sl2_natural() {
  Matrix e(2, 2), h(2, 2), f(2, 2);
  e(0, 1) = 1;
  h(0, 0) = 1;
  h(1, 1) = -1;
  f(1, 0) = 1;
  return {e, h, f};
}

LieAlgebra gl2() {
  return matrix_lie_algebra({unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)},
                            {"E11", "E12", "E21", "E22"});
}

LieAlgebra l_aff() {
  std::map<std::pair<size_t, size_t>, Vector> br;
  br[{0, 1}] = {0, 1};
  return LieAlgebra::from_brackets(2, br, {"e1", "e2"});
}

LieAlgebra heisenberg() {
  std::map<std::pair<size_t, size_t>, Vector> br;
  br[{0, 1}] = {0, 0, 1};
  return LieAlgebra::from_brackets(3, br, {"x", "y", "z"});
}

LieAlgebra l7() {
  LieAlgebra b = direct_sum(sl2(), LieAlgebra(1, {0}, {"t"}));
  auto nat = sl2_natural();
  nat.push_back(Matrix::identity(2));
  return semidirect_product(b, nat, {"e", "h", "f", "t", "v1", "v2"});
}

LieAlgebra sl2_natural_semidirect() { return semidirect_product(sl2(), sl2_natural(), {"e", "h", "f", "v1", "v2"}); }

LieAlgebra l6() {
  LieAlgebra s = sl2();
  std::vector<Matrix> ad;
  for (size_t i = 0; i < 3; ++i) ad.push_back(s.ad_basis(i));
  return semidirect_product(s, ad, {"e", "h", "f", "Ve", "Vh", "Vf"});
}

ModuleStructure sweedler_action_l6() {
  ModuleStructure a;
  a.hopf = std::make_shared<const HopfAlgebra>(sweedler4());
  a.dim = 6;
  Matrix one = Matrix::identity(6), g(6, 6), x(6, 6);
  for (size_t i = 0; i < 3; ++i) {
    g(i, i) = 1;
    g(i + 3, i + 3) = -1;
    x(i, i + 3) = 1;  // x(phi b) = b
  }
  a.act = {one, g, x, g * x};
  return a;
}

LieAlgebra s3_block() {
  return matrix_lie_algebra({unit_matrix(4, 0, 0), unit_matrix(4, 0, 1), unit_matrix(4, 1, 0), unit_matrix(4, 1, 1),
                             unit_matrix(4, 2, 2), unit_matrix(4, 2, 3), unit_matrix(4, 3, 2), unit_matrix(4, 3, 3)},
                            {"E11", "E12", "E21", "E22", "E33", "E34", "E43", "E44"});
}

Grading s3_block_grading() {
  auto g = std::make_shared<const GroupBackend>(GroupBackend::symmetric3());
  auto e = g->element("e"), a = g->element("(12)"), b = g->element("(23)");
  return Grading{g, {e, a, a, e, e, b, b, e}};
}

LieAlgebra hnoninv(size_t m) {
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  const size_t n = 2 * m;
  // sl_m part: E_ij (i != j) and E_ii - E_{i+1,i+1}
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j) {
        basis.push_back(unit_matrix(n, i, j));
        labels.push_back("C" + std::to_string(i + 1) + std::to_string(j + 1));
      }
  for (size_t i = 0; i + 1 < m; ++i) {
    basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
    labels.push_back("H" + std::to_string(i + 1));
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      basis.push_back(unit_matrix(n, i, m + j));
      labels.push_back("D" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return matrix_lie_algebra(basis, labels);
}

CyclicAction hnoninv_automorphism(size_t m) {
  const size_t sl = m * m - 1, dim = sl + m * m;
  Matrix phi = Matrix::identity(dim);
  // The C-part of basis element k, written in the D coordinates (D index = i*m + j).
  size_t k = 0;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j) phi(sl + i * m + j, k++) += 1;
  for (size_t i = 0; i + 1 < m; ++i) {
    phi(sl + i * m + i, k) += 1;
    phi(sl + (i + 1) * m + i + 1, k) -= 1;
    ++k;
  }
  return CyclicAction{phi};
}

LieAlgebra sl2_pair_swap() {
  LieAlgebra pair = direct_sum(sl2(), sl2());
  Matrix p(6, 6);
  for (size_t i = 0; i < 3; ++i) {
    p(i, i) = 1;
    p(i + 3, i) = 1;
    p(i, i + 3) = 1;
    p(i + 3, i + 3) = -1;
  }
  LieAlgebra out = pair.change_basis(p);
  return LieAlgebra(6, out.constants(), {"e+", "h+", "f+", "e-", "h-", "f-"});
}

Grading sl2_pair_swap_grading() {
  auto g = std::make_shared<const GroupBackend>(GroupBackend::cyclic(2));
  auto ev = g->identity(), od = g->element("g");
  return Grading{g, {ev, ev, ev, od, od, od}};
}

Grading trivial_grading(size_t dim) {
  auto g = std::make_shared<const GroupBackend>(GroupBackend::trivial());
  return Grading{g, std::vector<GroupBackend::Element>(dim, g->identity())};
}

}  // namespace levikit::catalog
