#include "levikit/hopf.hpp"

#include "levikit/error.hpp"

namespace levikit {

namespace {

long idx(size_t i) { return static_cast<long>(i); }

// Dense helpers on raw tensors, used only for validation before sparse tables exist.
struct Raw {
  const HopfTensors& t;
  size_t m;
  const Rational& mu(size_t i, size_t j, size_t k) const { return t.mult[(i * m + j) * m + k]; }
  const Rational& de(size_t i, size_t j, size_t k) const { return t.comult[(i * m + j) * m + k]; }

  Vector product(const Vector& a, const Vector& b) const {
    Vector out = zero_vector(m);
    for (size_t i = 0; i < m; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (size_t j = 0; j < m; ++j) {
        if (sgn(b[j]) == 0) continue;
        const Rational w = a[i] * b[j];
        for (size_t k = 0; k < m; ++k)
          if (sgn(mu(i, j, k)) != 0) out[k] += w * mu(i, j, k);
      }
    }
    return out;
  }
  // Delta(a) as an m x m coefficient matrix.
  Matrix coproduct(const Vector& a) const {
    Matrix out(m, m);
    for (size_t i = 0; i < m; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < m; ++k)
          if (sgn(de(i, j, k)) != 0) out(j, k) += a[i] * de(i, j, k);
    }
    return out;
  }
};

void fail(ErrorKind kind, const std::string& what, std::vector<long> at) { throw Error(kind, what, std::move(at)); }

}  // namespace

void validate_hopf(const HopfTensors& t) {
  const size_t m = t.dim;
  if (m == 0) fail(ErrorKind::ShapeMismatch, "Hopf algebra must have positive dimension", {});
  if (t.mult.size() != m * m * m || t.comult.size() != m * m * m || t.unit.size() != m || t.counit.size() != m ||
      t.antipode.rows() != m || t.antipode.cols() != m)
    fail(ErrorKind::ShapeMismatch, "Hopf tensor shapes disagree with dim", {});
  if (!t.labels.empty() && t.labels.size() != m) fail(ErrorKind::ShapeMismatch, "label count differs from dim", {});
  Raw r{t, m};
  std::vector<Vector> e;
  for (size_t i = 0; i < m; ++i) e.push_back(unit_vector(m, i));
  std::vector<Vector> prod(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) prod[i * m + j] = r.product(e[i], e[j]);

  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k)
        if (r.product(prod[i * m + j], e[k]) != r.product(e[i], prod[j * m + k]))
          fail(ErrorKind::HopfAxiomFailure, "multiplication is not associative", {idx(i), idx(j), idx(k)});
  for (size_t i = 0; i < m; ++i)
    if (r.product(t.unit, e[i]) != e[i] || r.product(e[i], t.unit) != e[i])
      fail(ErrorKind::HopfAxiomFailure, "unit law fails", {idx(i)});

  std::vector<Matrix> cop(m);
  for (size_t i = 0; i < m; ++i) cop[i] = r.coproduct(e[i]);
  for (size_t i = 0; i < m; ++i) {
    // (Delta (x) id) Delta and (id (x) Delta) Delta as m^3 arrays
    std::vector<Rational> left(m * m * m), right(m * m * m);
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) {
        const Rational& w = cop[i](j, k);
        if (sgn(w) == 0) continue;
        for (size_t a = 0; a < m; ++a)
          for (size_t b = 0; b < m; ++b) {
            if (sgn(cop[j](a, b)) != 0) left[(a * m + b) * m + k] += w * cop[j](a, b);
            if (sgn(cop[k](a, b)) != 0) right[(j * m + a) * m + b] += w * cop[k](a, b);
          }
      }
    if (left != right) fail(ErrorKind::HopfAxiomFailure, "comultiplication is not coassociative", {idx(i)});
    for (size_t a = 0; a < m; ++a) {
      Rational l = 0, rr = 0;
      for (size_t b = 0; b < m; ++b) {
        l += cop[i](b, a) * t.counit[b];
        rr += cop[i](a, b) * t.counit[b];
      }
      if (l != (a == i ? 1 : 0) || rr != (a == i ? 1 : 0)) fail(ErrorKind::HopfAxiomFailure, "counit law fails", {idx(i)});
    }
  }

  // Bialgebra: Delta and eps are algebra maps.
  Matrix unit_unit(m, m);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) unit_unit(a, b) = t.unit[a] * t.unit[b];
  if (r.coproduct(t.unit) != unit_unit) fail(ErrorKind::HopfAxiomFailure, "Delta(1) != 1 (x) 1", {});
  if (dot(t.counit, t.unit) != 1) fail(ErrorKind::HopfAxiomFailure, "eps(1) != 1", {});
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (dot(t.counit, prod[i * m + j]) != t.counit[i] * t.counit[j])
        fail(ErrorKind::HopfAxiomFailure, "counit is not multiplicative", {idx(i), idx(j)});
      Matrix lhs = r.coproduct(prod[i * m + j]);
      Matrix rhs(m, m);
      for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
          if (sgn(cop[i](a, b)) == 0) continue;
          for (size_t c = 0; c < m; ++c)
            for (size_t d = 0; d < m; ++d) {
              if (sgn(cop[j](c, d)) == 0) continue;
              const Rational w = cop[i](a, b) * cop[j](c, d);
              const Vector& ac = prod[a * m + c];
              const Vector& bd = prod[b * m + d];
              for (size_t p = 0; p < m; ++p) {
                if (sgn(ac[p]) == 0) continue;
                for (size_t q = 0; q < m; ++q)
                  if (sgn(bd[q]) != 0) rhs(p, q) += w * ac[p] * bd[q];
              }
            }
        }
      if (lhs != rhs) fail(ErrorKind::HopfAxiomFailure, "comultiplication is not multiplicative", {idx(i), idx(j)});
    }

  for (size_t i = 0; i < m; ++i) {
    Vector left = zero_vector(m), right = zero_vector(m);
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) {
        const Rational& w = cop[i](j, k);
        if (sgn(w) == 0) continue;
        axpy(left, w, r.product(t.antipode.col(j), e[k]));
        axpy(right, w, r.product(e[j], t.antipode.col(k)));
      }
    Vector expected = scale(t.counit[i], t.unit);
    if (left != expected || right != expected)
      fail(ErrorKind::AntipodeAxiomFailure, "S(a_(1)) a_(2) or a_(1) S(a_(2)) differs from eps(a) 1", {idx(i)});
  }
}

HopfAlgebra::HopfAlgebra(HopfTensors tensors) : t_(std::move(tensors)) {
  validate_hopf(t_);
  const size_t m = t_.dim;
  if (t_.labels.empty())
    for (size_t i = 0; i < m; ++i) t_.labels.push_back("h" + std::to_string(i));
  mult_sparse_.resize(m * m);
  comult_sparse_.resize(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) {
        if (sgn(mult(i, j, k)) != 0) mult_sparse_[i * m + j].push_back({k, mult(i, j, k)});
        if (sgn(comult(i, j, k)) != 0) comult_sparse_[i].push_back({j, k, comult(i, j, k)});
      }
}

bool HopfAlgebra::is_commutative() const {
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j)
      for (size_t k = 0; k < dim(); ++k)
        if (mult(i, j, k) != mult(j, i, k)) return false;
  return true;
}

bool HopfAlgebra::is_cocommutative() const {
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j)
      for (size_t k = 0; k < dim(); ++k)
        if (comult(i, j, k) != comult(i, k, j)) return false;
  return true;
}

Vector HopfAlgebra::basis_product(size_t i, size_t j) const {
  Vector out = zero_vector(dim());
  for (const auto& e : product_terms(i, j)) out[e.index] = e.value;
  return out;
}

Vector HopfAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out = zero_vector(dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rational w = a[i] * b[j];
      for (const auto& e : product_terms(i, j)) out[e.index] += w * e.value;
    }
  }
  return out;
}

Rational evaluate_functional(const Vector& t, const Vector& a) { return dot(t, a); }

bool is_left_integral(const HopfAlgebra& h, const Vector& t) {
  const size_t m = h.dim();
  for (size_t i = 0; i < m; ++i) {
    Vector lhs = zero_vector(m);
    for (const auto& p : h.coproduct_terms(i))
      if (sgn(t[p.right]) != 0) lhs[p.left] += p.value * t[p.right];
    if (lhs != scale(t[i], h.unit())) return false;
  }
  return true;
}

bool is_ad_invariant(const HopfAlgebra& h, const Vector& t) {
  const size_t m = h.dim();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      Rational lhs = 0;
      for (const auto& p : h.coproduct_terms(a)) {
        Vector x = h.multiply(h.multiply(unit_vector(m, p.left), unit_vector(m, b)), h.antipode().col(p.right));
        lhs += p.value * dot(t, x);
      }
      if (lhs != h.counit()[a] * t[b]) return false;
    }
  return true;
}

GroupAlgebra group_algebra(const GroupBackend& g) {
  if (!g.is_finite()) throw Error(ErrorKind::InfiniteGroup, "group algebra needs a finite group");
  const size_t m = g.order();
  HopfTensors t;
  t.dim = m;
  t.labels = g.labels();
  t.mult.assign(m * m * m, 0);
  t.comult.assign(m * m * m, 0);
  t.unit = unit_vector(m, g.identity_index());
  t.counit = Vector(m, 1);
  t.antipode = Matrix(m, m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) t.mult[(i * m + j) * m + g.table()[i][j]] = 1;
    t.comult[(i * m + i) * m + i] = 1;
    t.antipode(static_cast<size_t>(g.inverse(g.element(i))[0]), i) = 1;
  }
  GroupAlgebra out;
  out.hopf = std::make_shared<const HopfAlgebra>(std::move(t));
  out.integral.t = unit_vector(m, g.identity_index());
  out.integral.normalized = true;
  if (!is_left_integral(*out.hopf, out.integral.t))
    throw Error(ErrorKind::InternalInconsistency, "identity indicator is not a left integral");
  out.integral.ad_invariant = is_ad_invariant(*out.hopf, out.integral.t);
  if (!out.integral.ad_invariant) throw Error(ErrorKind::InternalInconsistency, "identity indicator is not ad-invariant");
  return out;
}

HopfAlgebra sweedler4() {
  // basis 0:1  1:g  2:x  3:gx
  const size_t m = 4;
  HopfTensors t;
  t.dim = m;
  t.labels = {"1", "g", "x", "gx"};
  t.mult.assign(m * m * m, 0);
  t.comult.assign(m * m * m, 0);
  auto mu = [&](size_t i, size_t j, size_t k, long v) { t.mult[(i * m + j) * m + k] = v; };
  auto de = [&](size_t i, size_t j, size_t k, long v) { t.comult[(i * m + j) * m + k] = v; };
  for (size_t i = 0; i < m; ++i) {
    mu(0, i, i, 1);
    mu(i, 0, i, 1);
  }
  mu(1, 1, 0, 1);   // g g = 1
  mu(1, 2, 3, 1);   // g x = gx
  mu(1, 3, 2, 1);   // g gx = x
  mu(2, 1, 3, -1);  // x g = -gx
  mu(3, 1, 2, -1);  // gx g = -x
  // x x, x gx, gx x, gx gx all vanish
  de(0, 0, 0, 1);
  de(1, 1, 1, 1);
  de(2, 1, 2, 1);  // Delta x = g (x) x + x (x) 1
  de(2, 2, 0, 1);
  de(3, 0, 3, 1);  // Delta gx = 1 (x) gx + gx (x) g
  de(3, 3, 1, 1);
  t.unit = unit_vector(m, 0);
  t.counit = {1, 1, 0, 0};
  t.antipode = Matrix(m, m);
  t.antipode(0, 0) = 1;
  t.antipode(1, 1) = 1;
  t.antipode(3, 2) = -1;  // S x = -gx
  t.antipode(2, 3) = 1;   // S gx = x
  return HopfAlgebra(std::move(t));
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const size_t m = h.dim();
  HopfTensors t;
  t.dim = m;
  for (const auto& l : h.labels()) t.labels.push_back(l + "*");
  t.mult.assign(m * m * m, 0);
  t.comult.assign(m * m * m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) {
        // (f g)(h_i) = sum Delta[i][j][k] f(h_j) g(h_k)
        t.mult[(j * m + k) * m + i] = h.comult(i, j, k);
        // Delta f (h_i (x) h_j) = f(h_i h_j)
        t.comult[(k * m + i) * m + j] = h.mult(i, j, k);
      }
  t.unit = h.counit();
  t.counit = h.unit();
  t.antipode = h.antipode().transpose();
  return HopfAlgebra(std::move(t));
}

bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (&a == &b) return true;
  const auto& x = a.tensors();
  const auto& y = b.tensors();
  return x.dim == y.dim && x.mult == y.mult && x.comult == y.comult && x.unit == y.unit && x.counit == y.counit &&
         x.antipode == y.antipode;
}

Integral find_normalized_integral(const HopfAlgebra& h) {
  const size_t m = h.dim();
  // Unknown t; equations: sum_k Delta[i][j][k] t_k - t_i unit_j = 0 for all i, j.
  Matrix eqs(m * m, m);
  for (size_t i = 0; i < m; ++i) {
    for (const auto& p : h.coproduct_terms(i)) eqs(i * m + p.left, p.right) += p.value;
    for (size_t j = 0; j < m; ++j) eqs(i * m + j, i) -= h.unit()[j];
  }
  Matrix space = kernel(eqs);
  if (space.rows() == 0) throw Error(ErrorKind::NoIntegral, "the only left integral is zero");
  for (size_t r = 0; r < space.rows(); ++r) {
    Vector t = space.row(r);
    Rational at_one = dot(t, h.unit());
    if (sgn(at_one) == 0) continue;
    Integral out;
    out.t = scale(1 / at_one, t);
    out.normalized = true;
    out.ad_invariant = is_ad_invariant(h, out.t);
    return out;
  }
  // Each kernel basis vector kills 1, hence so does the whole span.
  throw Error(ErrorKind::NormalizationImpossible,
              "every left integral vanishes on 1 (integral space of dimension " + std::to_string(space.rows()) + ")",
              {static_cast<long>(space.rows())});
}

}  // namespace levikit
