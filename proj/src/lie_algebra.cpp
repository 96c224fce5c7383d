#include "levikit/lie_algebra.hpp"

#include <deque>

#include "levikit/error.hpp"

namespace levikit {

namespace {

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

long idx(size_t i) { return static_cast<long>(i); }

}  // namespace

void validate_lie(size_t n, const std::vector<Rational>& c) {
  if (c.size() != n * n * n)
    throw Error(ErrorKind::ShapeMismatch, "structure tensor must have dim^3 entries");
  auto at = [&](size_t i, size_t j, size_t k) -> const Rational& { return c[(i * n + j) * n + k]; };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (at(i, j, k) != -at(j, i, k))
          throw Error(ErrorKind::AntisymmetryViolation,
                      "c[i][j][k] != -c[j][i][k]", {idx(i), idx(j), idx(k)});
  // [[e_a, e_b], e_c] = sum_m c(a,b,m) c(m,c,.)
  auto nested = [&](size_t a, size_t b, size_t cc, Vector& out) {
    for (size_t m = 0; m < n; ++m) {
      const Rational& w = at(a, b, m);
      if (sgn(w) == 0) continue;
      for (size_t k = 0; k < n; ++k)
        if (sgn(at(m, cc, k)) != 0) out[k] += w * at(m, cc, k);
    }
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vector defect = zero_vector(n);
        nested(i, j, k, defect);
        nested(j, k, i, defect);
        nested(k, i, j, defect);
        if (!is_zero(defect))
          throw Error(ErrorKind::JacobiViolation, "Jacobi defect " + vector_text(defect), {idx(i), idx(j), idx(k)});
      }
}

LieAlgebra::LieAlgebra(size_t dim, std::vector<Rational> constants, std::vector<std::string> labels)
    : dim_(dim), c_(std::move(constants)), labels_(std::move(labels)) {
  validate_lie(dim_, c_);
  if (labels_.empty())
    for (size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (labels_.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "label count differs from dimension");
  ad_.reserve(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    Matrix m(dim_, dim_);
    for (size_t j = 0; j < dim_; ++j)
      for (size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
    ad_.push_back(std::move(m));
  }
}

LieAlgebra LieAlgebra::from_brackets(size_t dim, const std::map<std::pair<size_t, size_t>, Vector>& brackets,
                                     std::vector<std::string> labels) {
  std::vector<Rational> c(dim * dim * dim);
  for (const auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (i >= dim || j >= dim || v.size() != dim)
      throw Error(ErrorKind::ShapeMismatch, "bracket entry out of range", {idx(i), idx(j)});
    if (i == j) {
      if (!is_zero(v)) throw Error(ErrorKind::AntisymmetryViolation, "[e_i, e_i] must vanish", {idx(i), idx(i)});
      continue;
    }
    for (size_t k = 0; k < dim; ++k) {
      c[(i * dim + j) * dim + k] = v[k];
      c[(j * dim + i) * dim + k] = -v[k];
    }
  }
  return LieAlgebra(dim, std::move(c), std::move(labels));
}

LieAlgebra LieAlgebra::abelian(size_t dim) { return LieAlgebra(dim, std::vector<Rational>(dim * dim * dim)); }

Vector LieAlgebra::bracket_basis(size_t i, size_t j) const {
  Vector v(dim_);
  for (size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "bracket: vector length");
  Vector out = zero_vector(dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational w = x[i] * y[j];
      for (size_t k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) out[k] += w * c(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "ad: vector length");
  Matrix m(dim_, dim_);
  for (size_t i = 0; i < dim_; ++i)
    if (sgn(x[i]) != 0) m += ad_[i] * x[i];
  return m;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& p) const {
  auto pinv = inverse(p);
  if (!pinv || p.rows() != dim_) throw Error(ErrorKind::DimensionMismatch, "change_basis needs an invertible dim x dim matrix");
  std::vector<Rational> c(dim_ * dim_ * dim_);
  for (size_t a = 0; a < dim_; ++a)
    for (size_t b = a + 1; b < dim_; ++b) {
      Vector v = *pinv * bracket(p.col(a), p.col(b));
      for (size_t k = 0; k < dim_; ++k) {
        c[(a * dim_ + b) * dim_ + k] = v[k];
        c[(b * dim_ + a) * dim_ + k] = -v[k];
      }
    }
  return LieAlgebra(dim_, std::move(c));
}

namespace {

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  Rational t = 0;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(b(j, i)) != 0) t += a(i, j) * b(j, i);
  return t;
}

}  // namespace

Matrix killing_form(const LieAlgebra& l) {
  const size_t n = l.dim();
  Matrix k(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      k(i, j) = trace_of_product(l.ad_basis(i), l.ad_basis(j));
      k(j, i) = k(i, j);
    }
  return k;
}

Matrix killing_form_on(const LieAlgebra& l, const Subspace& s) {
  // ad of the subalgebra acting on itself, in the echelon basis of s
  std::vector<Matrix> ads;
  for (size_t a = 0; a < s.dim(); ++a) {
    Matrix m(s.dim(), s.dim());
    Vector x = s.basis_vector(a);
    for (size_t b = 0; b < s.dim(); ++b) m.set_col(b, s.coordinates(l.bracket(x, s.basis_vector(b))));
    ads.push_back(std::move(m));
  }
  Matrix k(s.dim(), s.dim());
  for (size_t a = 0; a < s.dim(); ++a)
    for (size_t b = a; b < s.dim(); ++b) k(a, b) = k(b, a) = trace_of_product(ads[a], ads[b]);
  return k;
}

bool killing_nondegenerate(const LieAlgebra& l) { return rank(killing_form(l)) == l.dim(); }

Subspace bracket_spaces(const LieAlgebra& l, const Subspace& u, const Subspace& v) {
  SpanBuilder out(l.dim());
  for (size_t a = 0; a < u.dim(); ++a) {
    Vector x = u.basis_vector(a);
    for (size_t b = 0; b < v.dim(); ++b) out.add(l.bracket(x, v.basis_vector(b)));
  }
  return out.subspace();
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
  for (size_t a = 0; a < s.dim(); ++a)
    for (size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(l.bracket(s.basis_vector(a), s.basis_vector(b)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  for (size_t i = 0; i < l.dim(); ++i)
    for (size_t b = 0; b < s.dim(); ++b)
      if (!s.contains(l.ad_basis(i) * s.basis_vector(b))) return false;
  return true;
}

std::vector<Subspace> series(const LieAlgebra& l, SeriesKind kind) {
  return series(l, Subspace::full(l.dim()), kind);
}

std::vector<Subspace> series(const LieAlgebra& l, const Subspace& s, SeriesKind kind) {
  std::vector<Subspace> out{s};
  while (true) {
    const Subspace& cur = out.back();
    Subspace next = bracket_spaces(l, kind == SeriesKind::Derived ? cur : s, cur);
    if (next == cur) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_solvable(const LieAlgebra& l, const Subspace& s) { return series(l, s, SeriesKind::Derived).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& l, const Subspace& s) {
  return series(l, s, SeriesKind::LowerCentral).back().is_zero();
}

Subspace solvable_radical(const LieAlgebra& l) {
  const size_t n = l.dim();
  Subspace derived = bracket_spaces(l, Subspace::full(n), Subspace::full(n));
  Matrix kappa = killing_form(l);
  Subspace r = derived.is_zero() ? Subspace::full(n) : null_space(derived.basis() * kappa);
  if (!is_ideal(l, r) || !is_solvable(l, r))
    throw Error(ErrorKind::InternalInconsistency, "Killing-orthogonal of [L,L] is not a solvable ideal");
  if (r.dim() < n && !killing_nondegenerate(quotient_algebra(l, r)))
    throw Error(ErrorKind::InternalInconsistency, "L/R has a degenerate Killing form");
  return r;
}

Matrix AssociativeHull::trace_gram() const {
  Matrix g(basis.size(), basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) g(i, j) = g(j, i) = trace_of_product(basis[i], basis[j]);
  return g;
}

Matrix AssociativeHull::trace_radical() const { return kernel(trace_gram()); }

AssociativeHull associative_hull(const std::vector<Matrix>& generators, size_t ambient) {
  AssociativeHull hull;
  hull.ambient = ambient;
  SpanBuilder span(ambient * ambient);
  std::deque<Matrix> queue;
  for (const auto& g : generators)
    if (span.add(flatten(g))) {
      hull.basis.push_back(g);
      queue.push_back(g);
    }
  // Every word in the generators is a right multiple of a shorter word by a generator.
  while (!queue.empty() && span.dim() < ambient * ambient) {
    Matrix a = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Matrix p = a * g;
      if (span.add(flatten(p))) {
        hull.basis.push_back(p);
        queue.push_back(std::move(p));
      }
    }
  }
  return hull;
}

namespace {

Subspace nilradical_unchecked(const LieAlgebra& l) {
  const size_t n = l.dim();
  if (n == 0) return Subspace(0);
  std::vector<Matrix> gens;
  for (size_t i = 0; i < n; ++i) gens.push_back(l.ad_basis(i));
  AssociativeHull hull = associative_hull(gens, n);
  // ad x lies in A, so ad x is in the trace radical iff tr(ad x * a) = 0 for every basis element a.
  Matrix m(hull.basis.size(), n);
  for (size_t j = 0; j < hull.basis.size(); ++j)
    for (size_t k = 0; k < n; ++k) m(j, k) = trace_of_product(l.ad_basis(k), hull.basis[j]);
  return null_space(m);
}

}  // namespace

Subspace nilradical(const LieAlgebra& l) {
  Subspace nil = nilradical_unchecked(l);
  if (!is_ideal(l, nil) || !is_nilpotent(l, nil))
    throw Error(ErrorKind::InternalInconsistency, "trace-radical preimage is not a nilpotent ideal");
  Subspace r = solvable_radical(l);
  if (!nil.contains(bracket_spaces(l, Subspace::full(l.dim()), r)))
    throw Error(ErrorKind::InternalInconsistency, "[L, R] is not contained in the nilradical");
  // Maximality: the preimage of the quotient's nilradical is an ideal containing N, so it
  // must either equal N or fail to be nilpotent.
  if (nil.dim() < l.dim()) {
    Subspace upstairs = nilradical_unchecked(quotient_algebra(l, nil));
    std::vector<Vector> gens = nil.basis_vectors();
    for (size_t k = 0; k < upstairs.dim(); ++k) gens.push_back(section_vector(nil, upstairs.basis_vector(k)));
    Subspace preimage = Subspace::span(l.dim(), gens);
    if (preimage != nil && is_nilpotent(l, preimage))
      throw Error(ErrorKind::InternalInconsistency, "a nilpotent ideal strictly contains the computed nilradical");
  }
  return nil;
}

Subspace centralizer(const LieAlgebra& l, const Subspace& m) {
  const size_t n = l.dim();
  // [x, b] = -ad(b) x, so stack the ad matrices of the basis of m.
  Matrix stacked(0, n);
  for (size_t b = 0; b < m.dim(); ++b) stacked = Matrix::vstack(stacked, l.ad(m.basis_vector(b)));
  return null_space(stacked);
}

LieAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal) {
  auto cols = ideal.complement_columns();
  const size_t q = cols.size();
  std::vector<Rational> c(q * q * q);
  for (size_t a = 0; a < q; ++a)
    for (size_t b = a + 1; b < q; ++b) {
      Vector v = quotient_coordinates(ideal, l.bracket_basis(cols[a], cols[b]));
      for (size_t k = 0; k < q; ++k) {
        c[(a * q + b) * q + k] = v[k];
        c[(b * q + a) * q + k] = -v[k];
      }
    }
  std::vector<std::string> labels;
  for (size_t col : cols) labels.push_back(l.labels()[col]);
  return LieAlgebra(q, std::move(c), std::move(labels));
}

LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s) {
  const size_t d = s.dim();
  std::vector<Rational> c(d * d * d);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = a + 1; b < d; ++b) {
      Vector v = s.coordinates(l.bracket(s.basis_vector(a), s.basis_vector(b)));
      for (size_t k = 0; k < d; ++k) {
        c[(a * d + b) * d + k] = v[k];
        c[(b * d + a) * d + k] = -v[k];
      }
    }
  return LieAlgebra(d, std::move(c));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const size_t n = a.dim() + b.dim();
  std::vector<Rational> c(n * n * n);
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      for (size_t k = 0; k < a.dim(); ++k) c[(i * n + j) * n + k] = a.c(i, j, k);
  const size_t o = a.dim();
  for (size_t i = 0; i < b.dim(); ++i)
    for (size_t j = 0; j < b.dim(); ++j)
      for (size_t k = 0; k < b.dim(); ++k) c[((o + i) * n + o + j) * n + o + k] = b.c(i, j, k);
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return LieAlgebra(n, std::move(c), std::move(labels));
}

}  // namespace levikit
