#include "levikit/cohomology.hpp"

#include <algorithm>

#include "levikit/error.hpp"

namespace levikit {

namespace {

long idx(size_t i) { return static_cast<long>(i); }

void check_representation_shape(const LieAlgebra& l, const std::vector<Matrix>& psi, size_t d) {
  if (psi.size() != l.dim()) throw Error(ErrorKind::ShapeMismatch, "one representation matrix per basis element required");
  for (const auto& p : psi)
    if (p.rows() != d || p.cols() != d) throw Error(ErrorKind::ShapeMismatch, "representation matrices have the wrong size");
}

// Bubble sort; returns the sign of the permutation applied.
int sort_with_sign(std::vector<size_t>& s) {
  int sign = 1;
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = 0; b + 1 < s.size() - a; ++b)
      if (s[b] > s[b + 1]) {
        std::swap(s[b], s[b + 1]);
        sign = -sign;
      }
  return sign;
}

}  // namespace

Cochain::Cochain(size_t degree, size_t algebra_dim, size_t space_dim) : degree_(degree), n_(algebra_dim), d_(space_dim) {
  if (degree < 1 || degree > 3) throw Error(ErrorKind::DimensionMismatch, "cochains are stored in degrees 1 to 3");
  std::vector<size_t> t(degree);
  auto rec = [&](auto&& self, size_t pos, size_t start) -> void {
    if (pos == degree) {
      tuples_.push_back(t);
      return;
    }
    for (size_t i = start; i < n_; ++i) {
      t[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  values_.assign(tuples_.size(), zero_vector(d_));
}

size_t Cochain::slot(std::vector<size_t> sorted) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), sorted);
  return static_cast<size_t>(it - tuples_.begin());
}

Vector Cochain::value(const std::vector<size_t>& idx_in) const {
  if (idx_in.size() != degree_) throw Error(ErrorKind::DimensionMismatch, "wrong number of arguments for this cochain");
  std::vector<size_t> s = idx_in;
  const int sign = sort_with_sign(s);
  for (size_t a = 0; a + 1 < s.size(); ++a)
    if (s[a] == s[a + 1]) return zero_vector(d_);
  Vector v = values_[slot(s)];
  return sign > 0 ? v : scale(-1, v);
}

void Cochain::set(const std::vector<size_t>& idx_in, const Vector& v) {
  if (idx_in.size() != degree_ || v.size() != d_) throw Error(ErrorKind::DimensionMismatch, "cochain value has the wrong shape");
  std::vector<size_t> s = idx_in;
  const int sign = sort_with_sign(s);
  for (size_t a = 0; a + 1 < s.size(); ++a)
    if (s[a] == s[a + 1]) throw Error(ErrorKind::DimensionMismatch, "alternating cochains vanish on repeated arguments");
  values_[slot(s)] = sign > 0 ? v : scale(-1, v);
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return levikit::is_zero(v); });
}

Cochain coboundary(const LieAlgebra& l, const std::vector<Matrix>& psi, const Matrix& omega) {
  const size_t n = l.dim(), d = omega.rows();
  if (omega.cols() != n) throw Error(ErrorKind::ShapeMismatch, "1-cochain must be dim V x dim L");
  check_representation_shape(l, psi, d);
  Cochain out(2, n, d);
  for (const auto& t : out.tuples()) {
    const size_t x = t[0], y = t[1];
    Vector v = sub(psi[x] * omega.col(y), psi[y] * omega.col(x));
    v = sub(v, omega * l.bracket_basis(x, y));
    out.set(t, v);
  }
  return out;
}

Cochain coboundary(const LieAlgebra& l, const std::vector<Matrix>& psi, const Cochain& phi) {
  const size_t n = l.dim(), d = phi.space_dim();
  if (phi.degree() != 2 || phi.algebra_dim() != n) throw Error(ErrorKind::ShapeMismatch, "expected a 2-cochain on L");
  check_representation_shape(l, psi, d);
  // phi(v, e_z) for a general first argument v
  auto phi_on = [&](const Vector& v, size_t z) {
    Vector out = zero_vector(d);
    for (size_t k = 0; k < n; ++k)
      if (sgn(v[k]) != 0 && k != z) axpy(out, v[k], phi.value({k, z}));
    return out;
  };
  Cochain out(3, n, d);
  for (const auto& t : out.tuples()) {
    const size_t x = t[0], y = t[1], z = t[2];
    Vector v = psi[x] * phi.value({y, z});
    v = sub(v, psi[y] * phi.value({x, z}));
    v = add(v, psi[z] * phi.value({x, y}));
    v = sub(v, phi_on(l.bracket_basis(x, y), z));
    v = add(v, phi_on(l.bracket_basis(x, z), y));
    v = sub(v, phi_on(l.bracket_basis(y, z), x));
    out.set(t, v);
  }
  return out;
}

Cochain bracket_cochain(const LieAlgebra& l) {
  Cochain out(2, l.dim(), l.dim());
  for (const auto& t : out.tuples()) out.set(t, l.bracket_basis(t[0], t[1]));
  return out;
}

bool is_colinear_cochain(const Matrix& omega, const Structure& on_algebra, const Structure& on_space) {
  return is_structure_map(omega, on_algebra, on_space);
}

bool is_colinear_cochain(const Cochain& w, const Structure& on_algebra, const Structure& on_space) {
  if (w.degree() != 2) throw Error(ErrorKind::DimensionMismatch, "colinearity is checked on 2-cochains");
  Structure sl = canonical_structure(on_algebra), sv = canonical_structure(on_space);
  if (sl.index() != sv.index()) throw Error(ErrorKind::GroupMismatch, "algebra and space carry different kinds of structure");
  const size_t n = w.algebra_dim(), d = w.space_dim();

  if (std::holds_alternative<std::monostate>(sl)) return true;

  if (const auto* a = std::get_if<CyclicAction>(&sl)) {
    const Matrix& pv = std::get<CyclicAction>(sv).phi;
    for (const auto& t : w.tuples()) {
      Vector px = a->phi.col(t[0]), py = a->phi.col(t[1]);
      Vector rhs = zero_vector(d);
      for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
          if (p != q && sgn(px[p]) != 0 && sgn(py[q]) != 0) axpy(rhs, px[p] * py[q], w.value({p, q}));
      if (pv * w.value(t) != rhs) return false;
    }
    return true;
  }

  if (const auto* gl = std::get_if<Grading>(&sl)) {
    const auto& gv = std::get<Grading>(sv);
    if (!(*gl->group == *gv.group)) throw Error(ErrorKind::GroupMismatch, "gradings over different groups");
    for (size_t r = 0; r < w.tuples().size(); ++r) {
      const auto& t = w.tuples()[r];
      auto target = gl->group->multiply(gl->degrees[t[0]], gl->degrees[t[1]]);
      const Vector& v = w.values()[r];
      for (size_t p = 0; p < d; ++p)
        if (sgn(v[p]) != 0 && gv.degrees[p] != target) return false;
    }
    return true;
  }

  const auto& cl = std::get<ComoduleStructure>(sl);
  const auto& cv = std::get<ComoduleStructure>(sv);
  if (!same_hopf(*cl.hopf, *cv.hopf)) throw Error(ErrorKind::GroupMismatch, "coactions over different Hopf algebras");
  const HopfAlgebra& h = *cl.hopf;
  const size_t m = h.dim();
  for (const auto& t : w.tuples()) {
    // both sides as d x m matrices: entry (p, q) is the coefficient of e_p (x) h_q
    Matrix lhs(d, m), rhs(d, m);
    Vector v = w.value(t);
    for (size_t x = 0; x < d; ++x)
      if (sgn(v[x]) != 0)
        for (size_t p = 0; p < d; ++p)
          for (size_t q = 0; q < m; ++q) lhs(p, q) += v[x] * cv.at(x, p, q);
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < m; ++q) {
        if (sgn(cl.at(t[0], p, q)) == 0) continue;
        for (size_t r = 0; r < n; ++r)
          for (size_t s = 0; s < m; ++s) {
            if (r == p || sgn(cl.at(t[1], r, s)) == 0) continue;
            Vector val = w.value({p, r});
            const Rational c = cl.at(t[0], p, q) * cl.at(t[1], r, s);
            for (const auto& e : h.product_terms(q, s))
              for (size_t x = 0; x < d; ++x)
                if (sgn(val[x]) != 0) rhs(x, e.index) += c * e.value * val[x];
          }
      }
    if (lhs != rhs) return false;
  }
  return true;
}

Matrix solve_coboundary(const LieAlgebra& l, const std::vector<Matrix>& psi, const Cochain& phi) {
  const size_t n = l.dim(), d = phi.space_dim();
  if (!coboundary(l, psi, phi).is_zero()) throw Error(ErrorKind::NotACocycle, "phi is not a 2-cocycle");
  // Unknown omega(p, k) at position p * n + k.
  const auto& tuples = phi.tuples();
  Matrix a(tuples.size() * d, d * n);
  Vector b(tuples.size() * d);
  for (size_t r = 0; r < tuples.size(); ++r) {
    const size_t i = tuples[r][0], j = tuples[r][1];
    const Vector& target = phi.values()[r];
    for (size_t p = 0; p < d; ++p) {
      const size_t row = r * d + p;
      b[row] = target[p];
      for (size_t q = 0; q < d; ++q) {
        a(row, q * n + j) += psi[i](p, q);
        a(row, q * n + i) -= psi[j](p, q);
      }
      for (size_t k = 0; k < n; ++k)
        if (sgn(l.c(i, j, k)) != 0) a(row, p * n + k) -= l.c(i, j, k);
    }
  }
  auto sol = solve(a, b);
  if (!sol) throw Error(ErrorKind::NoSolution, "phi is not a coboundary");
  Matrix omega = unflatten(sol->x, d, n);
  if (coboundary(l, psi, omega) != phi) throw Error(ErrorKind::InternalInconsistency, "d omega != phi after solving");
  return omega;
}

Matrix solve_coboundary_colinear(const HLModule& m, const Cochain& phi, const AveragingRoute& route) {
  const LieAlgebra& l = m.algebra;
  if (!killing_nondegenerate(l)) throw Error(ErrorKind::NotSemisimple, "colinear solving needs a semisimple algebra");
  if (route.kind() == AveragingRoute::Kind::Unavailable)
    throw Error(ErrorKind::IntegralUnavailable, "no normalized integral is available for averaging");
  if (route.kind() == AveragingRoute::Kind::Integral && !route.integral()->ad_invariant)
    throw Error(ErrorKind::IntegralUnavailable, "the normalized integral is not ad-invariant");
  if (!validate_hlmodule(m)) throw Error(ErrorKind::SymmetryRequired, "the (H,L)-module is not symmetric");
  if (!is_colinear_cochain(phi, m.algebra_structure, m.space_structure))
    throw Error(ErrorKind::CoactionFailure, "phi is not colinear");

  Matrix nu = solve_coboundary(l, m.psi, phi);
  Matrix averaged = route.average(nu, m.algebra_structure, m.space_structure);
  Cochain check = coboundary(l, m.psi, averaged);
  if (check != phi) {
    for (size_t r = 0; r < phi.tuples().size(); ++r)
      if (check.values()[r] != phi.values()[r])
        throw Error(ErrorKind::InternalInconsistency, "d of the averaged solution differs from phi",
                    {idx(phi.tuples()[r][0]), idx(phi.tuples()[r][1])});
  }
  return averaged;
}

}  // namespace levikit
