#include "levikit/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "levikit/error.hpp"

namespace levikit {

namespace {

long idx(size_t i) { return static_cast<long>(i); }

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

// Nonzero entries of rho(e_i) as (j, k, value).
struct CoTerm {
  size_t j, k;
  Rational value;
};

std::vector<std::vector<CoTerm>> sparse_coaction(const ComoduleStructure& c) {
  const size_t m = c.hopf->dim();
  std::vector<std::vector<CoTerm>> out(c.dim);
  for (size_t i = 0; i < c.dim; ++i)
    for (size_t j = 0; j < c.dim; ++j)
      for (size_t k = 0; k < m; ++k)
        if (sgn(c.at(i, j, k)) != 0) out[i].push_back({j, k, c.at(i, j, k)});
  return out;
}

}  // namespace

Matrix ComoduleStructure::coefficient_map(size_t k) const {
  Matrix m(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) m(j, i) = at(i, j, k);
  return m;
}

bool has_structure(const Structure& s) { return !std::holds_alternative<std::monostate>(s); }

std::string structure_kind(const Structure& s) {
  return std::visit(Overload{[](const std::monostate&) { return std::string("none"); },
                             [](const Grading&) { return std::string("grading"); },
                             [](const ComoduleStructure&) { return std::string("comodule"); },
                             [](const ModuleStructure&) { return std::string("module"); },
                             [](const CyclicAction&) { return std::string("automorphism"); }},
                    s);
}

void validate_grading_space(size_t dim, const Grading& g) {
  if (!g.group) throw Error(ErrorKind::GradingFailure, "grading without a group");
  if (g.degrees.size() != dim) throw Error(ErrorKind::ShapeMismatch, "grading must assign a degree to every basis vector");
  for (size_t i = 0; i < dim; ++i)
    if (!g.group->is_element(g.degrees[i])) throw Error(ErrorKind::GradingFailure, "degree is not a group element", {idx(i)});
}

void validate_grading(const LieAlgebra& l, const Grading& g) {
  validate_grading_space(l.dim(), g);
  for (size_t i = 0; i < l.dim(); ++i)
    for (size_t j = 0; j < l.dim(); ++j) {
      auto d = g.group->multiply(g.degrees[i], g.degrees[j]);
      for (size_t k = 0; k < l.dim(); ++k)
        if (sgn(l.c(i, j, k)) != 0 && g.degrees[k] != d)
          throw Error(ErrorKind::GradingFailure,
                      "component of [e_i, e_j] has degree " + g.group->format(g.degrees[k]) + ", expected " +
                          g.group->format(d),
                      {idx(i), idx(j), idx(k)});
    }
}

void validate_comodule_space(const ComoduleStructure& c) {
  if (!c.hopf) throw Error(ErrorKind::CoactionFailure, "coaction without a Hopf algebra");
  const size_t m = c.hopf->dim(), n = c.dim;
  if (c.rho.size() != n * n * m) throw Error(ErrorKind::ShapeMismatch, "coaction tensor must have dim*dim*hopf_dim entries");
  auto terms = sparse_coaction(c);
  for (size_t i = 0; i < n; ++i) {
    std::map<std::tuple<size_t, size_t, size_t>, Rational> left, right;
    for (const auto& t : terms[i]) {
      for (const auto& u : terms[t.j]) left[{u.j, u.k, t.k}] += t.value * u.value;
      for (const auto& p : c.hopf->coproduct_terms(t.k)) right[{t.j, p.left, p.right}] += t.value * p.value;
    }
    std::erase_if(left, [](const auto& kv) { return sgn(kv.second) == 0; });
    std::erase_if(right, [](const auto& kv) { return sgn(kv.second) == 0; });
    if (left != right) throw Error(ErrorKind::CoactionFailure, "coaction is not coassociative", {idx(i)});
    Vector counit = zero_vector(n);
    for (const auto& t : terms[i]) counit[t.j] += t.value * c.hopf->counit()[t.k];
    if (counit != unit_vector(n, i)) throw Error(ErrorKind::CoactionFailure, "counit law (id (x) eps) rho = id fails", {idx(i)});
  }
}

void validate_coaction(const LieAlgebra& l, const ComoduleStructure& c) {
  if (c.dim != l.dim()) throw Error(ErrorKind::DimensionMismatch, "coaction dimension differs from algebra dimension");
  validate_comodule_space(c);
  const size_t n = l.dim(), m = c.hopf->dim();
  auto terms = sparse_coaction(c);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      Matrix lhs(n, m), rhs(n, m);
      for (size_t x = 0; x < n; ++x) {
        if (sgn(l.c(a, b, x)) == 0) continue;
        for (const auto& t : terms[x]) lhs(t.j, t.k) += l.c(a, b, x) * t.value;
      }
      for (const auto& p : terms[a])
        for (const auto& q : terms[b]) {
          const Rational w = p.value * q.value;
          for (const auto& h : c.hopf->product_terms(p.k, q.k))
            for (size_t x = 0; x < n; ++x)
              if (sgn(l.c(p.j, q.j, x)) != 0) rhs(x, h.index) += w * h.value * l.c(p.j, q.j, x);
        }
      if (lhs != rhs)
        throw Error(ErrorKind::CoactionFailure, "rho([a,b]) != [a_(0), b_(0)] (x) a_(1) b_(1)", {idx(a), idx(b)});
    }
}

void validate_module_space(const ModuleStructure& a) {
  if (!a.hopf) throw Error(ErrorKind::ActionFailure, "action without a Hopf algebra");
  const size_t m = a.hopf->dim(), n = a.dim;
  if (a.act.size() != m) throw Error(ErrorKind::ShapeMismatch, "one action matrix per Hopf basis element required");
  for (size_t i = 0; i < m; ++i)
    if (a.act[i].rows() != n || a.act[i].cols() != n)
      throw Error(ErrorKind::ShapeMismatch, "action matrix has wrong shape", {idx(i)});
  Matrix one(n, n);
  for (size_t i = 0; i < m; ++i) one += a.act[i] * a.hopf->unit()[i];
  if (one != Matrix::identity(n)) throw Error(ErrorKind::ActionFailure, "1 does not act as the identity");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Matrix prod(n, n);
      for (const auto& e : a.hopf->product_terms(i, j)) prod += a.act[e.index] * e.value;
      if (prod != a.act[i] * a.act[j])
        throw Error(ErrorKind::ActionFailure, "(h_i h_j) v != h_i (h_j v)", {idx(i), idx(j)});
    }
}

void validate_action(const LieAlgebra& l, const ModuleStructure& a) {
  if (a.dim != l.dim()) throw Error(ErrorKind::DimensionMismatch, "action dimension differs from algebra dimension");
  validate_module_space(a);
  const size_t n = l.dim();
  for (size_t h = 0; h < a.hopf->dim(); ++h)
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y) {
        Vector lhs = a.act[h] * l.bracket_basis(x, y);
        Vector rhs = zero_vector(n);
        for (const auto& p : a.hopf->coproduct_terms(h))
          axpy(rhs, p.value, l.bracket(a.act[p.left].col(x), a.act[p.right].col(y)));
        if (lhs != rhs)
          throw Error(ErrorKind::ActionFailure, "h([a,b]) != [h_(1) a, h_(2) b]", {idx(h), idx(x), idx(y)});
      }
}

void validate_automorphism(const LieAlgebra& l, const CyclicAction& a) {
  const size_t n = l.dim();
  if (a.phi.rows() != n || a.phi.cols() != n) throw Error(ErrorKind::ShapeMismatch, "automorphism must be dim x dim");
  if (rank(a.phi) != n) throw Error(ErrorKind::NotAnAutomorphism, "map is not invertible");
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y)
      if (a.phi * l.bracket_basis(x, y) != l.bracket(a.phi.col(x), a.phi.col(y)))
        throw Error(ErrorKind::NotAnAutomorphism, "phi([a,b]) != [phi a, phi b]", {idx(x), idx(y)});
}

void validate_structure(const LieAlgebra& l, const Structure& s) {
  std::visit(Overload{[](const std::monostate&) {}, [&](const Grading& g) { validate_grading(l, g); },
                      [&](const ComoduleStructure& c) { validate_coaction(l, c); },
                      [&](const ModuleStructure& a) { validate_action(l, a); },
                      [&](const CyclicAction& a) { validate_automorphism(l, a); }},
             s);
}

ComoduleStructure grading_to_comodule(const Grading& g) {
  if (!g.group || !g.group->is_finite())
    throw Error(ErrorKind::InfiniteGroup, "only finite gradings convert to group-algebra coactions");
  ComoduleStructure c;
  c.hopf = group_algebra(*g.group).hopf;
  c.dim = g.degrees.size();
  c.rho.assign(c.dim * c.dim * c.hopf->dim(), 0);
  for (size_t i = 0; i < c.dim; ++i) c.at(i, i, static_cast<size_t>(g.degrees[i].at(0))) = 1;
  return c;
}

ComoduleStructure comodule_of_module(const ModuleStructure& a) {
  ComoduleStructure c;
  c.hopf = std::make_shared<const HopfAlgebra>(dual_hopf(*a.hopf));
  c.dim = a.dim;
  const size_t m = c.hopf->dim();
  c.rho.assign(c.dim * c.dim * m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < c.dim; ++j)
      for (size_t k = 0; k < c.dim; ++k) c.at(j, k, i) = a.act[i](k, j);
  return c;
}

ModuleStructure module_of_comodule(const ComoduleStructure& c, std::shared_ptr<const HopfAlgebra> original) {
  ModuleStructure a;
  a.hopf = std::move(original);
  a.dim = c.dim;
  const size_t m = c.hopf->dim();
  if (a.hopf->dim() != m) throw Error(ErrorKind::DimensionMismatch, "Hopf algebra dimensions differ");
  a.act.assign(m, Matrix(c.dim, c.dim));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < c.dim; ++j)
      for (size_t k = 0; k < c.dim; ++k) a.act[i](k, j) = c.at(j, k, i);
  return a;
}

Structure canonical_structure(const Structure& s) {
  if (const auto* a = std::get_if<ModuleStructure>(&s)) return comodule_of_module(*a);
  return s;
}

std::vector<Matrix> structure_operators(const Structure& s, size_t dim) {
  std::vector<Matrix> ops;
  std::visit(Overload{[](const std::monostate&) {},
                      [&](const Grading& g) {
                        std::vector<GroupBackend::Element> seen;
                        for (const auto& d : g.degrees)
                          if (std::find(seen.begin(), seen.end(), d) == seen.end()) seen.push_back(d);
                        std::sort(seen.begin(), seen.end());
                        if (seen.size() <= 1) return;
                        for (const auto& d : seen) {
                          Matrix p(dim, dim);
                          for (size_t i = 0; i < dim; ++i)
                            if (g.degrees[i] == d) p(i, i) = 1;
                          ops.push_back(std::move(p));
                        }
                      },
                      [&](const ComoduleStructure& c) {
                        for (size_t k = 0; k < c.hopf->dim(); ++k) {
                          Matrix o = c.coefficient_map(k);
                          if (!o.is_zero()) ops.push_back(std::move(o));
                        }
                      },
                      [&](const ModuleStructure& a) {
                        for (const auto& m : a.act) ops.push_back(m);
                      },
                      [&](const CyclicAction& a) { ops.push_back(a.phi); }},
             s);
  return ops;
}

bool is_invariant(const Structure& s, const Subspace& w) {
  for (const auto& op : structure_operators(s, w.ambient_dim()))
    for (size_t b = 0; b < w.dim(); ++b)
      if (!w.contains(op * w.basis_vector(b))) return false;
  return true;
}

Subspace invariant_hull(const Structure& s, const Subspace& i, const LieAlgebra* algebra) {
  if (algebra && !is_ideal(*algebra, i)) throw Error(ErrorKind::NotAnIdeal, "hull requested for a subspace that is not an ideal");
  auto ops = structure_operators(s, i.ambient_dim());
  SpanBuilder span(i.ambient_dim());
  std::deque<Vector> queue;
  for (size_t b = 0; b < i.dim(); ++b)
    if (span.add(i.basis_vector(b))) queue.push_back(i.basis_vector(b));
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      Vector w = op * v;
      if (span.add(w)) queue.push_back(std::move(w));
    }
  }
  Subspace hull = span.subspace();
  if (algebra && !is_ideal(*algebra, hull))
    throw Error(ErrorKind::InternalInconsistency, "invariant hull of an ideal is not an ideal");
  return hull;
}

std::optional<GroupBackend::Element> homogeneous_degree(const Grading& g, const Vector& v) {
  std::optional<GroupBackend::Element> d;
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (d && *d != g.degrees[i]) return std::nullopt;
    d = g.degrees[i];
  }
  return d;
}

namespace {

Matrix restrict_map(const Matrix& op, const Subspace& w) {
  Matrix out(w.dim(), w.dim());
  for (size_t b = 0; b < w.dim(); ++b) out.set_col(b, w.coordinates(op * w.basis_vector(b)));
  return out;
}

Matrix quotient_map(const Matrix& op, const Subspace& w) {
  auto cols = w.complement_columns();
  const size_t n = w.ambient_dim();
  Matrix out(cols.size(), cols.size());
  for (size_t b = 0; b < cols.size(); ++b) out.set_col(b, quotient_coordinates(w, op * unit_vector(n, cols[b])));
  return out;
}

// Rebuilds a structure of the same kind from operators transported through `transport`.
template <class Transport>
Structure transport_structure(const Structure& s, size_t new_dim, Transport transport,
                              const std::vector<size_t>& degree_columns) {
  return std::visit(
      Overload{[](const std::monostate&) -> Structure { return std::monostate{}; },
               [&](const Grading& g) -> Structure {
                 Grading out;
                 out.group = g.group;
                 for (size_t c : degree_columns) out.degrees.push_back(g.degrees[c]);
                 return out;
               },
               [&](const ComoduleStructure& c) -> Structure {
                 ComoduleStructure out;
                 out.hopf = c.hopf;
                 out.dim = new_dim;
                 const size_t m = c.hopf->dim();
                 out.rho.assign(new_dim * new_dim * m, 0);
                 for (size_t k = 0; k < m; ++k) {
                   Matrix o = transport(c.coefficient_map(k));
                   for (size_t i = 0; i < new_dim; ++i)
                     for (size_t j = 0; j < new_dim; ++j) out.at(i, j, k) = o(j, i);
                 }
                 return out;
               },
               [&](const ModuleStructure& a) -> Structure {
                 ModuleStructure out;
                 out.hopf = a.hopf;
                 out.dim = new_dim;
                 for (const auto& m : a.act) out.act.push_back(transport(m));
                 return out;
               },
               [&](const CyclicAction& a) -> Structure { return CyclicAction{transport(a.phi)}; }},
      s);
}

}  // namespace

Structure restrict_structure(const Structure& s, const Subspace& w) {
  if (!is_invariant(s, w)) throw Error(ErrorKind::InternalInconsistency, "restriction to a non-invariant subspace");
  if (const auto* g = std::get_if<Grading>(&s))
    for (size_t b = 0; b < w.dim(); ++b)
      if (!homogeneous_degree(*g, w.basis_vector(b)))
        throw Error(ErrorKind::InternalInconsistency, "echelon basis of a graded subspace is not homogeneous");
  return transport_structure(s, w.dim(), [&](const Matrix& op) { return restrict_map(op, w); }, w.pivots());
}

Structure quotient_structure(const Structure& s, const Subspace& w) {
  if (!is_invariant(s, w)) throw Error(ErrorKind::InternalInconsistency, "quotient by a non-invariant subspace");
  auto cols = w.complement_columns();
  return transport_structure(s, cols.size(), [&](const Matrix& op) { return quotient_map(op, w); }, cols);
}

StabilityReport radical_stability_report(const LieAlgebra& l, const Structure& s) {
  StabilityReport rep;
  Subspace r = solvable_radical(l), n = nilradical(l);
  rep.r_invariant = is_invariant(s, r);
  rep.n_invariant = is_invariant(s, n);
  auto integral_ok = [](const HopfAlgebra& h) {
    try {
      return find_normalized_integral(h).ad_invariant;
    } catch (const Error&) {
      return false;
    }
  };
  rep.theorem_applies = std::visit(Overload{[](const std::monostate&) { return true; },
                                            [](const Grading&) { return true; },
                                            [&](const ComoduleStructure& c) { return integral_ok(*c.hopf); },
                                            [&](const ModuleStructure& a) { return integral_ok(dual_hopf(*a.hopf)); },
                                            [](const CyclicAction&) { return false; }},
                                   s);
  if (rep.theorem_applies && !(rep.r_invariant && rep.n_invariant))
    throw Error(ErrorKind::InternalInconsistency, "radicals are not invariant although a normalized ad-invariant integral exists");
  return rep;
}

bool validate_hlmodule(const HLModule& m) {
  const LieAlgebra& l = m.algebra;
  const size_t n = l.dim(), d = m.space_dim;
  if (m.psi.size() != n) throw Error(ErrorKind::ShapeMismatch, "one representation matrix per basis element required");
  for (size_t i = 0; i < n; ++i)
    if (m.psi[i].rows() != d || m.psi[i].cols() != d)
      throw Error(ErrorKind::ShapeMismatch, "representation matrix has wrong shape", {idx(i)});
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      Matrix lhs(d, d);
      for (size_t k = 0; k < n; ++k)
        if (sgn(l.c(a, b, k)) != 0) lhs += m.psi[k] * l.c(a, b, k);
      if (lhs != commutator(m.psi[a], m.psi[b]))
        throw Error(ErrorKind::RepresentationFailure, "psi([a,b]) != [psi(a), psi(b)]", {idx(a), idx(b)});
    }

  Structure sl = canonical_structure(m.algebra_structure), sv = canonical_structure(m.space_structure);
  if (sl.index() != sv.index())
    throw Error(ErrorKind::GroupMismatch, "algebra and module carry different kinds of structure");
  if (std::holds_alternative<std::monostate>(sl)) return true;

  if (const auto* a = std::get_if<CyclicAction>(&sl)) {
    const auto& b = std::get<CyclicAction>(sv);
    validate_automorphism(l, *a);
    if (rank(b.phi) != d) throw Error(ErrorKind::NotAnAutomorphism, "module automorphism is not invertible");
    for (size_t i = 0; i < n; ++i) {
      Matrix rhs(d, d);
      Vector pa = a->phi.col(i);
      for (size_t k = 0; k < n; ++k)
        if (sgn(pa[k]) != 0) rhs += m.psi[k] * pa[k];
      if (b.phi * m.psi[i] != rhs * b.phi)
        throw Error(ErrorKind::RepresentationFailure, "phi(psi(a) v) != psi(phi a) phi v", {idx(i)});
    }
    return true;
  }

  if (const auto* gl = std::get_if<Grading>(&sl)) {
    const auto& gv = std::get<Grading>(sv);
    validate_grading(l, *gl);
    validate_grading_space(d, gv);
    if (!(*gl->group == *gv.group)) throw Error(ErrorKind::GroupMismatch, "gradings over different groups");
    bool symmetric = true;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < d; ++j) {
        auto left = gl->group->multiply(gl->degrees[i], gv.degrees[j]);
        auto right = gl->group->multiply(gv.degrees[j], gl->degrees[i]);
        for (size_t k = 0; k < d; ++k) {
          if (sgn(m.psi[i](k, j)) == 0) continue;
          if (gv.degrees[k] != left)
            throw Error(ErrorKind::GradingFailure, "psi(a) v has the wrong degree", {idx(i), idx(j), idx(k)});
          if (gv.degrees[k] != right) symmetric = false;
        }
      }
    return symmetric;
  }

  const auto& cl = std::get<ComoduleStructure>(sl);
  const auto& cv = std::get<ComoduleStructure>(sv);
  validate_coaction(l, cl);
  if (cv.dim != d) throw Error(ErrorKind::DimensionMismatch, "module coaction dimension");
  validate_comodule_space(cv);
  if (!same_hopf(*cl.hopf, *cv.hopf)) throw Error(ErrorKind::GroupMismatch, "coactions over different Hopf algebras");
  const HopfAlgebra& h = *cl.hopf;
  const size_t hm = h.dim();
  auto tl = sparse_coaction(cl), tv = sparse_coaction(cv);
  bool symmetric = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j) {
      Matrix lhs(d, hm), rhs(d, hm), sym(d, hm);
      Vector u = m.psi[i].col(j);
      for (size_t x = 0; x < d; ++x) {
        if (sgn(u[x]) == 0) continue;
        for (const auto& t : tv[x]) lhs(t.j, t.k) += u[x] * t.value;
      }
      for (const auto& p : tl[i])
        for (const auto& q : tv[j]) {
          Vector img = m.psi[p.j].col(q.j);
          const Rational w = p.value * q.value;
          for (size_t x = 0; x < d; ++x) {
            if (sgn(img[x]) == 0) continue;
            for (const auto& e : h.product_terms(p.k, q.k)) rhs(x, e.index) += w * img[x] * e.value;
            for (const auto& e : h.product_terms(q.k, p.k)) sym(x, e.index) += w * img[x] * e.value;
          }
        }
      if (lhs != rhs)
        throw Error(ErrorKind::CoactionFailure, "rho_V(psi(a) v) != psi(a_(0)) v_(0) (x) a_(1) v_(1)", {idx(i), idx(j)});
      if (lhs != sym) symmetric = false;
    }
  return symmetric;
}

HLModule adjoint_module(const LieAlgebra& l, const Structure& s) {
  HLModule m;
  m.algebra = l;
  m.algebra_structure = s;
  m.space_dim = l.dim();
  for (size_t i = 0; i < l.dim(); ++i) m.psi.push_back(l.ad_basis(i));
  m.space_structure = s;
  return m;
}

}  // namespace levikit
