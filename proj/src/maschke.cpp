#include "levikit/maschke.hpp"

#include "levikit/error.hpp"

namespace levikit {

namespace {

void check_shape(const Matrix& r, size_t rows, size_t cols) {
  if (r.rows() != rows || r.cols() != cols)
    throw Error(ErrorKind::ShapeMismatch, "map shape does not match the structures",
                {static_cast<long>(r.rows()), static_cast<long>(r.cols())});
}

std::vector<Matrix> coefficient_maps(const ComoduleStructure& c) {
  std::vector<Matrix> out;
  for (size_t k = 0; k < c.hopf->dim(); ++k) out.push_back(c.coefficient_map(k));
  return out;
}

void check_same_hopf(const ComoduleStructure& v, const ComoduleStructure& w) {
  if (!same_hopf(*v.hopf, *w.hopf)) throw Error(ErrorKind::GroupMismatch, "coactions over different Hopf algebras");
}

}  // namespace

bool is_colinear(const Matrix& r, const ComoduleStructure& v, const ComoduleStructure& w) {
  check_shape(r, w.dim, v.dim);
  check_same_hopf(v, w);
  for (size_t q = 0; q < v.hopf->dim(); ++q)
    if (w.coefficient_map(q) * r != r * v.coefficient_map(q)) return false;
  return true;
}

bool is_graded_map(const Matrix& r, const Grading& v, const Grading& w) {
  check_shape(r, w.degrees.size(), v.degrees.size());
  if (!(*v.group == *w.group)) throw Error(ErrorKind::GroupMismatch, "gradings over different groups");
  for (size_t p = 0; p < r.rows(); ++p)
    for (size_t a = 0; a < r.cols(); ++a)
      if (sgn(r(p, a)) != 0 && w.degrees[p] != v.degrees[a]) return false;
  return true;
}

bool is_structure_map(const Matrix& r, const Structure& v, const Structure& w) {
  Structure cv = canonical_structure(v), cw = canonical_structure(w);
  if (cv.index() != cw.index()) throw Error(ErrorKind::GroupMismatch, "source and target carry different kinds of structure");
  if (const auto* g = std::get_if<Grading>(&cv)) return is_graded_map(r, *g, std::get<Grading>(cw));
  if (const auto* c = std::get_if<ComoduleStructure>(&cv)) return is_colinear(r, *c, std::get<ComoduleStructure>(cw));
  if (const auto* a = std::get_if<CyclicAction>(&cv)) return std::get<CyclicAction>(cw).phi * r == r * a->phi;
  return true;
}

Matrix average_colinear(const Matrix& r, const ComoduleStructure& v, const ComoduleStructure& w, const Integral& t,
                        const Matrix* section_of) {
  check_shape(r, w.dim, v.dim);
  check_same_hopf(v, w);
  const HopfAlgebra& h = *v.hopf;
  const size_t m = h.dim();
  if (t.t.size() != m) throw Error(ErrorKind::DimensionMismatch, "integral has the wrong length");
  if (section_of && !t.normalized) throw Error(ErrorKind::IntegralNotNormalized, "section preservation needs t(1) = 1");

  // T[q][k] = t(h_q S(h_k))
  Matrix tm(m, m);
  for (size_t q = 0; q < m; ++q)
    for (size_t s = 0; s < m; ++s)
      for (const auto& e : h.product_terms(q, s)) tm(q, s) += e.value * t.t[e.index];
  Matrix big_t = tm * h.antipode();

  std::vector<Matrix> ov = coefficient_maps(v), ow = coefficient_maps(w);
  Matrix out(w.dim, v.dim);
  for (size_t k = 0; k < m; ++k) {
    if (ov[k].is_zero()) continue;
    Matrix rk = r * ov[k];
    for (size_t q = 0; q < m; ++q)
      if (sgn(big_t(q, k)) != 0 && !ow[q].is_zero()) out += (ow[q] * rk) * big_t(q, k);
  }

  if (!is_colinear(out, v, w)) throw Error(ErrorKind::InternalInconsistency, "averaged map is not colinear");
  if (section_of) {
    const Matrix& pi = *section_of;
    if (!is_colinear(pi, w, v)) throw Error(ErrorKind::CoactionFailure, "the supplied projection is not colinear");
    if (pi * r == Matrix::identity(v.dim) && pi * out != Matrix::identity(v.dim))
      throw Error(ErrorKind::InternalInconsistency, "averaging did not preserve the section property");
  }
  return out;
}

Matrix average_graded(const Matrix& r, const Grading& v, const Grading& w) {
  check_shape(r, w.degrees.size(), v.degrees.size());
  if (!(*v.group == *w.group)) throw Error(ErrorKind::GroupMismatch, "gradings over different groups");
  Matrix out = r;
  for (size_t p = 0; p < r.rows(); ++p)
    for (size_t a = 0; a < r.cols(); ++a)
      if (w.degrees[p] != v.degrees[a]) out(p, a) = 0;
  return out;
}

Matrix average_equivariant_projection(const Matrix& pi, const HLModule& v, const HLModule& w, const Integral* t) {
  check_shape(pi, w.space_dim, v.space_dim);
  if (v.psi.size() != w.psi.size()) throw Error(ErrorKind::DimensionMismatch, "modules over different algebras");
  for (size_t i = 0; i < v.psi.size(); ++i)
    if (pi * v.psi[i] != w.psi[i] * pi)
      throw Error(ErrorKind::NotLEquivariant, "pi does not commute with the action", {static_cast<long>(i)});

  Structure sv = canonical_structure(v.space_structure), sw = canonical_structure(w.space_structure);
  if (sv.index() != sw.index()) throw Error(ErrorKind::GroupMismatch, "source and target carry different kinds of structure");
  Matrix out;
  if (std::holds_alternative<std::monostate>(sv)) {
    out = pi;
  } else if (const auto* g = std::get_if<Grading>(&sv)) {
    out = average_graded(pi, *g, std::get<Grading>(sw));
  } else if (const auto* c = std::get_if<ComoduleStructure>(&sv)) {
    if (!t) throw Error(ErrorKind::IntegralUnavailable, "comodule averaging needs an integral");
    if (!t->ad_invariant) throw Error(ErrorKind::IntegralNotAdInvariant, "equivariant averaging needs an ad-invariant integral");
    out = average_colinear(pi, *c, std::get<ComoduleStructure>(sw), *t);
  } else {
    throw Error(ErrorKind::NoAveragingRoute, "cyclic actions admit no averaging");
  }
  for (size_t i = 0; i < v.psi.size(); ++i)
    if (out * v.psi[i] != w.psi[i] * out)
      throw Error(ErrorKind::InternalInconsistency, "averaged projection is not L-equivariant", {static_cast<long>(i)});
  return out;
}

AveragingRoute AveragingRoute::for_structure(const Structure& s) {
  AveragingRoute route;
  Structure c = canonical_structure(s);
  if (std::holds_alternative<std::monostate>(c)) {
    route.kind_ = Kind::Identity;
  } else if (std::holds_alternative<Grading>(c)) {
    route.kind_ = Kind::Graded;
  } else if (const auto* co = std::get_if<ComoduleStructure>(&c)) {
    try {
      route.integral_ = find_normalized_integral(*co->hopf);
      route.kind_ = Kind::Integral;
    } catch (const Error& e) {
      route.kind_ = Kind::Unavailable;
      route.reason_ = std::string(to_string(e.kind())) + ": " + e.what();
    }
  } else {
    route.kind_ = Kind::Unavailable;
    route.reason_ = "the acting group is infinite cyclic, so no finite integral exists";
  }
  return route;
}

void AveragingRoute::require(bool need_ad_invariant) const {
  if (kind_ == Kind::Unavailable) throw Error(ErrorKind::NoAveragingRoute, "no averaging route: " + reason_);
  if (need_ad_invariant && kind_ == Kind::Integral && !integral_->ad_invariant)
    throw Error(ErrorKind::NoAveragingRoute, "no averaging route: the normalized integral is not ad-invariant");
}

Matrix AveragingRoute::average(const Matrix& r, const Structure& src, const Structure& dst) const {
  require(false);
  Structure cs = canonical_structure(src), cd = canonical_structure(dst);
  if (cs.index() != cd.index()) throw Error(ErrorKind::GroupMismatch, "source and target carry different kinds of structure");
  switch (kind_) {
    case Kind::Identity:
      return r;
    case Kind::Graded:
      return average_graded(r, std::get<Grading>(cs), std::get<Grading>(cd));
    case Kind::Integral:
      return average_colinear(r, std::get<ComoduleStructure>(cs), std::get<ComoduleStructure>(cd), *integral_);
    case Kind::Unavailable:
      break;
  }
  throw Error(ErrorKind::NoAveragingRoute, reason_);
}

}  // namespace levikit
