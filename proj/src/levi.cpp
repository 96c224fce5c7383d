#include "levikit/levi.hpp"

#include <algorithm>
#include <random>

#include "levikit/cohomology.hpp"
#include "levikit/error.hpp"
#include "levikit/maschke.hpp"
#include "levikit/polynomial.hpp"

namespace levikit {

namespace {

// Subspace of w's coordinate space corresponding to u, which must lie inside w.
Subspace to_coordinates(const Subspace& w, const Subspace& u) {
  std::vector<Vector> vs;
  for (const auto& v : u.basis_vectors()) vs.push_back(w.coordinates(v));
  return Subspace::span(w.dim(), vs);
}

// Subspace of the ambient space spanned by the given coordinate vectors of w.
Subspace from_coordinates(const Subspace& w, const Subspace& coords) {
  std::vector<Vector> vs;
  for (const auto& c : coords.basis_vectors()) vs.push_back(w.from_coordinates(c));
  return Subspace::span(w.ambient_dim(), vs);
}

// Matrices of x -> [b, x] restricted to the invariant subspace w, one per basis vector b of `acting`.
std::vector<Matrix> restricted_ad(const LieAlgebra& l, const Subspace& acting, const Subspace& w) {
  std::vector<Matrix> out;
  for (const auto& b : acting.basis_vectors()) {
    Matrix m(w.dim(), w.dim());
    for (size_t j = 0; j < w.dim(); ++j) m.set_col(j, w.coordinates(l.bracket(b, w.basis_vector(j))));
    out.push_back(std::move(m));
  }
  return out;
}

Subspace spin(const Vector& v, const std::vector<Matrix>& gens, size_t dim) {
  SpanBuilder span(dim);
  span.add(v);
  for (size_t next = 0; next < span.dim(); ++next) {
    Vector u = span.accepted()[next];
    for (const auto& g : gens) span.add(g * u);
  }
  return span.subspace();
}

int small_int(std::mt19937_64& rng, int range) {
  return static_cast<int>(rng() % static_cast<unsigned>(2 * range + 1)) - range;
}

// A proper nonzero invariant subspace, or nullopt when the generators act irreducibly.
std::optional<Subspace> meataxe_split(const std::vector<Matrix>& gens, size_t dim, std::mt19937_64& rng) {
  if (dim <= 1) return std::nullopt;
  AssociativeHull hull = associative_hull(gens, dim);
  if (hull.basis.empty()) return Subspace::span(dim, {unit_vector(dim, 0)});
  std::vector<Matrix> transposed;
  for (const auto& g : gens) transposed.push_back(g.transpose());
  for (int attempt = 0; attempt < 400; ++attempt) {
    Matrix theta(dim, dim);
    int range = 1 + attempt / 40;
    for (const auto& a : hull.basis) theta += a * Rational(small_int(rng, range));
    for (const auto& f : irreducible_factors(minimal_polynomial(theta))) {
      Matrix ft = evaluate(f, theta);
      Subspace kernel_space = null_space(ft);
      Subspace s = spin(kernel_space.basis_vector(0), gens, dim);
      if (!s.is_full()) return s;
      Subspace dual_kernel = null_space(ft.transpose());
      Subspace t = spin(dual_kernel.basis_vector(0), transposed, dim);
      if (!t.is_full()) return null_space(t.basis());
      if (kernel_space.dim() == static_cast<size_t>(f.degree())) return std::nullopt;
    }
  }
  throw Error(ErrorKind::InternalInconsistency, "MeatAxe found neither a submodule nor an irreducibility certificate");
}

Structure checked_restriction(const Structure& s, const Subspace& w) {
  if (!has_structure(s)) return s;
  return restrict_structure(s, w);
}

// Levi subalgebra of l whose solvable radical is r, by induction on dim r.
Subspace levi_step(const LieAlgebra& l, const Structure& s, const Subspace& r, const AveragingRoute& route) {
  const size_t n = l.dim();
  if (r.is_zero()) return Subspace::full(n);
  if (r.is_full()) return Subspace(n);

  Subspace d = bracket_spaces(l, r, r);
  if (!d.is_zero()) {
    // Work modulo [R, R], then inside the preimage of the Levi subalgebra found there.
    LieAlgebra q = quotient_algebra(l, d);
    std::vector<Vector> rq;
    for (const auto& v : r.basis_vectors()) rq.push_back(quotient_coordinates(d, v));
    Subspace bq = levi_step(q, has_structure(s) ? quotient_structure(s, d) : s, Subspace::span(q.dim(), rq), route);
    std::vector<Vector> gens = d.basis_vectors();
    for (const auto& v : bq.basis_vectors()) gens.push_back(section_vector(d, v));
    Subspace l1 = Subspace::span(n, gens);
    Subspace b1 = levi_step(subalgebra(l, l1), checked_restriction(s, l1), to_coordinates(l1, d), route);
    return from_coordinates(l1, b1);
  }

  // Abelian radical: average the canonical section, then correct it by a colinear 1-cochain.
  LieAlgebra q = quotient_algebra(l, r);
  Structure sq = has_structure(s) ? quotient_structure(s, r) : s;
  Matrix section = route.average(section_matrix(r), sq, s);
  if (quotient_matrix(r) * section != Matrix::identity(q.dim()))
    throw Error(ErrorKind::InternalInconsistency, "averaged section is not a section");

  HLModule m;
  m.algebra = q;
  m.algebra_structure = sq;
  m.space_dim = r.dim();
  m.space_structure = checked_restriction(s, r);
  for (size_t a = 0; a < q.dim(); ++a) {
    Matrix p(r.dim(), r.dim());
    for (size_t j = 0; j < r.dim(); ++j) p.set_col(j, r.coordinates(l.bracket(section.col(a), r.basis_vector(j))));
    m.psi.push_back(std::move(p));
  }
  Cochain phi(2, q.dim(), r.dim());
  for (const auto& t : phi.tuples()) {
    Vector v = sub(l.bracket(section.col(t[0]), section.col(t[1])), section * q.bracket_basis(t[0], t[1]));
    phi.set(t, r.coordinates(v));
  }
  Matrix omega = solve_coboundary_colinear(m, phi, route);
  Matrix lift = section - inclusion_matrix(r) * omega;
  return column_space(lift);
}

void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InternalInconsistency, what);
}

std::vector<Subspace> classical_simple_ideals(const LieAlgebra& b) {
  const size_t n = b.dim();
  std::vector<Matrix> ad;
  for (size_t i = 0; i < n; ++i) ad.push_back(b.ad_basis(i));
  AssociativeHull hull = associative_hull(ad, n);
  // Center of the hull: combinations commuting with every ad e_i.
  const size_t h = hull.basis.size();
  Matrix eqs(n * n * n, h);
  for (size_t k = 0; k < h; ++k)
    for (size_t i = 0; i < n; ++i) {
      Matrix c = commutator(hull.basis[k], ad[i]);
      for (size_t e = 0; e < n * n; ++e) eqs(i * n * n + e, k) = c.data()[e];
    }
  Matrix center = kernel(eqs);
  std::vector<Matrix> zs;
  for (size_t r = 0; r < center.rows(); ++r) {
    Matrix z(n, n);
    for (size_t k = 0; k < h; ++k)
      if (sgn(center(r, k)) != 0) z += hull.basis[k] * center(r, k);
    zs.push_back(std::move(z));
  }
  if (zs.size() <= 1) return {Subspace::full(n)};

  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Matrix z(n, n);
    for (const auto& m : zs) z += m * Rational(small_int(rng, 2 + attempt / 20));
    Polynomial p = minimal_polynomial(z);
    if (static_cast<size_t>(p.degree()) != zs.size()) continue;
    auto fs = factor(p);
    if (std::any_of(fs.begin(), fs.end(), [](const Factor& f) { return f.multiplicity != 1; })) continue;
    std::vector<Subspace> ideals;
    size_t total = 0;
    for (const auto& f : fs) {
      ideals.push_back(null_space(evaluate(f.factor, z)));
      total += ideals.back().dim();
    }
    ensure(total == n, "central idempotents do not decompose the algebra");
    for (const auto& i : ideals) ensure(is_ideal(b, i), "kernel of a central element is not an ideal");
    return ideals;
  }
  throw Error(ErrorKind::InternalInconsistency, "no generator of the centroid found");
}

// Rethrows a failure with the stage name prepended.
template <class F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.message(), e.indices());
  }
}

}  // namespace

LeviPair levi_decompose(const LieAlgebra& l, const Structure& s_in) {
  validate_structure(l, s_in);
  Structure s = canonical_structure(s_in);
  LeviPair out;
  out.r = solvable_radical(l);
  if (has_structure(s) && !is_invariant(s, out.r))
    throw Error(ErrorKind::RadicalNotInvariant, "the solvable radical is not invariant under the structure");
  if (out.r.is_zero() || out.r.is_full()) {
    out.b = out.r.is_zero() ? Subspace::full(l.dim()) : Subspace(l.dim());
    return out;
  }
  AveragingRoute route = AveragingRoute::for_structure(s);
  route.require(true);
  out.b = levi_step(l, s, out.r, route);

  ensure(out.b.dim() + out.r.dim() == l.dim() && (out.b + out.r).is_full(), "B and R are not complementary");
  ensure(is_subalgebra(l, out.b), "B is not a subalgebra");
  ensure(killing_nondegenerate(subalgebra(l, out.b)), "B is not semisimple");
  if (has_structure(s)) ensure(is_invariant(s, out.b), "B is not invariant");
  return out;
}

std::vector<Subspace> semisimple_split(const LieAlgebra& b, const Structure& s_in) {
  if (!killing_nondegenerate(b)) throw Error(ErrorKind::NotSemisimple, "the Killing form is degenerate");
  const size_t n = b.dim();
  if (n == 0) return {};
  Structure s = canonical_structure(s_in);
  std::vector<Subspace> remaining = classical_simple_ideals(b);
  std::vector<Subspace> components;
  Subspace rest = Subspace::full(n);
  size_t used = 0;
  while (!remaining.empty()) {
    std::vector<Subspace> hulls;
    for (const auto& i : remaining) hulls.push_back(invariant_hull(s, i, &b));
    std::vector<Subspace> minimal;
    for (const auto& h : hulls)
      if (std::none_of(hulls.begin(), hulls.end(), [&](const Subspace& o) { return o.dim() < h.dim() && h.contains(o); }))
        minimal.push_back(h);
    Subspace chosen = *std::min_element(minimal.begin(), minimal.end(),
                                        [](const Subspace& x, const Subspace& y) { return lex_less(x, y); });
    components.push_back(chosen);
    used += chosen.dim();
    rest = rest.intersect(centralizer(b, chosen));
    ensure(is_invariant(s, rest), "centralizer of an invariant ideal is not invariant");
    ensure(used + rest.dim() == n, "an invariant ideal and its centralizer do not span");
    std::erase_if(remaining, [&](const Subspace& i) { return !rest.contains(i); });
  }
  ensure(rest.is_zero(), "simple ideals left unassigned");
  return components;
}

std::vector<Subspace> semisimple_split(const LieAlgebra& l, const Subspace& b, const Structure& s) {
  std::vector<Subspace> out;
  for (const auto& c : semisimple_split(subalgebra(l, b), checked_restriction(canonical_structure(s), b)))
    out.push_back(from_coordinates(b, c));
  return out;
}

Subspace minimal_invariant_subspace(const std::vector<Matrix>& generators, size_t dim) {
  if (dim == 0) return Subspace(0);
  std::mt19937_64 rng(0xa11ce);
  Subspace current = Subspace::full(dim);
  std::vector<Matrix> gens = generators;
  while (true) {
    auto sub = meataxe_split(gens, current.dim(), rng);
    if (!sub) return current;
    // restrict the generators to the submodule, in its coordinates
    std::vector<Matrix> restricted;
    for (const auto& g : gens) {
      Matrix m(sub->dim(), sub->dim());
      for (size_t j = 0; j < sub->dim(); ++j) m.set_col(j, sub->coordinates(g * sub->basis_vector(j)));
      restricted.push_back(std::move(m));
    }
    gens = std::move(restricted);
    current = from_coordinates(current, *sub);
  }
}

std::vector<Subspace> weyl_decompose(const HLModule& m_in) {
  validate_hlmodule(m_in);
  HLModule m = m_in;
  m.algebra_structure = canonical_structure(m.algebra_structure);
  m.space_structure = canonical_structure(m.space_structure);
  AveragingRoute route = AveragingRoute::for_structure(m.space_structure);
  route.require(true);
  const Integral* t = route.integral() ? &*route.integral() : nullptr;
  const size_t d = m.space_dim;

  std::vector<Subspace> out;
  Subspace current = Subspace::full(d);  // the part still to be split, as a subspace of V
  HLModule piece = m;                    // the same part as a module in its own coordinates
  while (!current.is_zero()) {
    std::vector<Matrix> gens = piece.psi;
    for (auto& op : structure_operators(piece.space_structure, piece.space_dim)) gens.push_back(std::move(op));
    Subspace w = minimal_invariant_subspace(gens, piece.space_dim);
    if (w.is_full()) {
      out.push_back(current);
      break;
    }
    // W as a module in its own coordinates
    HLModule mw = piece;
    mw.space_dim = w.dim();
    mw.space_structure = checked_restriction(piece.space_structure, w);
    mw.psi.clear();
    for (const auto& p : piece.psi) {
      Matrix r(w.dim(), w.dim());
      for (size_t j = 0; j < w.dim(); ++j) r.set_col(j, w.coordinates(p * w.basis_vector(j)));
      mw.psi.push_back(std::move(r));
    }
    // Plain L-equivariant projection Q onto W: Q psi_i = psi^W_i Q and Q restricted to W is the identity.
    const size_t k = w.dim(), u = piece.space_dim;
    Matrix a((piece.psi.size() * u + k) * k, k * u);
    Vector rhs(a.rows());
    size_t row = 0;
    for (size_t i = 0; i < piece.psi.size(); ++i)
      for (size_t p = 0; p < k; ++p)
        for (size_t c = 0; c < u; ++c, ++row) {
          for (size_t x = 0; x < u; ++x) a(row, p * u + x) += piece.psi[i](x, c);
          for (size_t x = 0; x < k; ++x) a(row, x * u + c) -= mw.psi[i](p, x);
        }
    Matrix inc = inclusion_matrix(w);
    for (size_t p = 0; p < k; ++p)
      for (size_t c = 0; c < k; ++c, ++row) {
        for (size_t x = 0; x < u; ++x) a(row, p * u + x) += inc(x, c);
        rhs[row] = p == c ? 1 : 0;
      }
    auto sol = solve(a, rhs);
    if (!sol) throw Error(ErrorKind::NotCompletelyReducible, "an L-submodule has no L-equivariant complement");
    Matrix q = average_equivariant_projection(unflatten(sol->x, k, u), piece, mw, t);
    ensure(q * inc == Matrix::identity(k), "averaged projection does not fix W");
    out.push_back(from_coordinates(current, w));

    Subspace kernel_space = null_space(q);
    HLModule rest = piece;
    rest.space_dim = kernel_space.dim();
    rest.space_structure = checked_restriction(piece.space_structure, kernel_space);
    rest.psi.clear();
    for (const auto& p : piece.psi) {
      Matrix r(kernel_space.dim(), kernel_space.dim());
      for (size_t j = 0; j < kernel_space.dim(); ++j) r.set_col(j, kernel_space.coordinates(p * kernel_space.basis_vector(j)));
      rest.psi.push_back(std::move(r));
    }
    current = from_coordinates(current, kernel_space);
    piece = std::move(rest);
  }
  return out;
}

Subspace radical_complement(const LieAlgebra& l, const Subspace& b, const Subspace& r, const Subspace& n,
                            const Structure& s_in) {
  ensure(r.contains(n), "N is not inside R");
  Structure s = canonical_structure(s_in);
  if (r == n) return Subspace(l.dim());

  // R and N as modules over B in their own coordinates.
  Subspace n_in_r = to_coordinates(r, n);
  HLModule mr, mn;
  mr.algebra = subalgebra(l, b);
  mr.algebra_structure = checked_restriction(s, b);
  mr.space_dim = r.dim();
  mr.space_structure = checked_restriction(s, r);
  mr.psi = restricted_ad(l, b, r);
  mn = mr;
  mn.space_dim = n.dim();
  mn.space_structure = checked_restriction(mr.space_structure, n_in_r);
  mn.psi = restricted_ad(l, b, n);

  // Plain B-equivariant projection R -> N in coordinates, identity on N.
  const size_t k = n.dim(), u = r.dim();
  Matrix inc = inclusion_matrix(n_in_r);
  Matrix a((mr.psi.size() * u + k) * k, k * u);
  Vector rhs(a.rows());
  size_t row = 0;
  for (size_t i = 0; i < mr.psi.size(); ++i)
    for (size_t p = 0; p < k; ++p)
      for (size_t c = 0; c < u; ++c, ++row) {
        for (size_t x = 0; x < u; ++x) a(row, p * u + x) += mr.psi[i](x, c);
        for (size_t x = 0; x < k; ++x) a(row, x * u + c) -= mn.psi[i](p, x);
      }
  for (size_t p = 0; p < k; ++p)
    for (size_t c = 0; c < k; ++c, ++row) {
      for (size_t x = 0; x < u; ++x) a(row, p * u + x) += inc(x, c);
      rhs[row] = p == c ? 1 : 0;
    }
  auto sol = solve(a, rhs);
  if (!sol) throw Error(ErrorKind::NotCompletelyReducible, "N has no B-equivariant complement in R");

  AveragingRoute route = AveragingRoute::for_structure(s);
  route.require(true);
  const Integral* t = route.integral() ? &*route.integral() : nullptr;
  Matrix q = average_equivariant_projection(unflatten(sol->x, k, u), mr, mn, t);
  ensure(q * inc == Matrix::identity(k), "averaged projection does not fix N");
  Subspace out = from_coordinates(r, null_space(q));

  ensure(bracket_spaces(l, b, out).is_zero(), "[B, S] is not zero");
  ensure(n.contains(bracket_spaces(l, Subspace::full(l.dim()), r)), "[L, R] is not inside N");
  ensure(out.dim() + n.dim() == r.dim() && (out + n) == r, "S and N do not split R");
  if (has_structure(s)) ensure(is_invariant(s, out), "S is not invariant");
  return out;
}

LeviDecomposition full_decomposition(const LieAlgebra& l, const Structure& s_in) {
  stage("validate", [&] {
    validate_structure(l, s_in);
    return 0;
  });
  Structure s = canonical_structure(s_in);
  LeviDecomposition d;
  d.r = stage("radical", [&] { return solvable_radical(l); });
  d.n = stage("nilradical", [&] { return nilradical(l); });
  if (has_structure(s)) stage("stability", [&] { return radical_stability_report(l, s); });
  d.b = stage("levi", [&] { return levi_decompose(l, s).b; });
  d.components = stage("split", [&] { return semisimple_split(l, d.b, s); });
  d.s = stage("complement", [&] { return radical_complement(l, d.b, d.r, d.n, s); });
  d.report = verify_decomposition(l, s, d);
  return d;
}

std::vector<Check> verify_decomposition(const LieAlgebra& l, const Structure& s_in, const LeviDecomposition& d) {
  std::vector<Check> out;
  auto record = [&](const std::string& name, auto&& test) {
    bool pass = false;
    try {
      pass = test();
    } catch (const Error&) {
      pass = false;
    }
    out.push_back({name, pass});
  };
  const size_t n = l.dim();
  const Subspace full = Subspace::full(n);
  record("B is a subalgebra", [&] { return is_subalgebra(l, d.b); });
  record("L = B + R is direct", [&] { return d.b.dim() + d.r.dim() == n && (d.b + d.r).is_full(); });
  record("Killing form nondegenerate on B", [&] { return killing_nondegenerate(subalgebra(l, d.b)); });
  record("R is the solvable radical", [&] { return d.r == solvable_radical(l); });
  record("R = S + N is direct", [&] {
    return d.r.contains(d.s) && d.r.contains(d.n) && d.s.dim() + d.n.dim() == d.r.dim() && (d.s + d.n) == d.r;
  });
  record("[B, S] = 0", [&] { return bracket_spaces(l, d.b, d.s).is_zero(); });
  record("N is a nilpotent ideal", [&] { return is_ideal(l, d.n) && is_nilpotent(l, d.n); });
  record("[L, R] inside N", [&] { return d.n.contains(bracket_spaces(l, full, d.r)); });
  record("components are ideals of B summing to B", [&] {
    Subspace sum(n);
    size_t dims = 0;
    for (const auto& c : d.components) {
      if (!d.b.contains(c) || !d.b.contains(bracket_spaces(l, d.b, c)) || !c.contains(bracket_spaces(l, d.b, c)))
        return false;
      sum = sum + c;
      dims += c.dim();
    }
    return sum == d.b && dims == d.b.dim();
  });
  record("components commute pairwise", [&] {
    for (size_t i = 0; i < d.components.size(); ++i)
      for (size_t j = i + 1; j < d.components.size(); ++j)
        if (!bracket_spaces(l, d.components[i], d.components[j]).is_zero()) return false;
    return true;
  });
  Structure s = canonical_structure(s_in);
  if (has_structure(s)) {
    record("B invariant", [&] { return is_invariant(s, d.b); });
    record("R invariant", [&] { return is_invariant(s, d.r); });
    record("S invariant", [&] { return is_invariant(s, d.s); });
    record("N invariant", [&] { return is_invariant(s, d.n); });
    record("components invariant", [&] {
      return std::all_of(d.components.begin(), d.components.end(), [&](const Subspace& c) { return is_invariant(s, c); });
    });
  }
  return out;
}

ObstructionResult automorphism_levi_obstruction(const LieAlgebra& l, const CyclicAction& a) {
  validate_automorphism(l, a);
  const size_t n = l.dim();
  Matrix shifted = a.phi - Matrix::identity(n);
  ObstructionResult out;
  out.radical = solvable_radical(l);
  out.image = column_space(shifted);
  out.fixed = null_space(shifted);
  out.certificate = !out.radical.is_full() && out.radical.contains(out.image) && out.radical.contains(out.fixed);
  return out;
}

}  // namespace levikit
