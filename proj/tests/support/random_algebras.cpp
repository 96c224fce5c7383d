#include "random_algebras.hpp"

#include "levikit/catalog.hpp"

namespace levikit::testing {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }

enum class ModuleType { Trivial, Natural, Adjoint, Heisenberg };

struct Piece {
  ModuleType type;
  size_t copy;     // which sl2 copy acts
  size_t offset;   // first basis index
  size_t dim;
  std::vector<int> weights;  // scalar by which each torus element acts
};

// Degrees of a piece for each grading kind; the shift must commute with the copy's generator.
struct DegreeModel {
  GradingKind kind;
  std::shared_ptr<const GroupBackend> group;
  std::vector<GroupBackend::Element> copy_generator;  // degree of e and f (S3) or +1 (Z)

  GroupBackend::Element id() const { return group->identity(); }
  GroupBackend::Element mul(const GroupBackend::Element& a, const GroupBackend::Element& b) const {
    return group->multiply(a, b);
  }
  GroupBackend::Element inv(const GroupBackend::Element& a) const { return group->inverse(a); }
};

}  // namespace

Matrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int range) {
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -range, range);
  return m;
}

Matrix random_invertible(std::mt19937_64& rng, size_t n, int range) {
  while (true) {
    Matrix m = random_matrix(rng, n, n, range);
    if (rank(m) == n) return m;
  }
}

RandomLevi random_levi(std::mt19937_64& rng, const RandomLeviOptions& opt) {
  const size_t copies = static_cast<size_t>(uniform(rng, 1, static_cast<int>(opt.max_sl2)));
  const size_t nb = 3 * copies;
  size_t budget = static_cast<size_t>(uniform(rng, 1, static_cast<int>(opt.max_radical)));
  const size_t torus = std::min<size_t>(budget, static_cast<size_t>(uniform(rng, 0, 2)));
  budget -= torus;

  std::vector<Piece> pieces;
  size_t offset = nb + torus;
  while (budget > 0) {
    std::vector<ModuleType> fits{ModuleType::Trivial};
    if (budget >= 2) fits.push_back(ModuleType::Natural);
    if (budget >= 3) {
      fits.push_back(ModuleType::Adjoint);
      fits.push_back(ModuleType::Heisenberg);
    }
    ModuleType t = fits[rng() % fits.size()];
    size_t d = t == ModuleType::Trivial ? 1 : t == ModuleType::Natural ? 2 : 3;
    Piece p{t, rng() % copies, offset, d, {}};
    for (size_t a = 0; a < torus; ++a) p.weights.push_back(uniform(rng, -2, 2));
    pieces.push_back(p);
    offset += d;
    budget -= d;
  }
  const size_t n = offset;

  // Structure constants of the construction.
  std::vector<Rational> c(n * n * n);
  auto set = [&](size_t i, size_t j, size_t k, const Rational& v) {
    c[(i * n + j) * n + k] += v;
    c[(j * n + i) * n + k] -= v;
  };
  LieAlgebra s = catalog::sl2();
  auto nat = catalog::sl2_natural();
  for (size_t cp = 0; cp < copies; ++cp)
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j)
        for (size_t k = 0; k < 3; ++k)
          if (sgn(s.c(i, j, k)) != 0) set(3 * cp + i, 3 * cp + j, 3 * cp + k, s.c(i, j, k));
  for (const auto& p : pieces) {
    for (size_t i = 0; i < 3; ++i) {
      const size_t b = 3 * p.copy + i;
      if (p.type == ModuleType::Natural || p.type == ModuleType::Heisenberg) {
        for (size_t v = 0; v < 2; ++v)
          for (size_t w = 0; w < 2; ++w)
            if (sgn(nat[i](w, v)) != 0) set(b, p.offset + v, p.offset + w, nat[i](w, v));
      } else if (p.type == ModuleType::Adjoint) {
        for (size_t v = 0; v < 3; ++v)
          for (size_t w = 0; w < 3; ++w)
            if (sgn(s.c(i, v, w)) != 0) set(b, p.offset + v, p.offset + w, s.c(i, v, w));
      }
    }
    for (size_t a = 0; a < torus; ++a) {
      const int lambda = p.weights[a];
      if (lambda == 0) continue;
      for (size_t v = 0; v < p.dim; ++v) {
        int scale = (p.type == ModuleType::Heisenberg && v == 2) ? 2 * lambda : lambda;
        set(nb + a, p.offset + v, p.offset + v, scale);
      }
    }
    if (p.type == ModuleType::Heisenberg) set(p.offset, p.offset + 1, p.offset + 2, 1);
  }
  LieAlgebra base(n, std::move(c));

  // Gradings: degrees of every basis vector of the construction.
  std::optional<Grading> grading;
  if (opt.grading != GradingKind::None) {
    DegreeModel dm;
    dm.kind = opt.grading;
    if (opt.grading == GradingKind::Z) dm.group = std::make_shared<const GroupBackend>(GroupBackend::free_abelian(1));
    if (opt.grading == GradingKind::Z2) dm.group = std::make_shared<const GroupBackend>(GroupBackend::cyclic(2));
    if (opt.grading == GradingKind::S3) dm.group = std::make_shared<const GroupBackend>(GroupBackend::symmetric3());
    for (size_t cp = 0; cp < copies; ++cp) {
      if (opt.grading == GradingKind::Z) dm.copy_generator.push_back({1});
      if (opt.grading == GradingKind::Z2) dm.copy_generator.push_back(dm.group->element("g"));
      if (opt.grading == GradingKind::S3)
        dm.copy_generator.push_back(dm.group->element(cp % 2 == 0 ? "(12)" : "(23)"));
    }
    std::vector<GroupBackend::Element> deg(n, dm.id());
    auto random_in_centralizer = [&](size_t cp) {
      const auto& g = dm.copy_generator[cp];
      if (opt.grading == GradingKind::Z) return GroupBackend::Element{uniform(rng, -2, 2)};
      return rng() % 2 ? g : dm.id();
    };
    auto random_element = [&]() {
      if (opt.grading == GradingKind::Z) return GroupBackend::Element{uniform(rng, -2, 2)};
      return dm.group->element(rng() % dm.group->order());
    };
    for (size_t cp = 0; cp < copies; ++cp) {
      const auto& g = dm.copy_generator[cp];
      // Z: e in degree 1, f in degree -1. Finite groups: e, f in the involution g.
      deg[3 * cp] = g;
      deg[3 * cp + 2] = opt.grading == GradingKind::Z ? dm.inv(g) : g;
    }
    for (const auto& p : pieces) {
      const auto& g = dm.copy_generator[p.copy];
      auto up = [&](const GroupBackend::Element& x) { return dm.mul(g, x); };
      auto down = [&](const GroupBackend::Element& x) {
        return opt.grading == GradingKind::Z ? dm.mul(dm.inv(g), x) : dm.mul(g, x);
      };
      switch (p.type) {
        case ModuleType::Trivial:
          deg[p.offset] = random_element();
          break;
        case ModuleType::Natural: {
          auto sft = random_in_centralizer(p.copy);
          deg[p.offset + 1] = sft;
          deg[p.offset] = up(sft);
          break;
        }
        case ModuleType::Adjoint: {
          auto sft = random_in_centralizer(p.copy);
          deg[p.offset] = up(sft);
          deg[p.offset + 1] = sft;
          deg[p.offset + 2] = down(sft);
          break;
        }
        case ModuleType::Heisenberg: {
          auto sft = random_in_centralizer(p.copy);
          deg[p.offset + 1] = sft;
          deg[p.offset] = up(sft);
          deg[p.offset + 2] = dm.mul(deg[p.offset], deg[p.offset + 1]);
          break;
        }
      }
    }
    grading = Grading{dm.group, deg};
  }

  // Scramble the basis: arbitrary for ungraded input, degree-preserving otherwise.
  Matrix p(n, n);
  if (!grading) {
    p = random_invertible(rng, n);
  } else {
    while (true) {
      p = Matrix(n, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (grading->degrees[i] == grading->degrees[j]) p(i, j) = uniform(rng, -2, 2);
      if (rank(p) == n) break;
    }
  }
  RandomLevi out;
  out.algebra = base.change_basis(p);
  out.levi_dim = nb;
  Matrix pinv = *inverse(p);
  std::vector<Vector> rad, nil;
  for (size_t j = nb; j < n; ++j) rad.push_back(pinv.col(j));
  out.radical = Subspace::span(n, rad);
  // Nilradical: every module piece, plus torus combinations acting by zero on every piece.
  for (const auto& pc : pieces)
    for (size_t v = 0; v < pc.dim; ++v) nil.push_back(pinv.col(pc.offset + v));
  if (torus > 0) {
    Matrix w(pieces.size(), torus);
    for (size_t i = 0; i < pieces.size(); ++i)
      for (size_t a = 0; a < torus; ++a) w(i, a) = pieces[i].weights[a];
    Matrix ker = kernel(w);
    for (size_t r = 0; r < ker.rows(); ++r) {
      Vector old = zero_vector(n);
      for (size_t a = 0; a < torus; ++a) old[nb + a] = ker(r, a);
      nil.push_back(pinv * old);
    }
  }
  out.nilradical = Subspace::span(n, nil);
  if (grading) out.structure = *grading;
  return out;
}

}  // namespace levikit::testing
