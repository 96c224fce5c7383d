#include "levikit/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "levikit/error.hpp"

namespace levikit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, size_t degree) {
  std::vector<Rational> cs(degree + 1, Rational(0));
  cs[degree] = c;
  return Polynomial(std::move(cs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> cs = coeffs_;
  Rational inv = 1 / leading();
  for (auto& c : cs) c *= inv;
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> cs(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(cs));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
  return Polynomial(std::move(cs));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] -= b.coeffs_[i];
  return Polynomial(std::move(cs));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(cs));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InternalInconsistency, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<size_t>(i)] * inv;
    if (sgn(c) == 0) continue;
    quo[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= c * b.coeff(static_cast<size_t>(j));
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
  const size_t n = m.rows();
  Matrix acc(n, n);
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * m;
    for (size_t d = 0; d < n; ++d) acc(d, d) += p.coeffs()[i];
  }
  return acc;
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "minimal polynomial of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return Polynomial::constant(1);
  std::vector<Vector> powers{flatten(Matrix::identity(n))};
  Matrix current = Matrix::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    current = current * m;
    Vector target = flatten(current);
    auto sol = solve(Matrix::from_cols(powers, n * n), target);
    if (sol) {
      std::vector<Rational> cs(k + 1);
      for (size_t i = 0; i < k; ++i) cs[i] = -sol->x[i];
      cs[k] = 1;
      return Polynomial(std::move(cs));
    }
    powers.push_back(std::move(target));
  }
  throw Error(ErrorKind::InternalInconsistency, "minimal polynomial exceeds matrix size");
}

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, coefficients low degree first, p < 2^31.

using FpPoly = std::vector<uint64_t>;

struct Fp {
  uint64_t p;

  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; }
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }

  static void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

  FpPoly add(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
    FpPoly rem = a;
    const int db = deg(b);
    if (deg(a) < db) return {FpPoly{}, rem};
    FpPoly quo(static_cast<size_t>(deg(a) - db + 1), 0);
    const uint64_t inv_lead = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      uint64_t c = mul(rem[static_cast<size_t>(i)], inv_lead);
      if (!c) continue;
      quo[static_cast<size_t>(i - db)] = c;
      for (int j = 0; j <= db; ++j) {
        auto idx = static_cast<size_t>(i - db + j);
        rem[idx] = sub(rem[idx], mul(c, b[static_cast<size_t>(j)]));
      }
    }
    trim(quo);
    trim(rem);
    return {quo, rem};
  }
  FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly monic(const FpPoly& a) const {
    if (a.empty()) return a;
    FpPoly r = a;
    uint64_t il = inv(a.back());
    for (auto& c : r) c = mul(c, il);
    return r;
  }
  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  /// s, t with s a + t b = gcd(a, b) = 1 (asserted by the caller).
  std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    uint64_t il = inv(r0.back());
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    return {s0, t0};
  }
  FpPoly powmod(FpPoly base, const mpz_class& e, const FpPoly& m) const {
    FpPoly result{1};
    base = mod(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      result = mod(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base), m);
    }
    return result;
  }
  FpPoly derivative(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }

  std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) const {
    std::vector<std::pair<FpPoly, int>> out;
    const FpPoly x{0, 1};
    FpPoly h = mod(x, f);
    for (int i = 1; deg(f) >= 2 * i; ++i) {
      h = powmod(h, mpz_class(static_cast<unsigned long>(p)), f);
      FpPoly g = gcd(f, sub(h, x));
      if (deg(g) > 0) {
        out.emplace_back(g, i);
        f = divmod(f, g).first;
        h = mod(h, f);
      }
    }
    if (deg(f) > 0) out.emplace_back(monic(f), deg(f));
    return out;
  }

  void equal_degree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) const {
    if (deg(g) == d) {
      out.push_back(g);
      return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
    mpz_class e = (pd - 1) / 2;
    for (;;) {
      FpPoly a(static_cast<size_t>(deg(g)));
      for (auto& c : a) c = rng() % p;
      trim(a);
      if (deg(a) < 1) continue;
      FpPoly b = sub(powmod(a, e, g), FpPoly{1});
      FpPoly c = gcd(g, b);
      if (deg(c) > 0 && deg(c) < deg(g)) {
        equal_degree(c, d, rng, out);
        equal_degree(monic(divmod(g, c).first), d, rng, out);
        return;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

/// Exact division by a monic integer polynomial; nullopt when the remainder is nonzero.
std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& monic_b) {
  ZPoly rem = a;
  const size_t db = monic_b.size() - 1;
  if (rem.size() < monic_b.size()) return std::nullopt;
  ZPoly quo(rem.size() - db, mpz_class(0));
  for (size_t i = rem.size(); i-- > db;) {
    mpz_class c = rem[i];
    if (c == 0) continue;
    quo[i - db] = c;
    for (size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * monic_b[j];
  }
  ztrim(rem);
  if (!rem.empty()) return std::nullopt;
  ztrim(quo);
  return quo;
}

FpPoly to_fp(const ZPoly& f, uint64_t p) {
  FpPoly r(f.size());
  mpz_class pp(static_cast<unsigned long>(p));
  for (size_t i = 0; i < f.size(); ++i) {
    mpz_class m = f[i] % pp;
    if (m < 0) m += pp;
    r[i] = m.get_ui();
  }
  Fp::trim(r);
  return r;
}

ZPoly to_z(const FpPoly& f) {
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = mpz_class(static_cast<unsigned long>(f[i]));
  return r;
}

/// Lift f ≡ g h (mod p), g and h monic and coprime, to a factor g* ≡ g with f ≡ g* h* (mod p^k).
ZPoly hensel_lift(const ZPoly& f, const FpPoly& g, const FpPoly& h, const Fp& fp, unsigned k) {
  auto [s, t] = fp.bezout(g, h);
  ZPoly big_g = to_z(g), big_h = to_z(h);
  mpz_class m(static_cast<unsigned long>(fp.p));
  const mpz_class pz(static_cast<unsigned long>(fp.p));
  for (unsigned step = 1; step < k; ++step) {
    ZPoly prod = zmul(big_g, big_h);
    ZPoly e(std::max(f.size(), prod.size()), mpz_class(0));
    for (size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    for (auto& c : e) c /= m;  // exact by the invariant f ≡ g h (mod m)
    FpPoly ep = to_fp(e, fp.p);
    FpPoly dg = fp.mod(fp.mul(t, ep), g);
    FpPoly dh = fp.divmod(fp.sub(ep, fp.mul(dg, h)), g).first;
    ZPoly zdg = to_z(dg), zdh = to_z(dh);
    if (big_g.size() < zdg.size()) big_g.resize(zdg.size(), mpz_class(0));
    if (big_h.size() < zdh.size()) big_h.resize(zdh.size(), mpz_class(0));
    for (size_t i = 0; i < zdg.size(); ++i) big_g[i] += m * zdg[i];
    for (size_t i = 0; i < zdh.size(); ++i) big_h[i] += m * zdh[i];
    m *= pz;
  }
  return big_g;
}

ZPoly symmetric_mod(ZPoly f, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(f);
  return f;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Factors a monic squarefree integer polynomial into monic irreducibles over Z.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d <= 1) return {f};

  // Pick the prime (among a handful of good ones) giving the fewest modular factors.
  std::vector<FpPoly> best;
  uint64_t best_p = 0;
  int good = 0;
  std::mt19937_64 rng(0x5eed);
  for (uint64_t p = 3; good < 6 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    Fp fp{p};
    FpPoly fbar = to_fp(f, p);
    if (Fp::deg(fbar) != d) continue;
    if (Fp::deg(fp.gcd(fbar, fp.derivative(fbar))) != 0) continue;
    ++good;
    std::vector<FpPoly> factors;
    for (auto& [g, deg] : fp.distinct_degree(fbar)) fp.equal_degree(g, deg, rng, factors);
    if (best_p == 0 || factors.size() < best.size()) {
      best = std::move(factors);
      best_p = p;
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw Error(ErrorKind::InternalInconsistency, "no suitable prime for factorization");

  Fp fp{best_p};
  // Coefficient bound for any factor: 2^d * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= static_cast<unsigned>(d);
  mpz_class modulus(static_cast<unsigned long>(best_p));
  unsigned k = 1;
  while (modulus <= 2 * bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++k;
  }

  FpPoly fbar = to_fp(f, best_p);
  std::vector<ZPoly> lifted;
  for (const auto& g : best) {
    FpPoly h = fp.divmod(fbar, g).first;
    lifted.push_back(hensel_lift(f, g, h, fp, k));
  }

  // Recombination over subsets of increasing size.
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<size_t> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  for (size_t size = 1; 2 * size <= alive.size();) {
    bool found = false;
    std::vector<size_t> pick(size);
    for (size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      ZPoly cand{mpz_class(1)};
      for (size_t idx : pick) cand = symmetric_mod(zmul(cand, lifted[alive[idx]]), modulus);
      if (auto q = zdiv_exact(rest, cand)) {
        result.push_back(cand);
        rest = *q;
        std::vector<size_t> next;
        for (size_t i = 0; i < alive.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(alive[i]);
        alive = std::move(next);
        found = true;
        break;
      }
      // next combination in lexicographic order
      size_t i = size;
      while (i > 0 && pick[i - 1] == i - 1 + alive.size() - size) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

/// Monic squarefree rational polynomial -> monic irreducible factors.
std::vector<Polynomial> factor_squarefree(const Polynomial& p) {
  if (p.degree() <= 1) return {p.monic()};
  // Clear denominators: integer polynomial with positive leading coefficient.
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly g(p.coeffs().size());
  for (size_t i = 0; i < g.size(); ++i) g[i] = p.coeffs()[i].get_num() * (lcm_den / p.coeffs()[i].get_den());
  mpz_class content = 0;
  for (const auto& c : g) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : g) c /= content;
  if (g.back() < 0)
    for (auto& c : g) c = -c;
  const size_t d = g.size() - 1;
  const mpz_class lc = g.back();
  // Monic transform F(y) = lc^(d-1) g(y / lc).
  ZPoly monic(d + 1);
  mpz_class power = 1;
  for (size_t i = d; i-- > 0;) {
    monic[i] = g[i] * power;
    power *= lc;
  }
  monic[d] = 1;
  std::vector<Polynomial> out;
  for (const ZPoly& fac : factor_monic_squarefree(monic)) {
    // fac(lc * x), made monic over Q.
    std::vector<Rational> cs(fac.size());
    mpz_class lp = 1;
    for (size_t i = 0; i < fac.size(); ++i) {
      cs[i] = Rational(fac[i] * lp);
      lp *= lc;
    }
    out.push_back(Polynomial(std::move(cs)).monic());
  }
  return out;
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

std::vector<Factor> factor(const Polynomial& p) {
  std::vector<Factor> out;
  if (p.degree() <= 0) return out;
  // Yun's squarefree decomposition.
  Polynomial f = p.monic();
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = divmod(f, a).quotient;
  Polynomial c = divmod(df, a).quotient;
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0)
      for (auto& irr : factor_squarefree(a)) out.push_back({irr, i});
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) { return poly_less(x.factor, y.factor); });
  return out;
}

std::vector<Polynomial> irreducible_factors(const Polynomial& p) {
  std::vector<Polynomial> out;
  for (auto& f : factor(p)) out.push_back(f.factor);
  return out;
}

}  // namespace levikit
