#include "maeda/arith/factor.hpp"

#include "maeda/arith/integers.hpp"

#include <algorithm>
#include <stdexcept>

namespace maeda {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^31, coefficients lowest degree first, trimmed.

using PolyP = std::vector<long>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }

long powmod(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

long invmod(long a, long p) { return powmod(mod(a, p), p - 2, p); }

PolyP reduce(const IntPolynomial& f, long p) {
  PolyP out;
  for (const auto& c : f.coefficients()) out.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p))));
  trim(out);
  return out;
}

PolyP sub(PolyP a, const PolyP& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

PolyP mul(const PolyP& a, const PolyP& b, long p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(c);
  return c;
}

// a = q*b + r
void divmod(const PolyP& a, const PolyP& b, long p, PolyP& q, PolyP& r) {
  if (b.empty()) throw std::logic_error("polynomial division by zero mod p");
  r = a;
  const long inv = invmod(b.back(), p);
  const std::size_t db = b.size() - 1;
  q.assign(r.size() >= b.size() ? r.size() - db : 0, 0);
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const long c = mulmod(r.back(), inv, p);
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] = mod(r[shift + i] - mulmod(c, b[i], p), p);
    trim(r);
  }
  trim(q);
}

PolyP rem(const PolyP& a, const PolyP& b, long p) {
  PolyP q, r;
  divmod(a, b, p, q, r);
  return r;
}

PolyP make_monic(PolyP a, long p) {
  if (a.empty()) return a;
  const long inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

PolyP gcd_p(PolyP a, PolyP b, long p) {
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

PolyP derivative_p(const PolyP& a, long p) {
  PolyP d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], static_cast<long>(i % p), p));
  trim(d);
  return d;
}

// Extended Euclid: s*a + t*b = 1 (a, b coprime).
void bezout_p(const PolyP& a, const PolyP& b, long p, PolyP& s, PolyP& t) {
  PolyP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PolyP q, r;
    divmod(r0, r1, p, q, r);
    PolyP s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("bezout_p: inputs not coprime");
  const long inv = invmod(r0[0], p);
  s = s0;
  t = t0;
  for (auto& c : s) c = mulmod(c, inv, p);
  for (auto& c : t) c = mulmod(c, inv, p);
}

PolyP powmod_poly(PolyP base, long e, const PolyP& f, long p) {
  PolyP r{1};
  base = rem(base, f, p);
  while (e > 0) {
    if (e & 1) r = rem(mul(r, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// Null space (row vectors v with v*m = 0) of a square matrix over F_p.
std::vector<PolyP> left_kernel_p(std::vector<std::vector<long>> m, long p) {
  // Transpose, then right kernel by Gauss-Jordan.
  const std::size_t n = m.size();
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[j][i];
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = r; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    const long inv = invmod(a[r][c], p);
    for (auto& x : a[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = mod(a[i][j] - mulmod(f, a[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<PolyP> out;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    PolyP v(n, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod(-a[i][fc], p);
    trim(v);
    out.push_back(std::move(v));
  }
  return out;
}

// Berlekamp factorization of a monic squarefree polynomial over F_p.
std::vector<PolyP> berlekamp(const PolyP& f, long p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};
  std::vector<std::vector<long>> q(n, std::vector<long>(n, 0));
  PolyP xp = powmod_poly(PolyP{0, 1}, p, f, p);
  PolyP row{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) q[i][j] = row[j];
    q[i][i] = mod(q[i][i] - 1, p);
    row = rem(mul(row, xp, p), f, p);
  }
  auto basis = left_kernel_p(q, p);
  const std::size_t r = basis.size();
  std::vector<PolyP> factors{f};
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    if (v.size() <= 1) continue;
    for (long s = 0; s < p && factors.size() < r; ++s) {
      PolyP vs = v;
      vs[0] = mod(vs[0] - s, p);
      trim(vs);
      std::vector<PolyP> next;
      for (const auto& u : factors) {
        if (u.size() <= 2) {
          next.push_back(u);
          continue;
        }
        PolyP g = gcd_p(u, vs, p);
        if (g.size() > 1 && g.size() < u.size()) {
          PolyP qq, rr;
          divmod(u, g, p, qq, rr);
          next.push_back(g);
          next.push_back(make_monic(qq, p));
        } else {
          next.push_back(u);
        }
      }
      factors = std::move(next);
    }
  }
  if (factors.size() != r) throw std::logic_error("berlekamp: failed to split completely");
  std::sort(factors.begin(), factors.end(), [](const PolyP& a, const PolyP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return factors;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo m = p^a, coefficient vectors in [0, m).

using PolyZ = std::vector<Integer>;

void trim(PolyZ& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

PolyZ lift_p(const PolyP& a) {
  PolyZ out;
  for (long c : a) out.emplace_back(c);
  return out;
}

PolyZ mul_mod(const PolyZ& a, const PolyZ& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  PolyZ c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  trim(c);
  return c;
}

PolyZ scale_mod(PolyZ a, const Integer& s, const Integer& m) {
  for (auto& x : a) {
    x *= s;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  trim(a);
  return a;
}

PolyP to_p(const PolyZ& a, long p) {
  PolyP out;
  for (const auto& c : a) out.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p))));
  trim(out);
  return out;
}

// Given f = g*h mod p with g monic and gcd(g, h) = 1 mod p, lift to f = g*h mod p^a.
void hensel_lift(const PolyZ& f, PolyZ& g, PolyZ& h, long p, int a) {
  PolyP s, t;
  bezout_p(to_p(g, p), to_p(h, p), p, s, t);
  const PolyP gp = to_p(g, p);
  const PolyP hp = to_p(h, p);
  Integer pj = p;
  for (int j = 1; j < a; ++j) {
    Integer pj1 = pj * p;
    PolyZ gh = mul_mod(g, h, pj1);
    PolyZ e(std::max(f.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    PolyP ep;
    for (auto& c : e) {
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pj1.get_mpz_t());
      Integer qq;
      mpz_divexact(qq.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
      ep.push_back(static_cast<long>(mpz_fdiv_ui(qq.get_mpz_t(), static_cast<unsigned long>(p))));
    }
    trim(ep);
    if (!ep.empty()) {
      PolyP te = mul(t, ep, p), q, sigma;
      divmod(te, gp, p, q, sigma);
      PolyP tau = mul(s, ep, p);
      PolyP qh = mul(q, hp, p);
      if (tau.size() < qh.size()) tau.resize(qh.size(), 0);
      for (std::size_t i = 0; i < qh.size(); ++i) tau[i] = (tau[i] + qh[i]) % p;
      trim(tau);
      if (g.size() < sigma.size()) g.resize(sigma.size(), Integer(0));
      for (std::size_t i = 0; i < sigma.size(); ++i) g[i] += pj * sigma[i];
      if (h.size() < tau.size()) h.resize(tau.size(), Integer(0));
      for (std::size_t i = 0; i < tau.size(); ++i) h[i] += pj * tau[i];
    }
    pj = pj1;
  }
}

Integer symmetric(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

void next_combination(std::vector<std::size_t>& idx, std::size_t n, bool& done) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return;
    }
  }
  done = true;
}

// Irreducible factors of a primitive squarefree polynomial with positive lc.
std::vector<IntPolynomial> factor_squarefree(IntPolynomial f) {
  if (f.degree() <= 1) return {f};
  const long p = good_prime(f);
  auto modular = factor_mod_p(f, p);
  if (modular.size() == 1) return {f};

  // Coefficient bound for factors: 2^n * ||f||_2, times |lc| for the scaled candidates.
  Integer norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = 2 * abs(f.leading()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  int a = 1;
  Integer m = p;
  while (m <= bound) {
    m *= p;
    ++a;
  }

  // Multifactor lift by peeling one monic factor at a time.
  std::vector<PolyZ> lifted;
  PolyZ cur = f.coefficients();
  for (auto& c : cur) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    PolyZ g = lift_p(modular[i]);
    PolyP rest{mod(static_cast<long>(mpz_fdiv_ui(f.leading().get_mpz_t(), static_cast<unsigned long>(p))), p)};
    for (std::size_t j = i + 1; j < modular.size(); ++j) rest = mul(rest, modular[j], p);
    PolyZ h = lift_p(rest);
    // Pin h's leading coefficient to lc(f) mod p^a.
    Integer lc;
    mpz_fdiv_r(lc.get_mpz_t(), f.leading().get_mpz_t(), m.get_mpz_t());
    h.back() = lc;
    hensel_lift(cur, g, h, p, a);
    for (auto& c : g) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    for (auto& c : h) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    lifted.push_back(g);
    cur = h;
  }
  {
    Integer inv;
    Integer lc = cur.back();
    if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t()) == 0)
      throw std::logic_error("factor: leading coefficient not invertible mod p^a");
    lifted.push_back(scale_mod(cur, inv, m));
  }

  // Subset recombination.
  std::vector<IntPolynomial> out;
  std::vector<PolyZ> remaining = lifted;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool done = false;
    while (!done) {
      PolyZ cand{f.leading()};
      for (auto i : idx) cand = mul_mod(cand, remaining[i], m);
      std::vector<Integer> sym;
      for (const auto& c : cand) sym.push_back(symmetric(c, m));
      IntPolynomial g = IntPolynomial(std::move(sym)).primitive_part();
      if (g.degree() > 0 && mpz_divisible_p(f.coeff(0).get_mpz_t(), g.coeff(0).get_mpz_t()) != 0) {
        if (auto q = exact_divide(f, g)) {
          out.push_back(g);
          f = q->primitive_part();
          std::vector<PolyZ> next;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(remaining[i]);
          remaining = std::move(next);
          found = true;
          break;
        }
      }
      next_combination(idx, remaining.size(), done);
    }
    if (!found) ++s;
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

}  // namespace

IntPolynomial Factorization::expand() const {
  IntPolynomial r = IntPolynomial::constant(content);
  for (const auto& fp : factors) r = r * fp.factor.pow(fp.multiplicity);
  return r;
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& f) {
  std::vector<IntPolynomial> parts;
  if (f.degree() <= 0) return parts;
  auto divide = [](const IntPolynomial& a, const IntPolynomial& b) {
    auto q = exact_divide(a, b);
    if (!q) throw std::logic_error("squarefree_decomposition: inexact division");
    return *q;
  };
  IntPolynomial df = f.derivative();
  IntPolynomial b = gcd(f, df);
  IntPolynomial c = divide(f, b);
  IntPolynomial d = divide(df, b) - c.derivative();
  while (c.degree() > 0) {
    IntPolynomial a = gcd(c, d);
    parts.push_back(a);
    c = divide(c, a);
    d = divide(d, a) - c.derivative();
  }
  return parts;
}

long good_prime(const IntPolynomial& f) {
  for (long p = 2;; p = static_cast<long>(next_prime(p))) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    PolyP fp = reduce(f, p);
    PolyP g = gcd_p(fp, derivative_p(fp, p), p);
    if (g.size() == 1) return p;
  }
}

std::vector<std::vector<long>> factor_mod_p(const IntPolynomial& f, long p) {
  return berlekamp(make_monic(reduce(f, p), p), p);
}

Factorization factor_int_poly(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_int_poly: zero polynomial");
  Factorization out;
  out.content = f.content();
  if (sgn(f.leading()) < 0) out.content = -out.content;
  const IntPolynomial prim = f.primitive_part();
  auto parts = squarefree_decomposition(prim);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    for (auto& g : factor_squarefree(parts[i].primitive_part()))
      out.factors.push_back({g, static_cast<int>(i) + 1});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
  return out;
}

IntPolynomial charpoly(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix is not square");
  if (!is_integral(m)) throw std::invalid_argument("charpoly: matrix entries must be integral");
  auto c = charpoly_coefficients<Rational>(m);
  std::vector<Integer> z;
  for (const auto& q : c) z.push_back(q.get_num());
  return IntPolynomial(std::move(z));
}

IntPolynomial charpoly_rational(const ExactMatrix& m) {
  const Integer scale = denominator_lcm(m);
  ExactMatrix scaled = m;
  const Rational s(scale);
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) scaled(i, j) *= s;
  IntPolynomial f = charpoly(scaled);
  // f(x) = det(x - L*m) = L^n * g(x / L); coefficient i of g is f_i * L^(i - n).
  const int n = f.degree();
  std::vector<Integer> g(static_cast<std::size_t>(n) + 1);
  Integer pw = 1;
  for (int i = n; i >= 0; --i) {
    const Integer& fi = f.coefficients()[static_cast<std::size_t>(i)];
    if (!mpz_divisible_p(fi.get_mpz_t(), pw.get_mpz_t()))
      throw std::domain_error("charpoly_rational: characteristic polynomial is not integral");
    mpz_divexact(g[static_cast<std::size_t>(i)].get_mpz_t(), fi.get_mpz_t(), pw.get_mpz_t());
    pw *= scale;
  }
  return IntPolynomial(std::move(g));
}

}  // namespace maeda
