#include "maeda/modsym/manin.hpp"

#include "maeda/arith/integers.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace maeda {

WeightPolynomial monomial_polynomial(int w, int i) {
  WeightPolynomial p(static_cast<std::size_t>(w) + 1, Integer(0));
  p[static_cast<std::size_t>(i)] = 1;
  return p;
}

namespace {

// Coefficients of (aX + bY)^e: entry j is the coefficient of X^j Y^(e-j).
std::vector<Integer> linear_power(std::int64_t a, std::int64_t b, int e) {
  std::vector<Integer> out(static_cast<std::size_t>(e) + 1, Integer(0));
  out[0] = 1;
  const Integer za(static_cast<long>(a)), zb(static_cast<long>(b));
  for (int step = 0; step < e; ++step) {
    // multiply by (aX + bY)
    for (int j = step + 1; j >= 0; --j) {
      Integer v = (j <= step) ? out[static_cast<std::size_t>(j)] * zb : Integer(0);
      if (j > 0) v += out[static_cast<std::size_t>(j - 1)] * za;
      out[static_cast<std::size_t>(j)] = v;
    }
  }
  return out;
}

void linear_power_i128(std::int64_t a, std::int64_t b, int e, __int128* out) {
  for (int j = 0; j <= e; ++j) out[j] = 0;
  out[0] = 1;
  for (int step = 0; step < e; ++step)
    for (int j = step + 1; j >= 0; --j) {
      __int128 v = (j <= step) ? out[j] * b : 0;
      if (j > 0) v += out[j - 1] * a;
      out[j] = v;
    }
}

}  // namespace

WeightPolynomial substitute(const WeightPolynomial& p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const int w = static_cast<int>(p.size()) - 1;
  WeightPolynomial out(p.size(), Integer(0));
  std::vector<std::vector<Integer>> first(static_cast<std::size_t>(w) + 1), second(static_cast<std::size_t>(w) + 1);
  for (int i = 0; i <= w; ++i) {
    if (sgn(p[static_cast<std::size_t>(i)]) == 0) continue;
    auto& f = first[static_cast<std::size_t>(i)];
    auto& s = second[static_cast<std::size_t>(w - i)];
    if (f.empty()) f = linear_power(a, b, i);
    if (s.empty()) s = linear_power(c, d, w - i);
    for (int j = 0; j <= i; ++j) {
      if (sgn(f[static_cast<std::size_t>(j)]) == 0) continue;
      Integer t = p[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
      for (int l = 0; l <= w - i; ++l)
        mpz_addmul(out[static_cast<std::size_t>(j + l)].get_mpz_t(), t.get_mpz_t(),
                   s[static_cast<std::size_t>(l)].get_mpz_t());
    }
  }
  return out;
}

bool monomial_fits_int128(int w, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const double m = static_cast<double>(std::max(std::llabs(a) + std::llabs(b), std::llabs(c) + std::llabs(d)));
  return w * std::log2(std::max(m, 1.0)) < 125.0;
}

void substitute_monomial_i128(int w, int i, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                              __int128* out) {
  __int128 f[64], s[64];
  linear_power_i128(a, b, i, f);
  linear_power_i128(c, d, w - i, s);
  for (int j = 0; j <= w; ++j) out[j] = 0;
  for (int j = 0; j <= i; ++j) {
    if (f[j] == 0) continue;
    for (int l = 0; l <= w - i; ++l) out[j + l] += f[j] * s[l];
  }
}

Mat2 lift_to_sl2z(std::int64_t c, std::int64_t d, std::int64_t level) {
  if (level == 1) return {1, 0, 0, 1};
  c = mod(c, level);
  d = mod(d, level);
  if (gcd(gcd(c, d), level) != 1) throw std::invalid_argument("lift_to_sl2z: gcd(c, d, N) != 1");
  if (c == 0) c = level;
  while (gcd(c, d) != 1) d += level;
  const auto eg = extended_gcd(d, c);  // x*d + y*c = 1
  return {eg.x, -eg.y, c, d};
}

std::vector<Mat2> manin_trick(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) return {{1, 0, 0, 1}};
  if (num == 0) return {};
  const std::int64_t g = gcd(num, den);
  num /= g;
  den /= g;
  std::vector<Mat2> out{{1, 0, 0, 1}};
  std::int64_t p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  std::int64_t sign = -1;
  std::int64_t n = num, d = den;
  while (d != 0) {
    std::int64_t a = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --a;  // floor
    const std::int64_t p0 = a * p1 + p2, q0 = a * q1 + q2;
    out.push_back({sign * p0, p1, sign * q0, q1});
    p2 = p1;
    q2 = q1;
    p1 = p0;
    q1 = q0;
    sign = -sign;
    const std::int64_t r = n - a * d;
    n = d;
    d = r;
  }
  return out;
}

const std::vector<Mat2>& merel_matrices(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<Mat2>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Mat2> out;
  for (std::int64_t a = 1; a <= n; ++a) {
    // b = 0: ad = n, any 0 <= c < d.
    if (n % a == 0) {
      const std::int64_t d = n / a;
      for (std::int64_t c = 0; c < d; ++c) out.push_back({a, 0, c, d});
    }
    for (std::int64_t b = 1; b < a; ++b) {
      // ad = n + bc with 0 <= c < d forces c * (a - b) < n.
      for (std::int64_t c = 0; c * (a - b) < n; ++c) {
        const std::int64_t t = n + b * c;
        if (t % a != 0) continue;
        const std::int64_t d = t / a;
        if (c < d) out.push_back({a, b, c, d});
      }
    }
  }
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Mat2> hecke_coset_representatives(std::int64_t n, std::int64_t level) {
  std::vector<Mat2> out;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a != 0 || gcd(a, level) != 1) continue;
    const std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b) out.push_back({a, b, 0, d});
  }
  return out;
}

Cusp normalize_cusp(std::int64_t u, std::int64_t v) {
  const std::int64_t g = gcd(u, v);
  if (g == 0) throw std::invalid_argument("normalize_cusp: 0/0");
  u /= g;
  v /= g;
  if (v < 0 || (v == 0 && u < 0)) {
    u = -u;
    v = -v;
  }
  return {u, v};
}

namespace {

// s with u*s = 1 mod v (any s when v = 1, s = u when v = 0).
std::int64_t cusp_inverse(const Cusp& x) {
  if (x.v == 0) return x.u;
  if (x.v == 1) return 0;
  return mod(extended_gcd(mod(x.u, x.v), x.v).x, x.v);
}

}  // namespace

bool cusps_equivalent(const Cusp& x, const Cusp& y, std::int64_t level) {
  const std::int64_t m = gcd(x.v * y.v, level);
  const std::int64_t lhs = cusp_inverse(x) * y.v - cusp_inverse(y) * x.v;
  return mod(lhs, m) == 0;
}

std::vector<Cusp> cusp_representatives(std::int64_t level) {
  std::vector<Cusp> reps{{1, 0}};
  for (std::int64_t v = 1; v <= level; ++v)
    for (std::int64_t u = 0; u < v; ++u) {
      if (gcd(u, v) != 1) continue;
      const Cusp c{u, v};
      bool found = false;
      for (const auto& r : reps)
        if (cusps_equivalent(c, r, level)) {
          found = true;
          break;
        }
      if (!found) reps.push_back(c);
    }
  return reps;
}

}  // namespace maeda
