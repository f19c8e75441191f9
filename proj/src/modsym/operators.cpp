#include "maeda/modsym/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace maeda {

std::vector<Mat2> heilbronn_cremona(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("heilbronn_cremona: p must be prime");
  std::vector<Mat2> out{{1, 0, 0, p}};
  if (p == 2) {
    out.push_back({1, 0, 1, 2});
    out.push_back({2, 0, 0, 1});
    out.push_back({2, 1, 0, 1});
    return out;
  }
  for (std::int64_t r = -(p / 2); r <= p / 2; ++r) {
    std::int64_t x1 = p, x2 = -r, y1 = 0, y2 = 1, a = -p, b = r;
    out.push_back({x1, x2, y1, y2});
    while (b != 0) {
      // nearest integer to a/b, halves rounded away from zero
      const std::int64_t q = static_cast<std::int64_t>(std::llround(static_cast<double>(a) / static_cast<double>(b)));
      const std::int64_t c = a - b * q;
      a = -b;
      b = c;
      const std::int64_t x3 = q * x2 - x1;
      x1 = x2;
      x2 = x3;
      const std::int64_t y3 = q * y2 - y1;
      y1 = y2;
      y2 = y3;
      out.push_back({x1, x2, y1, y2});
    }
  }
  return out;
}

namespace {

void add_polynomial(GeneratorAccumulator& acc, const WeightPolynomial& poly, std::size_t mu, std::size_t point) {
  for (std::size_t m = 0; m < poly.size(); ++m) acc.add(m * mu + point, poly[m]);
}

void accumulate_heilbronn(const SymbolSpace& space, std::size_t generator, const std::vector<Mat2>& matrices,
                          GeneratorAccumulator& acc) {
  const int w = space.weight() - 2;
  const std::size_t mu = space.p1().size();
  const auto [i, pt] = space.generator_parts(generator);
  const auto [u, v] = space.p1().rep(pt);
  __int128 coeffs[64];
  WeightPolynomial mono;
  for (const auto& h : matrices) {
    const auto target = space.p1().lookup(u * h.a + v * h.c, u * h.b + v * h.d);
    if (!target) continue;
    if (monomial_fits_int128(w, h.a, h.b, h.c, h.d)) {
      substitute_monomial_i128(w, i, h.a, h.b, h.c, h.d, coeffs);
      for (int m = 0; m <= w; ++m) acc.add(static_cast<std::size_t>(m) * mu + *target, coeffs[m]);
    } else {
      if (mono.empty()) mono = monomial_polynomial(w, i);
      add_polynomial(acc, substitute(mono, h.a, h.b, h.c, h.d), mu, *target);
    }
  }
}

}  // namespace

ExactVector heilbronn_image(const SymbolSpace& space, std::size_t generator, const std::vector<Mat2>& matrices) {
  GeneratorAccumulator acc(space.generator_count());
  accumulate_heilbronn(space, generator, matrices, acc);
  return acc.to_basis(space);
}

ExactMatrix heilbronn_operator(const SymbolSpace& space, const std::vector<Mat2>& matrices) {
  const Index n = space.dimension();
  ExactMatrix out = zero_matrix(n, n);
  GeneratorAccumulator acc(space.generator_count());
  for (Index j = 0; j < n; ++j) {
    accumulate_heilbronn(space, space.basis_generator(j), matrices, acc);
    out.col(j) = acc.to_basis(space);
  }
  return out;
}

std::vector<Mat2> hecke_matrices(std::int64_t n, std::int64_t level) {
  if (n < 1) throw std::invalid_argument("hecke: n must be >= 1");
  if (is_prime(n) && level % n != 0) return heilbronn_cremona(n);
  return merel_matrices(n);
}

ExactMatrix hecke_full(const SymbolSpace& space, std::int64_t n) {
  if (space.is_empty_marker()) return zero_matrix(0, 0);
  return heilbronn_operator(space, hecke_matrices(n, space.level()));
}

namespace {

// Q{0, num/den} as Manin symbols at the level of `to`.
void add_path_from_zero(GeneratorAccumulator& acc, const SymbolSpace& to, const WeightPolynomial& q, std::int64_t num,
                        std::int64_t den, int sign) {
  const std::size_t mu = to.p1().size();
  for (const auto& g : manin_trick(num, den)) {
    WeightPolynomial r = substitute(q, g.a, g.b, g.c, g.d);
    const std::size_t pt = *to.p1().lookup(g.c, g.d);
    for (std::size_t m = 0; m < r.size(); ++m) {
      if (sign < 0) r[m] = -r[m];
      acc.add(m * mu + pt, r[m]);
    }
  }
}

void accumulate_action(const SymbolSpace& from, std::size_t generator, const Mat2& h, const SymbolSpace& to,
                       GeneratorAccumulator& acc) {
  const int w = from.weight() - 2;
  const auto [i, pt] = from.generator_parts(generator);
  const auto [u, v] = from.p1().rep(pt);
  const Mat2 m = h * lift_to_sl2z(u, v, from.level());
  // m (X^i Y^(w-i)) = P(DX - BY, -CX + AY)
  const WeightPolynomial q = substitute(monomial_polynomial(w, i), m.d, -m.b, -m.c, m.a);
  // (mP){m 0, m oo} = Q{0, A/C} - Q{0, B/D}
  add_path_from_zero(acc, to, q, m.a, m.c, 1);
  add_path_from_zero(acc, to, q, m.b, m.d, -1);
}

}  // namespace

ExactVector act_on_generator(const SymbolSpace& from, std::size_t generator, const Mat2& h, const SymbolSpace& to) {
  GeneratorAccumulator acc(to.generator_count());
  accumulate_action(from, generator, h, to, acc);
  return acc.to_basis(to);
}

ExactMatrix matrix_action(const SymbolSpace& from, const std::vector<Mat2>& matrices, const SymbolSpace& to) {
  if (from.weight() != to.weight()) throw std::invalid_argument("matrix_action: weights differ");
  const Index n = from.dimension();
  ExactMatrix out = zero_matrix(to.dimension(), n);
  GeneratorAccumulator acc(to.generator_count());
  for (Index j = 0; j < n; ++j) {
    for (const auto& h : matrices) accumulate_action(from, from.basis_generator(j), h, to, acc);
    out.col(j) = acc.to_basis(to);
  }
  return out;
}

ExactMatrix hecke_full_cosets(const SymbolSpace& space, std::int64_t n) {
  return matrix_action(space, hecke_coset_representatives(n, space.level()), space);
}

OperatorMatrix hecke_matrix(const SymbolSpace& space, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_matrix: p must be prime");
  const std::string name = (space.level() % p == 0 ? "U_" : "T_") + std::to_string(p);
  if (space.is_empty_marker()) return {name, zero_matrix(0, 0)};
  return {name, space.cuspidal().restrict_operator(hecke_full(space, p))};
}

OperatorMatrix degeneracy_lower(const SymbolSpace& space, const SymbolSpace& lower, std::int64_t t) {
  const std::int64_t n = space.level(), m = lower.level();
  if (m < 1 || n % m != 0 || m == n) throw std::invalid_argument("degeneracy_lower: target level must be a proper divisor");
  if (t < 1 || (n / m) % t != 0) throw std::invalid_argument("degeneracy_lower: t must divide N/M");
  return {"degeneracy " + std::to_string(t) + ": " + std::to_string(n) + "->" + std::to_string(m),
          matrix_action(space, {{t, 0, 0, 1}}, lower)};
}

std::vector<std::int64_t> exact_prime_power_divisors(std::int64_t level) {
  std::vector<std::int64_t> out;
  for (const auto& pe : factorize_int(level)) {
    std::int64_t q = 1;
    for (int e = 0; e < pe.exponent; ++e) q *= pe.prime;
    out.push_back(q);
  }
  return out;
}

OperatorMatrix atkin_lehner_full(const SymbolSpace& space, std::int64_t q) {
  const std::int64_t n = space.level();
  if (q < 1 || n % q != 0 || gcd(q, n / q) != 1)
    throw std::invalid_argument("atkin_lehner: Q must be an exact divisor of N");
  const auto eg = extended_gcd(q, n / q);  // q x + (n/q) y = 1
  const Mat2 w{q * eg.x, -eg.y, n, q};
  ExactMatrix m = matrix_action(space, {w}, space);
  const int half = (space.weight() - 2) / 2;
  Integer scale = 1;
  for (int e = 0; e < half; ++e) scale *= q;
  if (scale != 1) {
    const Rational inv(Integer(1), scale);
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i)
        if (sgn(m(i, j)) != 0) m(i, j) *= inv;
  }
  return {"W_" + std::to_string(q), std::move(m)};
}

OperatorMatrix atkin_lehner(const SymbolSpace& space, const Subspace& subspace, std::int64_t q) {
  auto full = atkin_lehner_full(space, q);
  return {full.name, subspace.restrict_operator(full.matrix)};
}

}  // namespace maeda
