#include "maeda/arith/factor.hpp"
#include "maeda/arith/integers.hpp"
#include "maeda/arith/subspace.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace maeda;

namespace {

ExactMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  ExactMatrix m = zero_matrix(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ExactMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  ExactMatrix m = zero_matrix(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  auto id = rref<Rational>(identity_matrix(2));
  CHECK(id.reduced == identity_matrix(2));
  CHECK(id.pivots == std::vector<Index>{0, 1});

  auto z = rref<Rational>(zero_matrix(3, 3));
  CHECK(z.rank() == 0);
  CHECK(is_zero(z.reduced));

  auto dep = rref<Rational>(mat({{1, 2}, {2, 4}}));
  CHECK(dep.reduced == mat({{1, 2}, {0, 0}}));
  CHECK(dep.pivots == std::vector<Index>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis<Rational>(identity_matrix(2)).cols() == 0);
  CHECK(kernel_basis<Rational>(zero_matrix(2, 2)).cols() == 2);
  auto k = kernel_basis<Rational>(mat({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(sgn(k(0, 0)) != 0);
}

TEST_CASE("rank plus nullity, kernel is annihilated") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Index r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    ExactMatrix m = random_matrix(rng, r, c, 3);
    if (trial % 3 == 0 && r > 1) m.row(r - 1) = m.row(0) * Rational(2);  // force dependence
    const auto k = kernel_basis<Rational>(m);
    CHECK(rank<Rational>(m) + k.cols() == c);
    CHECK(is_zero(multiply(m, k)));
    CHECK(rank<Rational>(k) == k.cols());
  }
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(mat({{5}})) == IntPolynomial{-5, 1});
  CHECK(charpoly(identity_matrix(2)) == IntPolynomial{1, -2, 1});
  CHECK(charpoly(mat({{0, 1}, {1, 0}})) == IntPolynomial{-1, 0, 1});
  CHECK_THROWS(charpoly(zero_matrix(2, 3)));
}

TEST_CASE("charpoly: Cayley-Hamilton and Faddeev-LeVerrier agree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + trial % 6;
    const ExactMatrix m = random_matrix(rng, n, n, 9);
    const IntPolynomial f = charpoly(m);
    CHECK(f.degree() == n);
    std::vector<Rational> coeffs;
    for (const auto& c : f.coefficients()) coeffs.emplace_back(c);
    CHECK(is_zero(evaluate_at_matrix(coeffs, m)));
    CHECK(coeffs == oracle::faddeev_leverrier(m));
  }
}

TEST_CASE("charpoly_rational undoes the clearing scalar") {
  ExactMatrix m = mat({{1, 2}, {3, 4}});
  m(0, 1) = Rational(1, 2);
  m(1, 0) = 6;  // similar to [[1,1],[3,4]] by diag(1,2)
  CHECK(charpoly_rational(m) == IntPolynomial{1, -5, 1});
  ExactMatrix bad = zero_matrix(1, 1);
  bad(0, 0) = Rational(1, 3);
  CHECK_THROWS(charpoly_rational(bad));
}

TEST_CASE("factor examples") {
  auto f = factor_int_poly(IntPolynomial{-1, 0, 1});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == FactorPower{IntPolynomial{-1, 1}, 1});
  CHECK(f.factors[1] == FactorPower{IntPolynomial{1, 1}, 1});

  auto g = factor_int_poly(IntPolynomial{1, 0, 1});
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0] == FactorPower{IntPolynomial{1, 0, 1}, 1});

  const IntPolynomial h = IntPolynomial{-2, 1}.pow(2) * IntPolynomial{1, 1, 1};
  auto hf = factor_int_poly(h);
  REQUIRE(hf.factors.size() == 2);
  CHECK(hf.factors[0] == FactorPower{IntPolynomial{-2, 1}, 2});
  CHECK(hf.factors[1] == FactorPower{IntPolynomial{1, 1, 1}, 1});
  CHECK(hf.content == 1);

  CHECK_THROWS(factor_int_poly(IntPolynomial{}));
}

TEST_CASE("factor: content and sign") {
  auto f = factor_int_poly(IntPolynomial{6, -6});  // -6 (x - 1)
  CHECK(f.content == -6);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].factor == IntPolynomial{-1, 1});
  CHECK(f.expand() == IntPolynomial{6, -6});
}

TEST_CASE("factor: hard recombination cases") {
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  auto f = factor_int_poly(IntPolynomial{1, 0, 0, 0, 1});
  CHECK(f.factors.size() == 1);
  // Swinnerton-Dyer polynomial for sqrt2, sqrt3: x^4 - 10x^2 + 1.
  auto sd = factor_int_poly(IntPolynomial{1, 0, -10, 0, 1});
  CHECK(sd.factors.size() == 1);
  // (x^4 - 10x^2 + 1)(x^2 - 2)
  auto p = factor_int_poly(IntPolynomial{1, 0, -10, 0, 1} * IntPolynomial{-2, 0, 1});
  CHECK(p.factors.size() == 2);
}

TEST_CASE("factor: random products of known irreducibles round-trip") {
  const std::vector<IntPolynomial> irreducibles = {
      {-1, 1},       {3, 2},          {1, 0, 1},        {-2, 0, 1},      {1, 1, 1},           {-1, -1, 1},
      {-2, 0, 0, 1}, {1, -1, 0, 1},   {1, 0, 0, 0, 1},  {5, 0, 0, 0, 1}, {1, 0, -10, 0, 1},  {3, 1, 0, 0, 2},
      {7, 3},        {-5, 0, 3},      {1, 1, 1, 1, 1},  {-3, 1},
  };
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, irreducibles.size() - 1);
  std::uniform_int_distribution<int> count(1, 4), mult(1, 3), content(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    IntPolynomial f = IntPolynomial::constant(1);
    std::map<IntPolynomial, int> expected;
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      const auto& q = irreducibles[pick(rng)];
      const int e = mult(rng);
      f = f * q.pow(e);
      expected[q.primitive_part()] += e;
    }
    int c = content(rng);
    if (c == 0) c = 1;
    f = Integer(c) * f;
    const auto fac = factor_int_poly(f);
    CHECK(fac.expand() == f);
    std::map<IntPolynomial, int> got;
    for (const auto& fp : fac.factors) got[fp.factor] += fp.multiplicity;
    CHECK(got == expected);
    const auto again = factor_int_poly(f);
    CHECK(again.content == fac.content);
    CHECK(again.factors == fac.factors);
  }
}

TEST_CASE("squarefree decomposition") {
  const IntPolynomial a{1, 1}, b{-2, 0, 1};
  auto parts = squarefree_decomposition(a * b.pow(3));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == a);
  CHECK(parts[1] == IntPolynomial{1});
  CHECK(parts[2] == b);
}

TEST_CASE("polynomial basics") {
  const IntPolynomial f{2, 0, 4};
  CHECK(f.content() == 2);
  CHECK(f.primitive_part() == IntPolynomial{1, 0, 2});
  CHECK(f.derivative() == IntPolynomial{0, 8});
  CHECK(f.evaluate(3) == 38);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 2, 1}) == IntPolynomial{1, 1});
  CHECK(exact_divide(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 1}) == IntPolynomial{-1, 1});
  CHECK_FALSE(exact_divide(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}).has_value());
  CHECK(IntPolynomial{1, -3, 1}.to_string() == "x^2 - 3*x + 1");
}

TEST_CASE("integer factorization examples") {
  CHECK(factorize_int(1).empty());
  CHECK(divisor_count(1) == 1);
  CHECK(factorize_int(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(divisor_count(12) == 6);
  CHECK(factorize_int(97) == std::vector<PrimePower>{{97, 1}});
  CHECK(divisor_count(97) == 2);
  CHECK_THROWS(factorize_int(0));
}

TEST_CASE("integer helpers against brute force") {
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::int64_t prod = 1, d = 0, phi = 0;
    for (const auto& pe : factorize_int(n))
      for (int e = 0; e < pe.exponent; ++e) prod *= pe.prime;
    for (std::int64_t i = 1; i <= n; ++i) {
      if (n % i == 0) ++d;
      if (std::gcd(i, n) == 1) ++phi;
    }
    CHECK(prod == n);
    CHECK(divisor_count(n) == d);
    CHECK(euler_phi(n) == phi);
    CHECK(static_cast<std::int64_t>(divisors(n).size()) == d);
    bool prime = n > 1;
    for (std::int64_t i = 2; i * i <= n; ++i) prime = prime && n % i != 0;
    CHECK(is_prime(n) == prime);
  }
  const auto eg = extended_gcd(240, 46);
  CHECK(eg.g == 2);
  CHECK(240 * eg.x + 46 * eg.y == 2);
  CHECK(mod(-7, 5) == 3);
}

TEST_CASE("kronecker symbol matches Euler's criterion at odd primes") {
  for (std::int64_t p : primes_up_to(60)) {
    if (p == 2) continue;
    for (std::int64_t d = -30; d <= 30; ++d) {
      std::int64_t r = 1, b = mod(d, p);
      for (std::int64_t e = (p - 1) / 2; e > 0; --e) r = r * b % p;
      const int euler = r == 0 ? 0 : (r == 1 ? 1 : -1);
      CHECK(kronecker(d, p) == euler);
    }
  }
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(-7, 2) == 1);
}

TEST_CASE("fundamental discriminants") {
  CHECK(negative_fundamental_discriminants_dividing(27) == std::vector<std::int64_t>{-3});
  CHECK(negative_fundamental_discriminants_dividing(32) == std::vector<std::int64_t>{-4, -8});
  CHECK(negative_fundamental_discriminants_dividing(11) == std::vector<std::int64_t>{-11});
  CHECK(negative_fundamental_discriminants_dividing(10).empty());
  CHECK(is_fundamental_discriminant(-4));
  CHECK_FALSE(is_fundamental_discriminant(-12));
}

TEST_CASE("subspace operations") {
  const auto s = Subspace::span(mat({{1, 2}, {1, 2}, {0, 0}}));
  CHECK(s.dim() == 1);
  ExactVector v = zero_vector(3);
  v << 3, 3, 0;
  CHECK(s.contains(v));
  v(2) = 1;
  CHECK_FALSE(s.contains(v));
  CHECK(Subspace::whole(3).kernel_of(mat({{1, 1, 0}})).dim() == 2);
  CHECK_THROWS(s.restrict_operator(mat({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}})));
}
