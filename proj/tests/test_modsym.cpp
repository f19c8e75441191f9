#include "maeda/modsym/dimension.hpp"
#include "maeda/modsym/operators.hpp"
#include "maeda/orbits/workspace.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace maeda;

namespace {

SpaceCache& shared_spaces() {
  static SpaceCache cache;
  return cache;
}

const SymbolSpace& space(std::int64_t n, int k) { return *shared_spaces().get(n, k); }

Rational trace(const ExactMatrix& m) {
  Rational t = 0;
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

ExactMatrix single(long v) {
  ExactMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("P1 enumeration") {
  CHECK(P1Index(1).size() == 1);
  CHECK(P1Index(11).size() == 12);
  CHECK(P1Index(12).size() == 24);
  for (std::int64_t n = 1; n <= 60; ++n) {
    const P1Index p1(n);
    CHECK(static_cast<std::int64_t>(p1.size()) == gamma0_index(n));
    CHECK(static_cast<long>(p1.size()) == oracle::p1_size_brute_force(n));
    for (std::size_t i = 0; i < p1.size(); ++i) {
      const auto [u, v] = p1.rep(i);
      CHECK(p1.lookup(u, v) == i);
      for (std::int64_t l = 1; l < n; ++l)
        if (std::gcd(l, n) == 1) CHECK(p1.lookup(l * u, l * v) == i);
    }
  }
  CHECK_FALSE(P1Index(12).lookup(2, 4).has_value());
}

TEST_CASE("lift to SL2(Z)") {
  for (std::int64_t n : {1, 7, 12, 30}) {
    const P1Index p1(n);
    for (std::size_t i = 0; i < p1.size(); ++i) {
      const auto [c, d] = p1.rep(i);
      const Mat2 g = lift_to_sl2z(c, d, n);
      CHECK(g.det() == 1);
      CHECK(mod(g.c - c, n) == 0);
      CHECK(mod(g.d - d, n) == 0);
    }
  }
}

TEST_CASE("Manin trick telescopes from 0 to the cusp") {
  for (std::int64_t den = 0; den <= 40; ++den)
    for (std::int64_t num = -40; num <= 40; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const auto path = manin_trick(num, den);
      // g {0, oo} = {b/d, a/c}
      std::int64_t pu = 0, pv = 1;
      for (const auto& g : path) {
        CHECK(g.det() == 1);
        CHECK(g.b * pv == pu * g.d);
        pu = g.a;
        pv = g.c;
      }
      CHECK(pu * den == num * pv);
    }
}

TEST_CASE("weight polynomial substitution") {
  // (X + Y)^2 from X^2 under X -> X + Y
  const auto p = substitute(monomial_polynomial(2, 2), 1, 1, 0, 1);
  CHECK(p == WeightPolynomial{1, 2, 1});
  __int128 out[5];
  substitute_monomial_i128(4, 1, 2, -1, 3, 5, out);
  const auto big = substitute(monomial_polynomial(4, 1), 2, -1, 3, 5);
  for (int i = 0; i <= 4; ++i) CHECK(from_int128(out[i]) == big[static_cast<std::size_t>(i)]);
}

TEST_CASE("cusps") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    std::int64_t expected = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) expected += oracle::detail::phi(std::gcd(d, n / d));
    const auto reps = cusp_representatives(n);
    CHECK(static_cast<std::int64_t>(reps.size()) == expected);
    CHECK(cusp_count(n) == expected);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(cusps_equivalent(reps[i], reps[j], n));
    // every small fraction is equivalent to exactly one representative
    for (std::int64_t v = 0; v <= 12; ++v)
      for (std::int64_t u = -6; u <= 6; ++u) {
        if (std::gcd(u, v) != 1) continue;
        int hits = 0;
        for (const auto& r : reps) hits += cusps_equivalent(normalize_cusp(u, v), r, n);
        CHECK(hits == 1);
      }
  }
}

TEST_CASE("dimension formula examples") {
  CHECK(dim_cusp_formula(1, 12) == 1);
  CHECK(dim_new_formula(1, 12) == 1);
  CHECK(dim_cusp_formula(11, 2) == 1);
  CHECK(dim_new_formula(11, 2) == 1);
  CHECK(dim_cusp_formula(22, 2) == 2);
  CHECK(dim_new_formula(22, 2) == 0);
  CHECK(dim_cusp_formula(1, 4) == 0);
  CHECK(sturm_bound(1, 12) == 1);
  CHECK(sturm_bound(11, 2) == 2);
  CHECK(sturm_bound(27, 2) == 6);
}

TEST_CASE("build_space examples") {
  CHECK(space(1, 12).cuspidal().dim() == 1);
  CHECK(space(11, 2).cuspidal().dim() == 1);
  CHECK(space(1, 4).cuspidal().dim() == 0);
  const auto odd = SymbolSpace::build(11, 3);
  CHECK(odd.is_empty_marker());
  CHECK(odd.dimension() == 0);
  CHECK_THROWS(SymbolSpace::build(0, 2));
  CHECK_THROWS(SymbolSpace::build(5, 1));
}

TEST_CASE("cuspidal dimension matches the formula for N <= 40, k <= 12") {
  for (std::int64_t n = 1; n <= 40; ++n)
    for (int k = 2; k <= 12; k += 2) {
      const auto& s = space(n, k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(s.cuspidal().dim() == dim_cusp_formula(n, k));
      CHECK(s.dimension() - s.cuspidal().dim() == static_cast<Index>(s.cusp_classes().size()) - (k == 2 ? 1 : 0));
    }
}

TEST_CASE("new subspace dimension matches the formula") {
  for (std::int64_t n = 1; n <= 36; ++n)
    for (int k : {2, 4, 6}) {
      LevelWorkspace ws(n, k, shared_spaces());
      CAPTURE(n);
      CAPTURE(k);
      CHECK(ws.new_subspace().dim() == dim_new_formula(n, k));
    }
  LevelWorkspace d(1, 12, shared_spaces()), e(22, 2, shared_spaces()), f(27, 2, shared_spaces());
  CHECK(d.new_subspace().dim() == 1);
  CHECK(e.new_subspace().dim() == 0);
  CHECK(f.new_subspace().dim() == 1);
}

TEST_CASE("convention pins against q-expansion and point counts") {
  const auto tau = oracle::delta_coefficients(5);
  CHECK(hecke_matrix(space(1, 12), 2).matrix == single(tau[2].get_si()));
  CHECK(hecke_matrix(space(1, 12), 3).matrix == single(tau[3].get_si()));
  CHECK(hecke_matrix(space(1, 12), 5).matrix == single(tau[5].get_si()));
  CHECK(tau[2] == -24);
  CHECK(tau[3] == 252);

  for (long p : {2, 3, 5, 7, 13}) {
    const long ap = oracle::curve_ap(0, -1, 1, -10, -20, p);
    CHECK(hecke_matrix(space(11, 2), p).matrix == single(ap));
  }
  CHECK(oracle::curve_ap(0, -1, 1, -10, -20, 2) == -2);
  CHECK(oracle::curve_ap(0, -1, 1, -10, -20, 3) == -1);
  CHECK(hecke_matrix(space(11, 2), 11).name == "U_11");
}

TEST_CASE("Heilbronn and coset routes agree") {
  for (auto [n, k] : std::vector<std::pair<std::int64_t, int>>{{1, 12}, {11, 2}, {11, 4}, {12, 4}, {15, 2}, {18, 4}, {23, 2}, {9, 6}})
    for (std::int64_t p : {2, 3, 5, 4, 6}) {
      CAPTURE(n);
      CAPTURE(k);
      CAPTURE(p);
      CHECK(hecke_full(space(n, k), p) == hecke_full_cosets(space(n, k), p));
    }
}

TEST_CASE("Hecke traces match the trace formula") {
  for (auto [n, k] : std::vector<std::pair<std::int64_t, int>>{{1, 24}, {11, 4}, {13, 8}, {17, 6}, {19, 6}, {27, 6}, {30, 4}, {16, 6}})
    for (std::int64_t p : {2, 3, 5, 7}) {
      if (n % p == 0) continue;
      CAPTURE(n);
      CAPTURE(k);
      CAPTURE(p);
      CHECK(trace(hecke_matrix(space(n, k), p).matrix) == oracle::trace_formula(n, k, p));
    }
  for (auto [n, k] : std::vector<std::pair<std::int64_t, int>>{{15, 6}, {15, 8}, {21, 6}, {28, 4}}) {
    LevelWorkspace ws(n, k, shared_spaces());
    for (std::int64_t p : {2, 11, 13}) {
      if (n % p == 0) continue;
      CHECK(trace(ws.new_subspace().restrict_operator(ws.hecke_full(p))) == oracle::new_trace_formula(n, k, p));
    }
  }
}

TEST_CASE("Hecke operators commute") {
  for (auto [n, k] : std::vector<std::pair<std::int64_t, int>>{{1, 24}, {11, 6}, {12, 6}, {22, 4}, {25, 4}, {30, 2}}) {
    std::vector<ExactMatrix> ops;
    for (std::int64_t p : {2, 3, 5, 7}) ops.push_back(hecke_matrix(space(n, k), p).matrix);
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i + 1; j < ops.size(); ++j) CHECK(multiply(ops[i], ops[j]) == multiply(ops[j], ops[i]));
  }
}

TEST_CASE("Hecke recursion at p^2") {
  for (std::int64_t n : {1, 5, 11})
    for (int k : {4, 6, 8})
      for (std::int64_t p : {2, 3}) {
        const auto& s = space(n, k);
        const ExactMatrix tp = hecke_full(s, p);
        ExactMatrix rhs = multiply(tp, tp);
        Integer pk = 1;
        for (int e = 0; e < k - 1; ++e) pk *= p;
        for (Index i = 0; i < rhs.rows(); ++i) rhs(i, i) -= pk;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(p);
        CHECK(hecke_full(s, p * p) == rhs);
        CHECK(s.cuspidal().restrict_operator(hecke_full(s, p * p)) == s.cuspidal().restrict_operator(rhs));
      }
}

TEST_CASE("degeneracy maps") {
  const auto& high = space(22, 2);
  const auto& low = space(11, 2);
  Subspace joint = high.cuspidal();
  for (std::int64_t t : {1, 2}) {
    const auto d = degeneracy_lower(high, low, t);
    CHECK(d.matrix.rows() == low.dimension());
    CHECK(d.matrix.cols() == high.dimension());
    CHECK(multiply(d.matrix, hecke_full(high, 3)) == multiply(hecke_full(low, 3), d.matrix));
    joint = joint.kernel_of(d.matrix);
  }
  CHECK(joint.dim() == 0);

  for (auto [n, m, k] : std::vector<std::tuple<std::int64_t, std::int64_t, int>>{{18, 6, 4}, {20, 10, 4}, {27, 9, 4}})
    for (std::int64_t t = 1; t <= n / m; ++t) {
      if ((n / m) % t != 0) continue;
      const auto d = degeneracy_lower(space(n, k), space(m, k), t);
      CHECK(multiply(d.matrix, hecke_full(space(n, k), 5)) == multiply(hecke_full(space(m, k), 5), d.matrix));
    }
  CHECK_THROWS(degeneracy_lower(high, space(7, 2), 1));
  CHECK_THROWS(degeneracy_lower(high, low, 3));
}

TEST_CASE("Atkin-Lehner operators") {
  CHECK(exact_prime_power_divisors(360) == std::vector<std::int64_t>{8, 9, 5});
  CHECK_THROWS(atkin_lehner_full(space(12, 2), 2));

  {
    LevelWorkspace ws(11, 2, shared_spaces());
    const auto w = atkin_lehner(ws.space(), ws.new_subspace(), 11).matrix;
    REQUIRE(w.rows() == 1);
    CHECK(w == single(-1));
  }
  for (auto [n, k] : std::vector<std::pair<std::int64_t, int>>{{11, 4}, {15, 4}, {27, 4}, {20, 4}, {18, 6}, {13, 6}}) {
    LevelWorkspace ws(n, k, shared_spaces());
    const auto& nw = ws.new_subspace();
    for (auto q : exact_prime_power_divisors(n)) {
      const ExactMatrix w = atkin_lehner(ws.space(), nw, q).matrix;
      CAPTURE(n);
      CAPTURE(k);
      CAPTURE(q);
      CHECK(multiply(w, w) == identity_matrix(nw.dim()));
      for (std::int64_t p : good_primes(n, 2)) {
        const ExactMatrix t = nw.restrict_operator(ws.hecke_full(p));
        CHECK(multiply(w, t) == multiply(t, w));
      }
      if (is_prime(q)) {
        // on newforms with q || N: a_q = -q^(k/2-1) * (W_q eigenvalue)
        ExactMatrix u = nw.restrict_operator(ws.hecke_full(q));
        Integer s = 1;
        for (int e = 0; e < k / 2 - 1; ++e) s *= q;
        CHECK(u == w * Rational(-s));
      }
    }
  }
}
