#include "maeda/modsym/space.hpp"

#include "maeda/arith/integers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace maeda {

Integer from_int128(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  Integer out = (hi << 64) + lo;
  return neg ? Integer(-out) : out;
}

void GeneratorAccumulator::flush(std::size_t g) {
  if (small_[g] != 0) big_[g] += from_int128(small_[g]);
  small_[g] = 0;
}

void GeneratorAccumulator::clear() {
  for (auto g : used_) {
    small_[g] = 0;
    big_[g] = 0;
  }
  used_.clear();
}

ExactVector GeneratorAccumulator::to_basis(const SymbolSpace& space) {
  std::sort(used_.begin(), used_.end());
  used_.erase(std::unique(used_.begin(), used_.end()), used_.end());
  ExactVector out = zero_vector(space.dimension());
  Rational t;
  for (auto g : used_) {
    flush(g);
    if (sgn(big_[g]) == 0) continue;
    const Rational c(big_[g]);
    for (const auto& [j, q] : space.generator_image(g)) {
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), q.get_mpq_t());
      out(j) += t;
    }
  }
  clear();
  return out;
}

namespace {

// Union-find over generators for relations x = eps * y with eps = +-1.
class SignedUnionFind {
 public:
  explicit SignedUnionFind(std::size_t n) : parent_(n), coef_(n, 1), zero_(n, false) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  // x = coef * root
  std::pair<std::size_t, int> find(std::size_t x) {
    int c = 1;
    std::size_t r = x;
    while (parent_[r] != r) {
      c *= coef_[r];
      r = parent_[r];
    }
    // path compression
    std::size_t y = x;
    int cy = c;
    while (parent_[y] != y) {
      const std::size_t next = parent_[y];
      const int cn = cy * coef_[y];
      parent_[y] = r;
      coef_[y] = cy;
      y = next;
      cy = cn;
    }
    return {r, c};
  }

  void unite(std::size_t x, std::size_t y, int eps) {
    auto [rx, cx] = find(x);
    auto [ry, cy] = find(y);
    if (rx == ry) {
      if (cx != eps * cy) zero_[rx] = true;
      return;
    }
    // cx * rx = eps * cy * ry
    const int rel = cx * eps * cy;
    if (rx < ry) {
      parent_[ry] = rx;
      coef_[ry] = rel;
      zero_[rx] = zero_[rx] || zero_[ry];
    } else {
      parent_[rx] = ry;
      coef_[rx] = rel;
      zero_[ry] = zero_[rx] || zero_[ry];
    }
  }

  bool is_zero_root(std::size_t r) const { return zero_[r]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> coef_;
  std::vector<bool> zero_;
};

using SparseRow = std::map<Index, Rational>;

void add_scaled(SparseRow& row, const SparseRow& other, const Rational& f) {
  Rational t;
  for (const auto& [c, v] : other) {
    mpq_mul(t.get_mpq_t(), f.get_mpq_t(), v.get_mpq_t());
    auto [it, inserted] = row.try_emplace(c, t);
    if (!inserted) {
      it->second += t;
      if (sgn(it->second) == 0) row.erase(it);
    }
  }
}

}  // namespace

SymbolSpace SymbolSpace::build(std::int64_t level, int weight) {
  if (level < 1) throw std::invalid_argument("build_space: level must be >= 1");
  if (weight < 2) throw std::invalid_argument("build_space: weight must be >= 2");
  SymbolSpace s;
  s.level_ = level;
  s.weight_ = weight;
  s.p1_ = std::make_shared<const P1Index>(level);
  if (weight % 2 != 0) {
    s.boundary_ = zero_matrix(0, 0);
    s.cuspidal_ = Subspace::zero(0);
    return s;
  }
  const int w = weight - 2;
  const P1Index& p1 = *s.p1_;
  const std::size_t mu = p1.size();
  const std::size_t ngens = static_cast<std::size_t>(w + 1) * mu;
  auto index_of = [&](int i, std::int64_t u, std::int64_t v) {
    return static_cast<std::size_t>(i) * mu + *p1.lookup(u, v);
  };

  // Two-term relations: x = -(-1)^i [X^(w-i) Y^i, (v,-u)] and, for the +1
  // quotient, x = (-1)^i [X^i Y^(w-i), (-u,v)].
  SignedUnionFind uf(ngens);
  for (int i = 0; i <= w; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      const auto [u, v] = p1.rep(j);
      const int par = (i % 2 == 0) ? 1 : -1;
      const std::size_t x = static_cast<std::size_t>(i) * mu + j;
      uf.unite(x, index_of(w - i, v, -u), -par);
      uf.unite(x, index_of(i, -u, v), par);
    }

  std::vector<std::int64_t> root_column(ngens, -1);
  std::vector<std::size_t> roots;
  for (std::size_t g = 0; g < ngens; ++g) {
    auto [r, c] = uf.find(g);
    if (r == g && !uf.is_zero_root(r)) {
      root_column[g] = static_cast<std::int64_t>(roots.size());
      roots.push_back(g);
    }
  }
  auto column_of = [&](std::size_t g) -> std::pair<Index, int> {
    auto [r, c] = uf.find(g);
    if (uf.is_zero_root(r)) return {-1, 0};
    return {root_column[r], c};
  };

  // Three-term relations x + x tau + x tau^2 = 0 with tau = [[0,-1],[1,-1]],
  // eliminated incrementally into semi-echelon form.
  std::map<Index, SparseRow> pivots;
  const std::int64_t taus[2][4] = {{0, -1, 1, -1}, {-1, 1, -1, 0}};
  for (int i = 0; i <= w; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      const auto [u, v] = p1.rep(j);
      SparseRow row;
      auto add_term = [&](std::size_t g, const Integer& coef) {
        auto [col, c] = column_of(g);
        if (col < 0 || sgn(coef) == 0) return;
        Rational q(coef * c);
        auto [it, inserted] = row.try_emplace(col, q);
        if (!inserted) {
          it->second += q;
          if (sgn(it->second) == 0) row.erase(it);
        }
      };
      add_term(static_cast<std::size_t>(i) * mu + j, Integer(1));
      const WeightPolynomial mono = monomial_polynomial(w, i);
      for (const auto& t : taus) {
        const WeightPolynomial img = substitute(mono, t[0], t[1], t[2], t[3]);
        const std::int64_t uu = u * t[0] + v * t[2], vv = u * t[1] + v * t[3];
        const std::size_t pt = *p1.lookup(uu, vv);
        for (int m = 0; m <= w; ++m) add_term(static_cast<std::size_t>(m) * mu + pt, img[static_cast<std::size_t>(m)]);
      }
      for (auto it = row.begin(); it != row.end();) {
        auto p = pivots.find(it->first);
        if (p == pivots.end()) {
          ++it;
          continue;
        }
        const Rational f = -it->second;
        const Index col = it->first;
        add_scaled(row, p->second, f);
        it = row.upper_bound(col);
      }
      if (row.empty()) continue;
      const Rational inv = 1 / row.begin()->second;
      for (auto& [c, val] : row) val *= inv;
      const Index lead = row.begin()->first;
      pivots.emplace(lead, std::move(row));
    }

  // Express every pivot column through the free columns (descending order so
  // later pivots are already resolved).
  const Index ncols = static_cast<Index>(roots.size());
  std::vector<Index> free_position(static_cast<std::size_t>(ncols), -1);
  for (Index c = 0; c < ncols; ++c)
    if (!pivots.count(c)) {
      free_position[static_cast<std::size_t>(c)] = static_cast<Index>(s.basis_generators_.size());
      s.basis_generators_.push_back(roots[static_cast<std::size_t>(c)]);
    }
  std::vector<SparseRow> column_value(static_cast<std::size_t>(ncols));
  for (Index c = 0; c < ncols; ++c)
    if (free_position[static_cast<std::size_t>(c)] >= 0) column_value[static_cast<std::size_t>(c)][free_position[static_cast<std::size_t>(c)]] = 1;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseRow value;
    for (const auto& [c, v] : it->second) {
      if (c == it->first) continue;
      add_scaled(value, column_value[static_cast<std::size_t>(c)], -v);
    }
    column_value[static_cast<std::size_t>(it->first)] = std::move(value);
  }

  s.images_.resize(ngens);
  for (std::size_t g = 0; g < ngens; ++g) {
    auto [col, c] = column_of(g);
    if (col < 0) continue;
    for (const auto& [j, v] : column_value[static_cast<std::size_t>(col)]) s.images_[g].emplace_back(j, c > 0 ? v : Rational(-v));
  }

  // Boundary map. [X^i Y^(w-i), (c:d)] = g (X^i Y^(w-i) {0, oo}) has boundary
  // [a/c] when i = w and -[b/d] when i = 0.
  const auto cusps = cusp_representatives(level);
  std::vector<int> cusp_class(cusps.size(), -1);
  for (std::size_t a = 0; a < cusps.size(); ++a) {
    if (cusp_class[a] >= 0) continue;
    cusp_class[a] = static_cast<int>(s.cusp_classes_.size());
    const Cusp neg = normalize_cusp(-cusps[a].u, cusps[a].v);
    for (std::size_t b = a + 1; b < cusps.size(); ++b)
      if (cusp_class[b] < 0 && cusps_equivalent(neg, cusps[b], level)) cusp_class[b] = cusp_class[a];
    s.cusp_classes_.push_back(cusps[a]);
  }
  auto class_of = [&](std::int64_t num, std::int64_t den) -> Index {
    const Cusp c = normalize_cusp(num, den);
    const Cusp neg = normalize_cusp(-c.u, c.v);
    for (std::size_t a = 0; a < cusps.size(); ++a)
      if (cusps_equivalent(c, cusps[a], level) || cusps_equivalent(neg, cusps[a], level)) return cusp_class[a];
    throw std::logic_error("boundary: cusp not found");
  };
  const Index nb = static_cast<Index>(s.cusp_classes_.size());
  const Index dim = s.dimension();
  s.boundary_ = zero_matrix(nb, dim);
  for (Index j = 0; j < dim; ++j) {
    const auto [i, pt] = s.generator_parts(s.basis_generators_[static_cast<std::size_t>(j)]);
    const auto [u, v] = p1.rep(pt);
    const Mat2 g = lift_to_sl2z(u, v, level);
    if (i == w) s.boundary_(class_of(g.a, g.c), j) += 1;
    if (i == 0) s.boundary_(class_of(g.b, g.d), j) -= 1;
  }
  s.cuspidal_ = Subspace::span(kernel_basis<Rational>(s.boundary_));
  return s;
}

}  // namespace maeda
