#include "maeda/orbits/orbits.hpp"

#include "maeda/modsym/dimension.hpp"

#include <sstream>

namespace maeda {

namespace {

ExactMatrix combination(const NewSpaceData& data, const std::vector<std::pair<std::int64_t, long>>& gen) {
  ExactMatrix a = zero_matrix(data.dim_new, data.dim_new);
  for (const auto& [p, c] : gen) a += Rational(c) * data.hecke.at(p);
  return a;
}

ExactMatrix scalar_matrix(Index n, long c) {
  ExactMatrix m = zero_matrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

}  // namespace

std::map<std::int64_t, int> al_signs(const NewformOrbit& orbit, const NewSpaceData& data) {
  std::map<std::int64_t, int> out;
  const Index d = orbit.basis.dim();
  for (const auto& [q, w] : data.atkin_lehner) {
    const ExactMatrix r = orbit.basis.restrict_operator(w);
    if (r == scalar_matrix(d, 1)) {
      out[q] = 1;
    } else if (r == scalar_matrix(d, -1)) {
      out[q] = -1;
    } else {
      std::ostringstream msg;
      msg << "W_" << q << " is not scalar on an orbit of level " << data.level << " weight " << data.weight;
      throw DecompositionError(msg.str());
    }
  }
  return out;
}

Decomposition decompose(const NewSpaceData& data) {
  Decomposition dec;
  dec.level = data.level;
  dec.weight = data.weight;
  dec.total_dim = data.dim_new;
  if (data.dim_new == 0) return dec;
  std::vector<std::int64_t> primes;
  for (const auto& [p, m] : data.hecke) primes.push_back(p);
  if (primes.empty()) throw DecompositionError("decompose: no Hecke operators supplied");

  std::vector<std::vector<std::pair<std::int64_t, long>>> candidates{{{primes[0], 1}}};
  if (primes.size() >= 2)
    for (long c = 1; c <= 20; ++c) candidates.push_back({{primes[0], 1}, {primes[1], c}});
  if (primes.size() >= 3)
    for (long c = 1; c <= 20; ++c) candidates.push_back({{primes[0], 1}, {primes[1], 1}, {primes[2], c}});

  for (const auto& gen : candidates) {
    const ExactMatrix a = combination(data, gen);
    const Factorization fac = factor_int_poly(charpoly_rational(a));
    bool squarefree = true;
    for (const auto& f : fac.factors) squarefree = squarefree && f.multiplicity == 1;
    if (!squarefree) continue;

    dec.generator = gen;
    int total = 0;
    for (const auto& f : fac.factors) {
      NewformOrbit orbit;
      orbit.level = data.level;
      orbit.weight = data.weight;
      orbit.degree = f.factor.degree();
      orbit.generator_factor = f.factor;
      orbit.basis = Subspace::span(kernel_basis<Rational>(evaluate_at_matrix(f.factor.coefficients(), a)));
      if (orbit.basis.dim() != orbit.degree) throw DecompositionError("decompose: orbit dimension differs from factor degree");
      for (const auto& [p, t] : data.hecke) orbit.hecke_charpolys[p] = charpoly_rational(orbit.basis.restrict_operator(t));
      orbit.al_signs = al_signs(orbit, data);
      total += orbit.degree;
      dec.orbits.push_back(std::move(orbit));
    }
    if (total != data.dim_new) throw DecompositionError("decompose: orbit degrees do not sum to the new dimension");
    return dec;
  }
  std::ostringstream msg;
  msg << "no separating Hecke combination for level " << data.level << " weight " << data.weight
      << " (tried " << candidates.size() << " combinations of T_p, p in {";
  for (std::size_t i = 0; i < primes.size(); ++i) msg << (i ? "," : "") << primes[i];
  msg << "})";
  throw DecompositionError(msg.str());
}

namespace {

// Rows: a basis of the functionals on the full space that vanish on the
// Hecke-stable complement of the orbit. T_p kills the orbit iff psi T_p x = 0
// for any single x with psi x != 0.
ExactMatrix orbit_functionals(const NewformOrbit& orbit, const Decomposition& dec, LevelWorkspace& ws) {
  const Subspace orbit_full = Subspace::span(multiply(ws.new_subspace().basis(), orbit.basis.basis()));
  const Index n = ws.space().dimension();
  ExactMatrix a = zero_matrix(n, n);
  for (const auto& [p, c] : dec.generator) a += Rational(c) * ws.hecke_full(p);
  const ExactMatrix fa = evaluate_at_matrix(orbit.generator_factor.coefficients(), a);
  ExactMatrix psi = kernel_basis<Rational>(fa.transpose()).transpose();
  for (auto p : good_primes(ws.space().level(), 40)) {
    if (psi.rows() <= orbit.degree) break;
    const ExactMatrix& t = ws.hecke_full(p);
    const Factorization fac = factor_int_poly(charpoly_rational(orbit_full.restrict_operator(t)));
    if (fac.factors.size() != 1) throw DecompositionError("orbit: Hecke restriction is not a power of an irreducible");
    const ExactMatrix g = evaluate_at_matrix(fac.factors[0].factor.coefficients(), t);
    const ExactMatrix c = kernel_basis<Rational>(multiply(psi, g).transpose());
    psi = multiply(ExactMatrix(c.transpose()), psi);
  }
  if (psi.rows() != orbit.degree) throw DecompositionError("orbit: could not isolate the orbit in the full space");
  return psi;
}

}  // namespace

std::optional<std::int64_t> is_cm(const NewformOrbit& orbit, const Decomposition& dec, LevelWorkspace& ws) {
  const std::int64_t level = ws.space().level();
  const auto discs = negative_fundamental_discriminants_dividing(level);
  if (discs.empty()) return std::nullopt;
  const ExactMatrix psi = orbit_functionals(orbit, dec, ws);
  Index probe = -1;
  for (Index j = 0; j < psi.cols() && probe < 0; ++j)
    for (Index i = 0; i < psi.rows(); ++i)
      if (sgn(psi(i, j)) != 0) {
        probe = j;
        break;
      }
  const std::size_t x0 = ws.space().basis_generator(probe);
  std::map<std::int64_t, bool> vanishes;
  auto kills = [&](std::int64_t p) {
    auto it = vanishes.find(p);
    if (it != vanishes.end()) return it->second;
    const ExactVector img = heilbronn_image(ws.space(), x0, heilbronn_cremona(p));
    const bool z = is_zero(ExactMatrix(multiply(psi, ExactMatrix(img))));
    vanishes[p] = z;
    return z;
  };
  for (auto d : discs) {
    const std::int64_t bound = sturm_bound(level * d * d, ws.space().weight());
    bool cm = true;
    for (auto p : primes_up_to(bound)) {
      if (level % p == 0 || kronecker(d, p) != -1) continue;
      if (!kills(p)) {
        cm = false;
        break;
      }
    }
    if (cm) return d;
  }
  return std::nullopt;
}

NcmResult ncm(LevelWorkspace& ws) {
  NcmResult r;
  r.decomposition = decompose(ws.new_space_data());
  for (auto& orbit : r.decomposition.orbits) {
    orbit.cm_discriminant = is_cm(orbit, r.decomposition, ws);
    if (!orbit.cm_discriminant) ++r.ncm;
  }
  return r;
}

NcmResult ncm(std::int64_t level, int weight, SpaceCache& cache) {
  if (weight % 2 != 0) {
    NcmResult r;
    r.decomposition.level = level;
    r.decomposition.weight = weight;
    return r;
  }
  LevelWorkspace ws(level, weight, cache);
  return ncm(ws);
}

}  // namespace maeda
