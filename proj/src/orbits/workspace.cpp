#include "maeda/orbits/workspace.hpp"

namespace maeda {

std::shared_ptr<const SymbolSpace> SpaceCache::get(std::int64_t level, int weight) {
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto& s = slots_[{level, weight}];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->space = std::make_shared<const SymbolSpace>(SymbolSpace::build(level, weight)); });
  return slot->space;
}

std::vector<std::int64_t> good_primes(std::int64_t level, int count) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; static_cast<int>(out.size()) < count; p = next_prime(p))
    if (level % p != 0) out.push_back(p);
  return out;
}

LevelWorkspace::LevelWorkspace(std::int64_t level, int weight, SpaceCache& cache)
    : cache_(cache), space_(cache.get(level, weight)) {}

const Subspace& LevelWorkspace::new_subspace() {
  if (!new_) {
    if (space_->is_empty_marker()) {
      new_ = Subspace::zero(0);
    } else {
      new_ = maeda::new_subspace(*space_, [this](std::int64_t m) -> const SymbolSpace& {
        return *cache_.get(m, space_->weight());
      });
    }
  }
  return *new_;
}

const ExactMatrix& LevelWorkspace::hecke_full(std::int64_t p) {
  auto it = hecke_.find(p);
  if (it == hecke_.end()) it = hecke_.emplace(p, maeda::hecke_full(*space_, p)).first;
  return it->second;
}

NewSpaceData LevelWorkspace::new_space_data(int hecke_primes) {
  NewSpaceData d;
  d.level = space_->level();
  d.weight = space_->weight();
  if (space_->is_empty_marker()) return d;
  d.dim_full = space_->dimension();
  d.dim_cusp = space_->cuspidal().dim();
  const Subspace& nw = new_subspace();
  d.dim_new = nw.dim();
  if (d.dim_new == 0) return d;
  for (auto p : good_primes(d.level, hecke_primes)) d.hecke[p] = nw.restrict_operator(hecke_full(p));
  for (auto q : exact_prime_power_divisors(d.level)) d.atkin_lehner[q] = atkin_lehner(*space_, nw, q).matrix;
  return d;
}

}  // namespace maeda
