#include "maeda/harness/scan.hpp"

#include "maeda/localtypes/local_types.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace maeda {

CacheEntry cell_cache_entry(const NewSpaceData& data, const Decomposition& dec) {
  CacheEntry e;
  e.key = {data.level, data.weight, 1};
  ExactMatrix dims(1, 3);
  dims << Rational(data.dim_full), Rational(data.dim_cusp), Rational(data.dim_new);
  e.matrices.emplace_back("dims", dims);
  for (const auto& [p, m] : data.hecke) e.matrices.emplace_back("T_" + std::to_string(p), m);
  for (const auto& [q, m] : data.atkin_lehner) e.matrices.emplace_back("W_" + std::to_string(q), m);
  ExactMatrix cm = zero_matrix(1, static_cast<Index>(dec.orbits.size()));
  for (std::size_t i = 0; i < dec.orbits.size(); ++i)
    if (dec.orbits[i].cm_discriminant) cm(0, static_cast<Index>(i)) = Rational(static_cast<long>(*dec.orbits[i].cm_discriminant));
  e.matrices.emplace_back("cm", cm);
  return e;
}

std::optional<std::pair<NewSpaceData, std::vector<std::int64_t>>> cell_from_cache(const CacheEntry& entry,
                                                                                  std::string& error) {
  NewSpaceData d;
  d.level = entry.key.level;
  d.weight = entry.key.weight;
  std::vector<std::int64_t> cm;
  bool have_dims = false, have_cm = false;
  for (const auto& [name, m] : entry.matrices) {
    if (name == "dims") {
      if (m.rows() != 1 || m.cols() != 3 || !is_integral(m)) {
        error = "bad dims block";
        return std::nullopt;
      }
      d.dim_full = m(0, 0).get_num().get_si();
      d.dim_cusp = m(0, 1).get_num().get_si();
      d.dim_new = m(0, 2).get_num().get_si();
      have_dims = true;
    } else if (name == "cm") {
      if (m.rows() != 1 || !is_integral(m)) {
        error = "bad cm block";
        return std::nullopt;
      }
      for (Index j = 0; j < m.cols(); ++j) cm.push_back(m(0, j).get_num().get_si());
      have_cm = true;
    } else if (name.size() > 2 && (name[0] == 'T' || name[0] == 'W') && name[1] == '_') {
      std::int64_t idx = 0;
      const char* first = name.data() + 2;
      const auto [ptr, ec] = std::from_chars(first, name.data() + name.size(), idx);
      if (ec != std::errc() || ptr != name.data() + name.size() || idx < 1) {
        error = "bad block name " + name;
        return std::nullopt;
      }
      (name[0] == 'T' ? d.hecke : d.atkin_lehner)[idx] = m;
    } else {
      error = "unknown block " + name;
      return std::nullopt;
    }
  }
  if (!have_dims || !have_cm) {
    error = "missing dims or cm block";
    return std::nullopt;
  }
  for (const auto* group : {&d.hecke, &d.atkin_lehner})
    for (const auto& [p, m] : *group)
      if (m.rows() != d.dim_new || m.cols() != d.dim_new) {
        error = "operator shape does not match dim_new";
        return std::nullopt;
      }
  return std::make_pair(std::move(d), std::move(cm));
}

namespace {

ScanRow row_from(const Decomposition& dec, std::int64_t lo_value) {
  ScanRow r;
  r.level = dec.level;
  r.weight = dec.weight;
  r.dim_new = dec.total_dim;
  r.lo = lo_value;
  for (const auto& o : dec.orbits) {
    r.orbit_degrees.push_back(o.degree);
    r.cm_discs.push_back(o.cm_discriminant);
    r.al_signs.push_back(o.al_signs);
    if (o.cm_discriminant) ++r.n_cm;
  }
  r.n_orbits = static_cast<std::int64_t>(dec.orbits.size());
  r.ncm = r.n_orbits - r.n_cm;
  r.match = r.ncm == r.lo;
  return r;
}

std::optional<Decomposition> decomposition_from_cache(const CacheEntry& entry, std::string& error) {
  auto cell = cell_from_cache(entry, error);
  if (!cell) return std::nullopt;
  Decomposition dec = decompose(cell->first);
  if (dec.orbits.size() != cell->second.size()) {
    error = "cm block does not match the orbit count";
    return std::nullopt;
  }
  for (std::size_t i = 0; i < dec.orbits.size(); ++i)
    if (cell->second[i] != 0) dec.orbits[i].cm_discriminant = cell->second[i];
  return dec;
}

}  // namespace

ScanRow compute_cell(std::int64_t level, int weight, SpaceCache& spaces, const ScanOptions& options) {
  ScanRow row;
  row.level = level;
  row.weight = weight;
  try {
    row.lo = lo(level).value;
    const CacheKey key{level, weight, 1};
    if (options.cache_dir) {
      if (auto entry = cache_read(*options.cache_dir, key, options.warn)) {
        std::string error;
        if (auto dec = decomposition_from_cache(*entry, error)) return row_from(*dec, row.lo);
        if (options.warn) options.warn("cache: ignoring entry for N=" + std::to_string(level) + " k=" + std::to_string(weight) + ": " + error);
      }
    }
    LevelWorkspace ws(level, weight, spaces);
    const NewSpaceData data = ws.new_space_data();
    Decomposition dec = decompose(data);
    for (auto& orbit : dec.orbits) orbit.cm_discriminant = is_cm(orbit, dec, ws);
    if (options.cache_dir) cache_write(*options.cache_dir, cell_cache_entry(data, dec), options.warn);
    return row_from(dec, row.lo);
  } catch (const std::exception& e) {
    row.error = e.what();
    row.match = false;
    return row;
  }
}

std::vector<ScanRow> scan(const std::vector<std::int64_t>& levels, const std::vector<int>& weights,
                          const ScanOptions& options) {
  std::vector<std::int64_t> ls = levels;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::vector<int> ks;
  for (int k : weights)
    if (k % 2 == 0) ks.push_back(k);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  std::vector<std::pair<std::int64_t, int>> cells;
  for (auto n : ls)
    for (int k : ks) cells.emplace_back(n, k);
  std::vector<ScanRow> rows(cells.size());
  SpaceCache spaces;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++)
      rows[i] = compute_cell(cells[i].first, cells[i].second, spaces, options);
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string tsv_header() {
  return "level\tweight\tdim_new\tn_orbits\tn_cm\tncm\tlo\tmatch\torbit_degrees\tcm_discs\tal_signs";
}

namespace {

template <typename T, typename F>
std::string join(const std::vector<T>& items, const char* sep, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += fmt(items[i]);
  }
  return out;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

std::string format_row(const ScanRow& r) {
  std::ostringstream out;
  out << r.level << "\t" << r.weight << "\t";
  if (r.error) {
    out << "NA\tNA\tNA\tNA\t" << r.lo << "\t0\tERROR:" << sanitize(*r.error) << "\t\t";
    return out.str();
  }
  out << r.dim_new << "\t" << r.n_orbits << "\t" << r.n_cm << "\t" << r.ncm << "\t" << r.lo << "\t" << (r.match ? 1 : 0)
      << "\t";
  out << join(r.orbit_degrees, ";", [](int d) { return std::to_string(d); }) << "\t";
  out << join(r.cm_discs, ";", [](const std::optional<std::int64_t>& d) { return d ? std::to_string(*d) : std::string("-"); })
      << "\t";
  out << join(r.al_signs, ";", [](const std::map<std::int64_t, int>& signs) {
    if (signs.empty()) return std::string("-");
    std::string s;
    for (const auto& [q, e] : signs) {
      if (!s.empty()) s += ",";
      s += std::to_string(q) + (e > 0 ? ":+1" : ":-1");
    }
    return s;
  });
  return out.str();
}

std::string format_tsv(const std::vector<ScanRow>& rows) {
  std::string out = tsv_header() + "\n";
  for (const auto& r : rows) out += format_row(r) + "\n";
  return out;
}

std::optional<int> stability(std::vector<ScanRow> rows) {
  if (rows.size() < 2) throw std::invalid_argument("stability: need at least two weights");
  for (const auto& r : rows)
    if (r.level != rows.front().level) throw std::invalid_argument("stability: rows from different levels");
  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) { return a.weight < b.weight; });
  const auto& last = rows.back();
  if (last.error) return std::nullopt;
  std::size_t start = rows.size() - 1;
  while (start > 0 && !rows[start - 1].error && rows[start - 1].ncm == last.ncm) --start;
  if (start == rows.size() - 1) return std::nullopt;
  return rows[start].weight;
}

VerifyResult verify(const std::vector<ScanRow>& rows, int min_weight) {
  VerifyResult v;
  for (const auto& r : rows) {
    if (r.weight < min_weight || r.weight % 2 != 0) continue;
    ++v.checked;
    if (r.error || r.ncm != r.lo) {
      v.pass = false;
      v.failures.push_back(r);
    }
  }
  if (v.checked == 0) throw std::invalid_argument("verify: no computed weight is >= the minimum weight");
  return v;
}

}  // namespace maeda
