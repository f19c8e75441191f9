// maeda: local-type counts versus non-CM newform orbit counts.
//
//   maeda lo <N>
//   maeda orbits <N> <k>
//   maeda scan --levels A..B --weights C..D [--out FILE] [--cache DIR] [--jobs J]
//   maeda verify --levels A..B --weights C..D --min-weight W
//
// Exit status: 0 success / verify pass, 1 verify fail or runtime error, 2 usage error.

#include "maeda/harness/scan.hpp"
#include "maeda/localtypes/local_types.hpp"
#include "maeda/modsym/dimension.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const char* what) {
  auto parse = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError(std::string("bad ") + what + " range: " + text);
    return v;
  };
  const auto dots = text.find("..");
  std::int64_t a, b;
  if (dots == std::string::npos) {
    a = b = parse(text);
  } else {
    a = parse(std::string_view(text).substr(0, dots));
    b = parse(std::string_view(text).substr(dots + 2));
  }
  if (a > b) throw UsageError(std::string("empty ") + what + " range: " + text);
  return {a, b};
}

std::vector<std::int64_t> level_list(const std::string& text) {
  const auto [a, b] = parse_range(text, "level");
  if (a < 1) throw UsageError("levels must be >= 1");
  std::vector<std::int64_t> out;
  for (auto n = a; n <= b; ++n) out.push_back(n);
  return out;
}

std::vector<int> weight_list(const std::string& text) {
  const auto [a, b] = parse_range(text, "weight");
  if (a < 2 || b > 1000) throw UsageError("weights must lie in 2..1000");
  std::vector<int> out;
  for (auto k = a; k <= b; ++k) out.push_back(static_cast<int>(k));
  return out;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("MAEDA_CACHE_DIR"); env && *env) return env;
  return ".maeda-cache";
}

maeda::WarningSink stderr_sink() {
  static std::mutex mu;
  return [](const std::string& msg) {
    std::lock_guard<std::mutex> lock(mu);
    std::cerr << "warning: " << msg << "\n";
  };
}

int default_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

int run_lo(std::int64_t n) {
  if (n < 1) throw UsageError("N must be >= 1");
  const auto r = maeda::lo(n);
  std::cout << "LO(" << n << ") = " << r.value << "\n";
  for (const auto& f : r.breakdown) std::cout << "  LO(" << f.prime << "^" << f.exponent << ") = " << f.value << "\n";
  return 0;
}

int run_orbits(std::int64_t n, int k) {
  if (n < 1) throw UsageError("N must be >= 1");
  if (k < 2) throw UsageError("k must be >= 2");
  if (k % 2 != 0) {
    std::cout << "level " << n << " weight " << k << ": odd weight, no forms with trivial character\n";
    return 0;
  }
  maeda::SpaceCache spaces;
  maeda::LevelWorkspace ws(n, k, spaces);
  const auto r = maeda::ncm(ws);
  const auto& dec = r.decomposition;
  std::cout << "level " << n << " weight " << k << "\n";
  std::cout << "dim cusp " << ws.space().cuspidal().dim() << " (formula " << maeda::dim_cusp_formula(n, k) << ")\n";
  std::cout << "dim new " << dec.total_dim << " (formula " << maeda::dim_new_formula(n, k) << ")\n";
  std::cout << "orbits " << dec.orbits.size() << ", non-CM " << r.ncm << ", LO " << maeda::lo(n).value << "\n";
  if (!dec.generator.empty()) {
    std::cout << "generator";
    for (const auto& [p, c] : dec.generator) std::cout << " " << (c == 1 ? "" : std::to_string(c) + "*") << "T_" << p;
    std::cout << "\n";
  }
  for (std::size_t i = 0; i < dec.orbits.size(); ++i) {
    const auto& o = dec.orbits[i];
    std::cout << "\norbit " << i + 1 << ": degree " << o.degree;
    std::cout << ", CM " << (o.cm_discriminant ? std::to_string(*o.cm_discriminant) : std::string("no"));
    std::cout << ", AL";
    if (o.al_signs.empty()) std::cout << " -";
    for (const auto& [q, s] : o.al_signs) std::cout << " W_" << q << "=" << (s > 0 ? "+1" : "-1");
    std::cout << "\n";
    for (const auto& [p, f] : o.hecke_charpolys) std::cout << "  charpoly T_" << p << ": " << f.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-type counts LO(N) versus non-CM newform orbit counts NCM(N, k)"};
  app.require_subcommand(1);

  std::int64_t lo_n = 0;
  auto* lo_cmd = app.add_subcommand("lo", "closed-formula local-type count");
  lo_cmd->add_option("N", lo_n, "level")->required();

  std::int64_t orb_n = 0;
  int orb_k = 0;
  auto* orb_cmd = app.add_subcommand("orbits", "newform Galois orbits of one space");
  orb_cmd->add_option("N", orb_n, "level")->required();
  orb_cmd->add_option("k", orb_k, "weight")->required();

  std::string levels, weights, out_file, cache_dir;
  int jobs = default_jobs(), min_weight = 6;
  bool no_cache = false;
  auto* scan_cmd = app.add_subcommand("scan", "TSV report over a grid of levels and weights");
  scan_cmd->add_option("--levels", levels, "A..B")->required();
  scan_cmd->add_option("--weights", weights, "C..D (odd weights are skipped)")->required();
  scan_cmd->add_option("--out", out_file, "write the report here instead of stdout");
  scan_cmd->add_option("--cache", cache_dir, "cache directory (default $MAEDA_CACHE_DIR or .maeda-cache)");
  scan_cmd->add_flag("--no-cache", no_cache, "neither read nor write the cache");
  scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "check NCM = LO for all weights >= the minimum");
  verify_cmd->add_option("--levels", levels, "A..B")->required();
  verify_cmd->add_option("--weights", weights, "C..D")->required();
  verify_cmd->add_option("--min-weight", min_weight, "smallest weight that is scored");
  verify_cmd->add_option("--cache", cache_dir, "cache directory (default $MAEDA_CACHE_DIR or .maeda-cache)");
  verify_cmd->add_flag("--no-cache", no_cache, "neither read nor write the cache");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (lo_cmd->parsed()) return run_lo(lo_n);
    if (orb_cmd->parsed()) return run_orbits(orb_n, orb_k);

    maeda::ScanOptions options;
    options.jobs = jobs;
    options.warn = stderr_sink();
    if (!no_cache) options.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
    const auto ls = level_list(levels);
    const auto ks = weight_list(weights);

    if (scan_cmd->parsed()) {
      const auto rows = maeda::scan(ls, ks, options);
      const std::string report = maeda::format_tsv(rows);
      if (out_file.empty()) {
        std::cout << report;
      } else {
        std::ofstream out(out_file, std::ios::binary | std::ios::trunc);
        out << report;
        if (!out) {
          std::cerr << "error: cannot write " << out_file << "\n";
          return 1;
        }
      }
      return 0;
    }

    // verify
    bool scored = false;
    for (int k : ks) scored = scored || (k >= min_weight && k % 2 == 0);
    if (!scored) throw UsageError("no even weight in " + weights + " is >= --min-weight " + std::to_string(min_weight));
    const auto rows = maeda::scan(ls, ks, options);
    const auto result = maeda::verify(rows, min_weight);
    std::cout << "level\tlo\tncm by weight\tstable from\n";
    for (auto n : ls) {
      std::vector<maeda::ScanRow> level_rows;
      for (const auto& r : rows)
        if (r.level == n) level_rows.push_back(r);
      std::cout << n << "\t" << maeda::lo(n).value << "\t";
      for (std::size_t i = 0; i < level_rows.size(); ++i) {
        const auto& r = level_rows[i];
        std::cout << (i ? " " : "") << "k" << r.weight << "=" << (r.error ? std::string("ERR") : std::to_string(r.ncm));
      }
      std::optional<int> k0;
      if (level_rows.size() >= 2) k0 = maeda::stability(level_rows);
      std::cout << "\t" << (k0 ? std::to_string(*k0) : std::string("-")) << "\n";
    }
    for (const auto& r : result.failures) {
      std::cout << "mismatch: N=" << r.level << " k=" << r.weight << " ";
      if (r.error)
        std::cout << "error: " << *r.error << "\n";
      else
        std::cout << "ncm=" << r.ncm << " lo=" << r.lo << "\n";
    }
    std::cout << (result.pass ? "PASS" : "FAIL") << ": " << result.checked - result.failures.size() << "/" << result.checked
              << " cells with weight >= " << min_weight << " have NCM = LO\n";
    return result.pass ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
