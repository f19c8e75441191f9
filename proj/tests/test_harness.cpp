#include "maeda/harness/scan.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace maeda;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("maeda-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct Warnings {
  std::vector<std::string> seen;
  WarningSink sink() {
    return [this](const std::string& m) { seen.push_back(m); };
  }
};

ScanRow row(std::int64_t level, int weight, std::int64_t ncm_value, std::int64_t lo_value = 1) {
  ScanRow r;
  r.level = level;
  r.weight = weight;
  r.ncm = ncm_value;
  r.n_orbits = ncm_value;
  r.lo = lo_value;
  r.match = ncm_value == lo_value;
  return r;
}

CacheEntry sample_entry() {
  CacheEntry e;
  e.key = {11, 4, 1};
  ExactMatrix a(2, 2);
  a << Rational(1, 3), Rational(-7, 2), Rational(0), Rational(Integer("123456789012345678"));
  a(1, 1) *= a(1, 1);
  e.matrices.emplace_back("T_2", a);
  e.matrices.emplace_back("empty", zero_matrix(0, 0));
  return e;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("cache round trip") {
  TempDir dir;
  Warnings w;
  const auto e = sample_entry();
  cache_write(dir.path, e, w.sink());
  const auto back = cache_read(dir.path, e.key, w.sink());
  REQUIRE(back.has_value());
  CHECK(back->key == e.key);
  REQUIRE(back->matrices.size() == 2);
  CHECK(back->matrices[0].first == "T_2");
  CHECK(back->matrices[0].second == e.matrices[0].second);
  CHECK(back->find("empty")->rows() == 0);
  CHECK(w.seen.empty());
  CHECK(cache_file(dir.path, e.key).filename() == "N11_k4_plus.mcache");
  // no temporaries left behind
  CHECK(std::distance(fs::directory_iterator(dir.path), fs::directory_iterator()) == 1);
  const auto text = slurp(cache_file(dir.path, e.key));
  CHECK(text.rfind("MAEDACACHE 1\n11 4 +1\nMATRIX T_2 2 2\n1/3 -7/2\n", 0) == 0);
}

TEST_CASE("cache read failures") {
  TempDir dir;
  Warnings w;
  const auto e = sample_entry();
  CHECK_FALSE(cache_read(dir.path, e.key, w.sink()).has_value());
  CHECK(w.seen.empty());

  const auto path = cache_file(dir.path, e.key);
  const std::string good = serialize_cache_entry(e);
  auto write = [&](const std::string& text) {
    std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
  };
  const std::vector<std::string> bad = {
      good.substr(0, good.size() / 2),                                   // truncated
      good.substr(0, good.size() - 4),                                   // END missing
      "MAEDACACHE 2" + good.substr(good.find('\n')),                     // other version
      "MAEDACACHE 1\n11 6 +1\nEND\n",                                    // key mismatch
      "MAEDACACHE 1\n11 4 +1\nMATRIX A 1 1\n2/4\nEND\n",                 // not in lowest terms
      "MAEDACACHE 1\n11 4 +1\nMATRIX A 1 1\n1/1 2/1\nEND\n",             // extra entry
      good + "MATRIX B 0 0\n",                                           // data after END
      "",
  };
  for (const auto& text : bad) {
    write(text);
    w.seen.clear();
    CAPTURE(text);
    CHECK_FALSE(cache_read(dir.path, e.key, w.sink()).has_value());
    CHECK(w.seen.size() == 1);
  }
}

TEST_CASE("cell payload round trip") {
  SpaceCache spaces;
  LevelWorkspace ws(15, 4, spaces);
  const auto data = ws.new_space_data();
  auto dec = decompose(data);
  for (auto& o : dec.orbits) o.cm_discriminant = is_cm(o, dec, ws);
  const auto entry = cell_cache_entry(data, dec);
  std::string error;
  const auto parsed = parse_cache_entry(serialize_cache_entry(entry), error);
  REQUIRE(parsed.has_value());
  const auto cell = cell_from_cache(*parsed, error);
  REQUIRE(cell.has_value());
  CHECK(cell->first.dim_new == data.dim_new);
  CHECK(cell->first.hecke == data.hecke);
  CHECK(cell->first.atkin_lehner == data.atkin_lehner);
  CHECK(cell->second.size() == dec.orbits.size());

  CacheEntry broken = entry;
  broken.matrices.emplace_back("T_x", zero_matrix(0, 0));
  CHECK_FALSE(cell_from_cache(broken, error).has_value());
}

TEST_CASE("scan examples") {
  ScanOptions opt;
  opt.jobs = 3;
  const auto level_one = scan({1}, {12, 16, 20}, opt);
  REQUIRE(level_one.size() == 3);
  for (const auto& r : level_one) {
    CHECK(r.ncm == 1);
    CHECK(r.lo == 1);
    CHECK(r.match);
  }
  CHECK(stability(level_one) == 12);

  for (const auto& r : scan({11}, {6, 8, 10}, opt)) {
    CHECK(r.ncm == 2);
    CHECK(r.lo == 2);
    CHECK(r.match);
  }
  const auto cm = scan({27}, {2}, opt);
  REQUIRE(cm.size() == 1);
  CHECK(cm[0].ncm == 0);
  CHECK(cm[0].lo == 4);
  CHECK_FALSE(cm[0].match);
  CHECK(format_row(cm[0]) == "27\t2\t1\t1\t1\t0\t4\t0\t1\t-3\t27:-1");

  CHECK(scan({5}, {3, 5}, opt).empty());
  const auto ordered = scan({3, 1, 3}, {4, 2}, opt);
  REQUIRE(ordered.size() == 4);
  CHECK((ordered[0].level == 1 && ordered[0].weight == 2 && ordered[3].level == 3 && ordered[3].weight == 4));
}

TEST_CASE("stability") {
  CHECK(stability({row(1, 12, 1), row(1, 16, 1), row(1, 20, 1)}) == 12);
  CHECK(stability({row(7, 2, 0), row(7, 6, 2), row(7, 8, 2), row(7, 10, 2)}) == 6);
  CHECK_FALSE(stability({row(7, 2, 1), row(7, 4, 2)}).has_value());
  CHECK(stability({row(7, 10, 2), row(7, 2, 0), row(7, 6, 2)}) == 6);  // input order is irrelevant
  auto failed = row(7, 8, 2);
  failed.error = "boom";
  CHECK(stability({row(7, 4, 2), failed, row(7, 10, 2), row(7, 12, 2)}) == 10);
  CHECK_THROWS(stability({row(7, 2, 1)}));
  CHECK_THROWS(stability({row(7, 2, 1), row(8, 4, 1)}));
}

TEST_CASE("verify") {
  const auto pass = verify({row(3, 2, 5, 2), row(3, 6, 2, 2), row(3, 8, 2, 2)}, 6);
  CHECK(pass.pass);
  CHECK(pass.checked == 2);
  const auto fail = verify({row(3, 6, 2, 2), row(3, 8, 3, 2)}, 6);
  CHECK_FALSE(fail.pass);
  REQUIRE(fail.failures.size() == 1);
  CHECK(fail.failures[0].weight == 8);
  auto errored = row(3, 6, 2, 2);
  errored.error = "boom";
  CHECK_FALSE(verify({errored}, 6).pass);
  CHECK_THROWS_AS(verify({row(3, 2, 2, 2), row(3, 4, 2, 2)}, 6), std::invalid_argument);

  ScanOptions opt;
  CHECK_FALSE(verify(scan({27}, {2}, opt), 2).pass);
  // same rows, same verdict
  const auto rows = scan({11, 13}, {4, 6}, opt);
  CHECK(verify(rows, 4).pass == verify(rows, 4).pass);
  CHECK(verify(rows, 4).failures.size() == verify(rows, 4).failures.size());
}

TEST_CASE("TSV format") {
  CHECK(tsv_header() == "level\tweight\tdim_new\tn_orbits\tn_cm\tncm\tlo\tmatch\torbit_degrees\tcm_discs\tal_signs");
  ScanRow r = row(6, 2, 0, 1);
  r.n_orbits = 0;
  CHECK(format_row(r) == "6\t2\t0\t0\t0\t0\t1\t0\t\t\t");
  r.error = "bad\tthing";
  CHECK(format_row(r) == "6\t2\tNA\tNA\tNA\tNA\t1\t0\tERROR:bad thing\t\t");
  ScanRow two = row(15, 4, 2, 4);
  two.orbit_degrees = {1, 1};
  two.cm_discs = {std::nullopt, std::nullopt};
  two.al_signs = {{{3, 1}, {5, -1}}, {{3, -1}, {5, 1}}};
  CHECK(format_row(two) == "15\t4\t0\t2\t0\t2\t4\t0\t1;1\t-;-\t3:+1,5:-1;3:-1,5:+1");
  const auto tsv = format_tsv({r, two});
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 3);
}

TEST_CASE("cache does not change results") {
  TempDir dir;
  ScanOptions cold, off;
  cold.cache_dir = dir.path;
  cold.jobs = 4;
  off.jobs = 2;
  const std::vector<std::int64_t> levels = {1, 11, 15, 27, 32};
  const std::vector<int> weights = {2, 4, 6, 12};
  const auto a = format_tsv(scan(levels, weights, cold));
  const auto files = std::distance(fs::directory_iterator(dir.path), fs::directory_iterator());
  CHECK(files == static_cast<long>(levels.size() * weights.size()));
  const auto b = format_tsv(scan(levels, weights, cold));
  const auto c = format_tsv(scan(levels, weights, off));
  CHECK(a == b);
  CHECK(a == c);

  // a corrupted entry is reported, recomputed and rewritten
  const auto path = cache_file(dir.path, {11, 12, 1});
  std::ofstream(path, std::ios::binary | std::ios::trunc) << "MAEDACACHE 1\n11 12 +1\n";
  Warnings w;
  ScanOptions warm = cold;
  warm.warn = w.sink();
  CHECK(format_tsv(scan(levels, weights, warm)) == a);
  CHECK(w.seen.size() == 1);
  std::string error;
  CHECK(parse_cache_entry(slurp(path), error).has_value());
}
