#include "maeda/harness/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace maeda {

const ExactMatrix* CacheEntry::find(const std::string& name) const {
  for (const auto& [n, m] : matrices)
    if (n == name) return &m;
  return nullptr;
}

std::string serialize_cache_entry(const CacheEntry& entry) {
  std::ostringstream out;
  out << "MAEDACACHE " << kCacheFormatVersion << "\n";
  out << entry.key.level << " " << entry.key.weight << " " << (entry.key.sign > 0 ? "+1" : "-1") << "\n";
  for (const auto& [name, m] : entry.matrices) {
    out << "MATRIX " << name << " " << m.rows() << " " << m.cols() << "\n";
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = 0; j < m.cols(); ++j) {
        Rational q = m(i, j);
        q.canonicalize();
        out << (j ? " " : "") << q.get_num().get_str() << "/" << q.get_den().get_str();
      }
      out << "\n";
    }
  }
  out << "END\n";
  return out.str();
}

namespace {

bool parse_rational(const std::string& token, Rational& out) {
  const auto slash = token.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == token.size()) return false;
  Integer num, den;
  if (num.set_str(token.substr(0, slash), 10) != 0 || den.set_str(token.substr(slash + 1), 10) != 0) return false;
  if (sgn(den) <= 0) return false;
  out = Rational(num, den);
  out.canonicalize();
  // lowest terms only
  return out.get_den() == den;
}

}  // namespace

std::optional<CacheEntry> parse_cache_entry(const std::string& text, std::string& error) {
  std::istringstream in(text);
  std::string line;
  auto fail = [&](const std::string& why) {
    error = why;
    return std::nullopt;
  };
  if (!std::getline(in, line)) return fail("empty file");
  {
    std::istringstream h(line);
    std::string magic;
    int version = 0;
    if (!(h >> magic >> version) || magic != "MAEDACACHE") return fail("bad header");
    if (version != kCacheFormatVersion) return fail("format version " + std::to_string(version));
  }
  CacheEntry entry;
  if (!std::getline(in, line)) return fail("missing key line");
  {
    std::istringstream k(line);
    std::string sign;
    if (!(k >> entry.key.level >> entry.key.weight >> sign) || (sign != "+1" && sign != "-1" && sign != "1"))
      return fail("bad key line");
    entry.key.sign = sign == "-1" ? -1 : 1;
  }
  while (std::getline(in, line)) {
    if (line == "END") {
      std::string rest;
      while (std::getline(in, rest))
        if (!rest.empty()) return fail("data after END");
      return entry;
    }
    std::istringstream m(line);
    std::string tag, name;
    long rows = -1, cols = -1;
    if (!(m >> tag >> name >> rows >> cols) || tag != "MATRIX" || rows < 0 || cols < 0)
      return fail("bad matrix header");
    ExactMatrix mat = zero_matrix(rows, cols);
    for (long i = 0; i < rows; ++i) {
      if (!std::getline(in, line)) return fail("truncated matrix " + name);
      std::istringstream r(line);
      std::string token;
      for (long j = 0; j < cols; ++j) {
        if (!(r >> token) || !parse_rational(token, mat(i, j))) return fail("bad entry in matrix " + name);
      }
      if (r >> token) return fail("extra entries in matrix " + name);
    }
    entry.matrices.emplace_back(name, std::move(mat));
  }
  return fail("missing END marker");
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const CacheKey& key) {
  return dir / ("N" + std::to_string(key.level) + "_k" + std::to_string(key.weight) + (key.sign > 0 ? "_plus" : "_minus") +
                ".mcache");
}

std::optional<CacheEntry> cache_read(const std::filesystem::path& dir, const CacheKey& key, const WarningSink& warn) {
  const auto path = cache_file(dir, key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (warn) warn("cache: cannot read " + path.string());
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string error;
  auto entry = parse_cache_entry(buf.str(), error);
  if (!entry) {
    if (warn) warn("cache: ignoring " + path.string() + ": " + error);
    return std::nullopt;
  }
  if (!(entry->key == key)) {
    if (warn) warn("cache: ignoring " + path.string() + ": key mismatch");
    return std::nullopt;
  }
  return entry;
}

void cache_write(const std::filesystem::path& dir, const CacheEntry& entry, const WarningSink& warn) {
  static std::atomic<unsigned long> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    if (warn) warn("cache: cannot create " + dir.string() + ": " + ec.message());
    return;
  }
  const auto path = cache_file(dir, entry.key);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize_cache_entry(entry);
    out.flush();
    if (!out) {
      if (warn) warn("cache: write failed for " + tmp.string());
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    if (warn) warn("cache: cannot replace " + path.string() + ": " + ec.message());
    std::filesystem::remove(tmp, ec);
  }
}

}  // namespace maeda
