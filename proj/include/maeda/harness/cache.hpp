#pragma once

// On-disk cache of per-cell operator matrices. One text file per (N, k, sign):
//
//   MAEDACACHE 1
//   N k sign
//   MATRIX <name> <rows> <cols>
//   <rows lines of space-separated num/den>
//   ...
//   END
//
// Files are replaced atomically (write to a temporary, then rename). Anything
// that does not parse exactly, including a different version or key, is
// reported and treated as a miss.

#include "maeda/arith/scalar.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace maeda {

inline constexpr int kCacheFormatVersion = 1;

struct CacheKey {
  std::int64_t level = 1;
  int weight = 2;
  int sign = 1;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
  CacheKey key;
  std::vector<std::pair<std::string, ExactMatrix>> matrices;

  const ExactMatrix* find(const std::string& name) const;
};

using WarningSink = std::function<void(const std::string&)>;

std::string serialize_cache_entry(const CacheEntry& entry);

/// Parses a cache file body. On failure returns nullopt and sets `error`.
std::optional<CacheEntry> parse_cache_entry(const std::string& text, std::string& error);

std::filesystem::path cache_file(const std::filesystem::path& dir, const CacheKey& key);

/// Missing file: nullopt, silently. Unreadable, corrupt or mismatched file: nullopt plus a warning.
std::optional<CacheEntry> cache_read(const std::filesystem::path& dir, const CacheKey& key, const WarningSink& warn);

/// Atomic whole-file replacement. I/O failures become warnings.
void cache_write(const std::filesystem::path& dir, const CacheEntry& entry, const WarningSink& warn);

}  // namespace maeda
