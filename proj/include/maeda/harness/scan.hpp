#pragma once

#include "maeda/harness/cache.hpp"
#include "maeda/orbits/orbits.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace maeda {

struct ScanRow {
  std::int64_t level = 1;
  int weight = 2;
  std::int64_t dim_new = 0;
  std::int64_t n_orbits = 0;
  std::int64_t n_cm = 0;
  std::int64_t ncm = 0;
  std::int64_t lo = 1;
  bool match = false;
  std::vector<int> orbit_degrees;
  std::vector<std::optional<std::int64_t>> cm_discs;
  std::vector<std::map<std::int64_t, int>> al_signs;
  std::optional<std::string> error;  // set when the cell failed; counts are then meaningless
};

struct ScanOptions {
  std::optional<std::filesystem::path> cache_dir;
  int jobs = 1;
  WarningSink warn;
};

/// One cell. Reads the cache when a valid entry exists, otherwise computes and
/// writes it. Failures are captured in ScanRow::error.
ScanRow compute_cell(std::int64_t level, int weight, SpaceCache& spaces, const ScanOptions& options);

/// Rows for every level and every even weight, ordered by level then weight.
/// Odd weights are skipped.
std::vector<ScanRow> scan(const std::vector<std::int64_t>& levels, const std::vector<int>& weights,
                          const ScanOptions& options);

std::string tsv_header();
std::string format_row(const ScanRow& row);
std::string format_tsv(const std::vector<ScanRow>& rows);

/// Smallest k0 such that ncm is constant over the computed weights >= k0 (the
/// longest constant suffix). nullopt when the last two values differ or the
/// last row failed. Throws std::invalid_argument on fewer than two rows or
/// mixed levels.
std::optional<int> stability(std::vector<ScanRow> rows);

struct VerifyResult {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<ScanRow> failures;  // rows with weight >= min_weight and ncm != lo (or an error)
};

/// Pass iff every computed row with weight >= min_weight has ncm = lo.
/// Throws std::invalid_argument if no row has weight >= min_weight.
VerifyResult verify(const std::vector<ScanRow>& rows, int min_weight);

/// Cache payload for a computed cell, and the inverse.
CacheEntry cell_cache_entry(const NewSpaceData& data, const Decomposition& dec);
std::optional<std::pair<NewSpaceData, std::vector<std::int64_t>>> cell_from_cache(const CacheEntry& entry,
                                                                                  std::string& error);

}  // namespace maeda
