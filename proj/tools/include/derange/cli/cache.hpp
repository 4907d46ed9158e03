#pragma once

// Persistent result cache: one JSON record per line,
//   {"key": ..., "value": ..., "created_at": ...}
// Records are looked up by their canonical key string. The cache never
// changes a result; a missing, corrupt or unwritable file only costs time.

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"

namespace derange::cli {

inline constexpr const char* kEngineVersion = "derange-1.0.0";

/// Canonical key for a request. nlohmann objects keep their keys sorted, so
/// equal parameter sets give equal strings regardless of argument order.
std::string cache_key(const std::string& command, const nlohmann::json& params,
                      const std::string& engine = kEngineVersion);

/// DERANGE_CACHE if set, otherwise .derange-cache/cache.jsonl.
std::filesystem::path default_cache_path();

class ResultCache {
 public:
  /// Loads existing records. Lines that do not parse are skipped with a
  /// warning on `diag`.
  ResultCache(std::filesystem::path path, std::ostream& diag);

  std::optional<nlohmann::json> get(const std::string& key) const;

  /// Rewrites the file through a temporary and a rename. On failure the
  /// cache switches itself off and warns once.
  void put(const std::string& key, const nlohmann::json& value);

  bool enabled() const { return enabled_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ostream& diag_;
  bool enabled_ = true;
  std::map<std::string, nlohmann::json> records_;  // key -> full record
};

}  // namespace derange::cli
