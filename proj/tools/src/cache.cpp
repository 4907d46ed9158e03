#include "derange/cli/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

namespace derange::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Reads every well-formed record; later lines win.
std::map<std::string, json> load(const fs::path& path, std::ostream& diag) {
  std::map<std::string, json> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object() || !record.contains("key") || !record["key"].is_string() ||
        !record.contains("value")) {
      diag << "warning: skipping corrupt cache line " << lineno << " in " << path.string() << '\n';
      continue;
    }
    std::string key = record["key"].get<std::string>();
    records[std::move(key)] = std::move(record);
  }
  return records;
}

}  // namespace

std::string cache_key(const std::string& command, const json& params, const std::string& engine) {
  return json{{"command", command}, {"engine", engine}, {"params", params}}.dump();
}

fs::path default_cache_path() {
  if (const char* env = std::getenv("DERANGE_CACHE"); env != nullptr && *env != '\0') return env;
  return fs::path(".derange-cache") / "cache.jsonl";
}

ResultCache::ResultCache(fs::path path, std::ostream& diag) : path_(std::move(path)), diag_(diag) {
  records_ = load(path_, diag_);
}

std::optional<json> ResultCache::get(const std::string& key) const {
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second["value"];
}

void ResultCache::put(const std::string& key, const json& value) {
  if (!enabled_) return;
  records_[key] = json{{"key", key}, {"value", value}, {"created_at", utc_timestamp()}};

  // Pick up records other processes wrote since we loaded.
  std::ostringstream quiet;
  for (auto& [k, record] : load(path_, quiet)) records_.try_emplace(k, std::move(record));

  std::error_code ec;
  if (path_.has_parent_path()) fs::create_directories(path_.parent_path(), ec);
  std::random_device rd;
  fs::path tmp = path_;
  tmp += ".tmp." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& [k, record] : records_) out << record.dump() << '\n';
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      enabled_ = false;
      diag_ << "warning: cache " << path_.string() << " is not writable; continuing without it\n";
      return;
    }
  }
  fs::rename(tmp, path_, ec);
  if (ec) {
    fs::remove(tmp, ec);
    enabled_ = false;
    diag_ << "warning: cache " << path_.string() << " is not writable; continuing without it\n";
  }
}

}  // namespace derange::cli
