#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "gdh/hierarchy.hpp"

namespace gdh {

inline constexpr int kCacheFormatVersion = 1;

// <dir>/kp.json for KP, <dir>/gd-<n>.json for the n-th reduction.
std::filesystem::path cache_file(const std::filesystem::path& dir, int order);

// {"format_version", "hierarchy", "built_weight", "pairs", "eta_rests",
//  "eliminations"}; polynomials in canonical storage order.
nlohmann::json serialize_tables(const Hierarchy& h);

enum class CacheStatus { loaded, missing, stale, invalid };

struct CacheLoad {
  CacheStatus status = CacheStatus::missing;
  int built_weight = 0;
  std::string reason;  // why a file was not used
};

// Install the persisted tables of h's hierarchy into h, which must be fresh.
// The file is used only if its version and hierarchy match, every record
// passes the structural checks and low-weight pairs re-derive identically;
// otherwise h is left fresh and the reason is reported.
CacheLoad load_cache(Hierarchy& h, const std::filesystem::path& dir);

// Write h's tables (temp file + rename). Creates the directory if needed.
void save_cache(const Hierarchy& h, const std::filesystem::path& dir);

}  // namespace gdh
