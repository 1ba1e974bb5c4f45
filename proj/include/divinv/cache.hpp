#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "divinv/character_table.hpp"
#include "divinv/unit_group.hpp"

namespace divinv {

inline constexpr int kCacheFormatVersion = 1;

nlohmann::json table_to_json(const CharacterTable& table, const GroupParams& params);
/// Throws CacheCorrupt on any schema or version mismatch.
CharacterTable table_from_json(const nlohmann::json& doc, const GroupParams& params);

/// Sum of squared degrees and orthogonality of one seeded row against all rows.
bool spot_check_table(const CharacterTable& table, std::uint64_t seed);

enum class CacheStatus { Disabled, Hit, Miss, Rebuilt };
std::string to_string(CacheStatus status);

struct CacheResult {
  CharacterTable table;
  CacheStatus status = CacheStatus::Disabled;
  std::string message;
};

std::filesystem::path cache_file(const std::filesystem::path& dir, const GroupParams& params,
                                 std::uint64_t ell, std::uint64_t seed);

/// Directory given on the command line, else DIVINV_CACHE_DIR, else none.
std::string resolve_cache_dir(const std::string& flag);

/// Load the table of `group` from `dir`, or build and store it. An empty
/// `dir` disables caching. Unreadable or inconsistent entries are rebuilt.
CacheResult cache_get_or_build(const UnitGroup& group, std::uint64_t seed, const std::string& dir);

}  // namespace divinv
