#include "divinv/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "divinv/errors.hpp"

namespace divinv {

namespace fs = std::filesystem;
using nlohmann::json;

json table_to_json(const CharacterTable& t, const GroupParams& params) {
  json doc;
  doc["format_version"] = kCacheFormatVersion;
  doc["params"] = {{"p", params.p}, {"e", params.e}, {"n", params.n}, {"m", params.m}};
  doc["group_order"] = t.group_order;
  doc["exponent"] = t.exponent;
  doc["ell"] = t.ell;
  doc["seed"] = t.seed;
  doc["class_reps"] = t.class_reps;
  doc["class_sizes"] = t.class_sizes;
  doc["inverse_class"] = t.inverse_class;
  doc["class_shells"] = t.class_shells;
  doc["twist_order"] = t.twist_order;
  doc["zeta"] = t.zeta;
  doc["degrees"] = t.degrees;
  doc["values"] = t.values;
  doc["labels"] = t.labels;
  return doc;
}

CharacterTable table_from_json(const json& doc, const GroupParams& params) {
  try {
    if (doc.at("format_version").get<int>() != kCacheFormatVersion)
      throw Error(ErrorCode::CacheCorrupt, "format version mismatch");
    const auto& p = doc.at("params");
    const GroupParams stored{p.at("p").get<std::uint32_t>(), p.at("e").get<std::uint32_t>(),
                             p.at("n").get<std::uint32_t>(), p.at("m").get<std::uint32_t>()};
    if (!(stored == params)) throw Error(ErrorCode::CacheCorrupt, "parameter mismatch");
    CharacterTable t;
    doc.at("group_order").get_to(t.group_order);
    doc.at("exponent").get_to(t.exponent);
    doc.at("ell").get_to(t.ell);
    doc.at("seed").get_to(t.seed);
    doc.at("class_reps").get_to(t.class_reps);
    doc.at("class_sizes").get_to(t.class_sizes);
    doc.at("inverse_class").get_to(t.inverse_class);
    doc.at("class_shells").get_to(t.class_shells);
    doc.at("twist_order").get_to(t.twist_order);
    doc.at("zeta").get_to(t.zeta);
    doc.at("degrees").get_to(t.degrees);
    doc.at("values").get_to(t.values);
    doc.at("labels").get_to(t.labels);
    const std::size_t k = t.class_reps.size();
    bool shape = t.class_sizes.size() == k && t.inverse_class.size() == k && t.class_shells.size() == k &&
                 t.degrees.size() == t.values.size() && t.labels.size() == t.values.size();
    for (const auto& row : t.values) shape = shape && row.size() == k;
    for (auto c : t.inverse_class) shape = shape && c < k;
    if (!shape) throw Error(ErrorCode::CacheCorrupt, "inconsistent table shape");
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, e.what());
  }
}

bool spot_check_table(const CharacterTable& t, std::uint64_t seed) {
  if (t.ell < 2 || t.values.empty()) return false;
  const ModArith f(t.ell);
  std::uint64_t sum = 0;
  for (auto d : t.degrees) sum += d * d;
  if (sum != t.group_order) return false;
  std::mt19937_64 rng(seed);
  const std::size_t i = std::uniform_int_distribution<std::size_t>(0, t.values.size() - 1)(rng);
  for (std::size_t j = 0; j < t.values.size(); ++j) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      acc = f.add(acc, f.mul(f.reduce(t.class_sizes[c]), f.mul(t.values[i][c], t.values[j][t.inverse_class[c]])));
    }
    if (acc != (i == j ? f.reduce(t.group_order) : 0)) return false;
  }
  return true;
}

std::string to_string(CacheStatus status) {
  switch (status) {
    case CacheStatus::Disabled: return "disabled";
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Miss: return "miss";
    case CacheStatus::Rebuilt: return "rebuilt";
  }
  return "unknown";
}

fs::path cache_file(const fs::path& dir, const GroupParams& params, std::uint64_t ell, std::uint64_t seed) {
  std::ostringstream name;
  name << "table-v" << kCacheFormatVersion << "-p" << params.p << "-e" << params.e << "-n" << params.n
       << "-m" << params.m << "-l" << ell << "-s" << seed << ".json";
  return dir / name.str();
}

std::string resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("DIVINV_CACHE_DIR")) return env;
  return {};
}

namespace {

void write_atomically(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IO, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::IO, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::IO, "rename to " + path.string() + ": " + ec.message());
  }
}

CharacterTable load(const fs::path& path, const UnitGroup& group, std::uint64_t seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::CacheCorrupt, "unreadable");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, e.what());
  }
  auto t = table_from_json(doc, group.params());
  const auto& cd = group.classes();
  bool same_classes = t.class_reps.size() == cd.count() && t.group_order == group.order();
  for (std::size_t c = 0; same_classes && c < cd.count(); ++c)
    same_classes = t.class_reps[c] == cd.representative(c) && t.class_sizes[c] == cd.size(c);
  if (!same_classes) throw Error(ErrorCode::CacheCorrupt, "class data does not match the group");
  if (t.seed != seed) throw Error(ErrorCode::CacheCorrupt, "seed mismatch");
  if (!spot_check_table(t, seed)) throw Error(ErrorCode::CacheCorrupt, "validation failed");
  return t;
}

}  // namespace

CacheResult cache_get_or_build(const UnitGroup& group, std::uint64_t seed, const std::string& dir) {
  CacheResult result;
  if (dir.empty()) {
    result.table = character_table(group, seed);
    return result;
  }
  const std::uint64_t ell = verification_prime(group.order(), group.exponent());
  const fs::path path = cache_file(dir, group.params(), ell, seed);
  if (fs::exists(path)) {
    try {
      result.table = load(path, group, seed);
      result.status = CacheStatus::Hit;
      return result;
    } catch (const Error& e) {
      result.status = CacheStatus::Rebuilt;
      result.message = "cache entry " + path.string() + " rejected (" + e.what() + "); rebuilding";
    }
  } else {
    result.status = CacheStatus::Miss;
  }
  result.table = character_table(group, seed);
  write_atomically(path, table_to_json(result.table, group.params()).dump());
  return result;
}

}  // namespace divinv
