#include "gdh/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gdh/errors.hpp"
#include "gdh/render.hpp"

namespace gdh {

namespace {

// Pairs up to this weight are re-derived from the loaded lower stages.
constexpr int kSpotCheckWeight = 6;

nlohmann::json hierarchy_label(int order) {
  return order == 0 ? nlohmann::json("kp") : nlohmann::json(order);
}

}  // namespace

std::filesystem::path cache_file(const std::filesystem::path& dir, int order) {
  return dir / (order == 0 ? std::string("kp.json") : "gd-" + std::to_string(order) + ".json");
}

nlohmann::json serialize_tables(const Hierarchy& h) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [key, p] : h.pairs())
    pairs.push_back({{"i", key.first}, {"j", key.second}, {"poly", polynomial_json(p)}});
  nlohmann::json rests = nlohmann::json::array();
  for (const auto& [r, p] : h.eta_rests())
    rests.push_back({{"r", r}, {"poly", polynomial_json(p)}});
  nlohmann::json elims = nlohmann::json::array();
  for (const auto& [r, p] : h.eliminations())
    elims.push_back({{"r", r}, {"poly", polynomial_json(p)}});
  return {{"format_version", kCacheFormatVersion},
          {"hierarchy", hierarchy_label(h.order())},
          {"built_weight", h.built_weight()},
          {"pairs", pairs},
          {"eta_rests", rests},
          {"eliminations", elims}};
}

CacheLoad load_cache(Hierarchy& h, const std::filesystem::path& dir) {
  CacheLoad out;
  const auto path = cache_file(dir, h.order());
  std::ifstream in(path);
  if (!in) {
    out.reason = "no cache file " + path.string();
    return out;
  }
  if (h.built_weight() > 1) throw std::logic_error("cache load into a table already built");
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.at("format_version") != kCacheFormatVersion) {
      out.status = CacheStatus::stale;
      out.reason = "format version " + doc.at("format_version").dump() + " != " +
                   std::to_string(kCacheFormatVersion);
      return out;
    }
    if (doc.at("hierarchy") != hierarchy_label(h.order()))
      throw std::invalid_argument("file holds hierarchy " + doc.at("hierarchy").dump());
    const int weight = doc.at("built_weight").get<int>();
    if (weight < 1) throw std::invalid_argument("built_weight must be >= 1");

    std::map<std::pair<int, int>, JetPolynomial> pairs;
    std::map<int, JetPolynomial> rests, elims;
    for (const auto& rec : doc.at("pairs")) {
      const int i = rec.at("i").get<int>(), j = rec.at("j").get<int>();
      if (i < 1 || i > j || i + j > weight) throw std::invalid_argument("pair key out of range");
      if (!pairs.emplace(std::make_pair(i, j), polynomial_from_json(rec.at("poly"))).second)
        throw std::invalid_argument("duplicate pair record");
    }
    for (const auto& rec : doc.at("eta_rests")) {
      const int r = rec.at("r").get<int>();
      if (r < 1 || r > weight) throw std::invalid_argument("eta record out of range");
      if (!rests.emplace(r, polynomial_from_json(rec.at("poly"))).second)
        throw std::invalid_argument("duplicate eta record");
    }
    for (const auto& rec : doc.at("eliminations")) {
      const int r = rec.at("r").get<int>();
      if (!h.reduced() || r < 1 || h.order() + r + 1 > weight)
        throw std::invalid_argument("elimination record out of range");
      if (!elims.emplace(r, polynomial_from_json(rec.at("poly"))).second)
        throw std::invalid_argument("duplicate elimination record");
    }

    h.restore(weight, std::move(pairs), std::move(rests), std::move(elims));
    h.validate();
    for (int w = 2; w <= std::min(weight, kSpotCheckWeight); ++w)
      for (int i = 1; 2 * i <= w; ++i)
        if (h.derive_pair(i, w - i) != h.pair(i, w - i))
          throw std::invalid_argument("stored pair (" + std::to_string(i) + "," +
                                      std::to_string(w - i) + ") does not re-derive");
    out.status = CacheStatus::loaded;
    out.built_weight = weight;
    return out;
  } catch (const std::exception& e) {
    h.restore(1, {}, {}, {});
    out.status = CacheStatus::invalid;
    out.reason = path.string() + ": " + e.what();
    return out;
  }
}

void save_cache(const Hierarchy& h, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto path = cache_file(dir, h.order());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << serialize_tables(h).dump() << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gdh
