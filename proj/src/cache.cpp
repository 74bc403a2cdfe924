#include "wgcoe/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include "json.hpp"
#include "wgcoe/coe.hpp"
#include "wgcoe/comb/characters.hpp"
#include "wgcoe/exact/render.hpp"
#include "wgcoe/weingarten.hpp"

namespace wgcoe::cache {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json integers(const exact::IntCoefficients& c) {
  json out = json::array();
  for (const auto& x : c) out.push_back(x.get_str());
  return out;
}

exact::IntCoefficients parse_integers(const json& j) {
  exact::IntCoefficients out;
  for (const auto& x : j) out.emplace_back(x.get<std::string>());
  return out;
}

json rf_entry(const char* kind, const comb::Partition& key, const exact::RationalFunction& f) {
  const auto form = exact::integer_form(f);
  return {{"kind", kind},
          {"key", key.to_string()},
          {"value", exact::render(f)},
          {"numerator", integers(form.numerator)},
          {"denominator", integers(form.denominator)}};
}

json int_entry(const char* kind, const comb::CharacterKey& key, long value) {
  return {{"kind", kind}, {"key", key.first.to_string() + "|" + key.second.to_string()}, {"value", value}};
}

comb::CharacterKey parse_pair(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("bad key");
  return {comb::Partition::parse(text.substr(0, bar)), comb::Partition::parse(text.substr(bar + 1))};
}

}  // namespace

std::optional<fs::path> resolve_directory(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv(kEnvVar); env && *env) return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "wgcoe";
  return std::nullopt;
}

Cache::Cache(std::optional<fs::path> directory) : directory_(std::move(directory)) {}

std::optional<fs::path> Cache::file() const {
  if (!directory_) return std::nullopt;
  return *directory_ / kFileName;
}

LoadResult Cache::load() {
  LoadResult result;
  const auto path = file();
  std::error_code ec;
  if (!path || !fs::exists(*path, ec)) return result;
  try {
    std::ifstream in(*path);
    const json doc = json::parse(in);
    if (doc.at("format").get<std::string>() != kFormat || doc.at("version").get<int>() != kVersion) {
      result.ignored = true;
      result.reason = "unsupported cache version";
      return result;
    }
    // Parse everything before touching the tables so a bad file has no effect.
    std::vector<std::pair<comb::CharacterKey, long>> characters, kostkas;
    std::vector<std::pair<comb::Partition, exact::RationalFunction>> wgs, ws;
    for (const auto& e : doc.at("entries")) {
      const auto kind = e.at("kind").get<std::string>();
      const auto key = e.at("key").get<std::string>();
      if (kind == "character" || kind == "kostka") {
        auto& target = kind == "character" ? characters : kostkas;
        target.emplace_back(parse_pair(key), e.at("value").get<long>());
      } else if (kind == "wg" || kind == "W") {
        const exact::IntegerForm form{parse_integers(e.at("numerator")), parse_integers(e.at("denominator"))};
        auto& target = kind == "wg" ? wgs : ws;
        target.emplace_back(comb::Partition::parse(key), exact::from_integer_form(form));
      } else {
        throw std::invalid_argument("unknown entry kind");
      }
    }
    for (auto& [k, v] : characters) comb::character_memo().insert(k, v);
    for (auto& [k, v] : kostkas) comb::kostka_memo().insert(k, v);
    for (auto& [k, v] : wgs) wg::wg_table().insert(k, std::move(v));
    for (auto& [k, v] : ws) coe::w_table().insert(k, std::move(v));
    result.entries = characters.size() + kostkas.size() + wgs.size() + ws.size();
  } catch (const std::exception& e) {
    result = {};
    result.ignored = true;
    result.reason = std::string("unreadable cache file: ") + e.what();
  }
  return result;
}

bool Cache::store(std::ostream& warnings) const {
  const auto path = file();
  if (!path) return false;
  json entries = json::array();
  for (const auto& [k, v] : comb::character_memo().snapshot()) entries.push_back(int_entry("character", k, v));
  for (const auto& [k, v] : comb::kostka_memo().snapshot()) entries.push_back(int_entry("kostka", k, v));
  for (const auto& [k, v] : wg::wg_table().snapshot()) entries.push_back(rf_entry("wg", k, v));
  for (const auto& [k, v] : coe::w_table().snapshot()) entries.push_back(rf_entry("W", k, v));
  const json doc = {{"format", kFormat}, {"version", kVersion}, {"entries", entries}};

  std::error_code ec;
  fs::create_directories(*directory_, ec);
  std::random_device rd;
  const fs::path tmp = *path;
  const fs::path temp = tmp.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(temp);
    out << doc.dump(1) << '\n';
    out.close();
    if (!out) {
      fs::remove(temp, ec);
      warnings << "warning: cache directory " << directory_->string() << " is not writable; continuing without cache\n";
      return false;
    }
  }
  fs::rename(temp, *path, ec);
  if (ec) {
    fs::remove(temp, ec);
    warnings << "warning: could not update cache file " << path->string() << "\n";
    return false;
  }
  return true;
}

}  // namespace wgcoe::cache
