#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace wgcoe::cache {

inline constexpr int kVersion = 1;
inline constexpr const char* kFormat = "wgcoe-cache";
inline constexpr const char* kFileName = "wgcoe-cache.json";
inline constexpr const char* kEnvVar = "WGCOE_CACHE_DIR";

// --cache-dir, then $WGCOE_CACHE_DIR, then $HOME/.cache/wgcoe.
std::optional<std::filesystem::path> resolve_directory(const std::optional<std::string>& flag);

struct LoadResult {
  std::size_t entries = 0;
  bool ignored = false;  // file present but corrupt or of another version
  std::string reason;
};

/// Read-through/write-back persistence for the character, Kostka, Wg and W
/// memo tables. Values are stored as exact integer arrays; the tables are
/// always recomputable, so a bad file is skipped rather than trusted.
class Cache {
public:
  explicit Cache(std::optional<std::filesystem::path> directory);

  // Merges the file into the in-memory tables.
  LoadResult load();
  // Writes every table atomically (temp file + rename). Returns false and
  // prints a warning when the directory is not writable.
  bool store(std::ostream& warnings) const;

  bool enabled() const { return directory_.has_value(); }
  std::optional<std::filesystem::path> file() const;

private:
  std::optional<std::filesystem::path> directory_;
};

}  // namespace wgcoe::cache
