// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace knotforge {

/// On-disk store of result payloads keyed by the full job description.
///
/// Entries live in one file per key, named by the SHA-256 of the tool
/// version and key, and are published by rename so concurrent writers never
/// expose a partial file. Any filesystem failure disables the cache with a
/// single warning instead of failing the caller.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::string version, std::ostream* warnings);

  /// Directory from KNOTFORGE_CACHE, else ./.knotforge-cache.
  static std::filesystem::path default_directory();

  bool enabled() const noexcept { return enabled_; }
  const std::filesystem::path& directory() const noexcept { return dir_; }

  /// Payload stored under key by this version, byte for byte.
  std::optional<std::string> lookup(const std::string& key) const;
  /// Returns false when the cache is (or just became) disabled.
  bool store(const std::string& key, const std::string& payload);

  std::filesystem::path entry_path(const std::string& key) const;

 private:
  void disable(const std::string& why);

  std::filesystem::path dir_;
  std::string version_;
  std::ostream* warnings_;
  bool enabled_ = true;
};

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace knotforge
