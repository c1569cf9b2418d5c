// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#include "knotforge/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace knotforge {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

ResultCache::ResultCache(fs::path dir, std::string version, std::ostream* warnings)
    : dir_(std::move(dir)), version_(std::move(version)), warnings_(warnings) {}

fs::path ResultCache::default_directory() {
  if (const char* env = std::getenv("KNOTFORGE_CACHE"); env && *env) return env;
  return ".knotforge-cache";
}

fs::path ResultCache::entry_path(const std::string& key) const {
  return dir_ / (sha256_hex(version_ + '\0' + key) + ".json");
}

void ResultCache::disable(const std::string& why) {
  if (enabled_ && warnings_)
    *warnings_ << "warning: result cache disabled (" << why << ")\n";
  enabled_ = false;
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto entry = nlohmann::json::parse(text, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  // The hash names the file; the stored key and version guard against collisions.
  if (entry.value("version", "") != version_ || entry.value("key", "") != key)
    return std::nullopt;
  const auto it = entry.find("payload");
  if (it == entry.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

bool ResultCache::store(const std::string& key, const std::string& payload) {
  if (!enabled_) return false;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    disable("cannot create " + dir_.string() + ": " + ec.message());
    return false;
  }
  static std::atomic<unsigned> counter{0};
  const fs::path target = entry_path(key);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    const nlohmann::json entry = {{"version", version_}, {"key", key}, {"payload", payload}};
    out << entry.dump() << '\n';
    if (!out.flush()) {
      out.close();
      fs::remove(temp, ec);
      disable("cannot write in " + dir_.string());
      return false;
    }
  }
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    disable("cannot publish entry in " + dir_.string());
    return false;
  }
  return true;
}

}  // namespace knotforge
