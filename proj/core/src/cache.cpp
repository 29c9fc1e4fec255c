// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include "paperscout/errors.hpp"
#include "paperscout/sha256.hpp"

namespace paperscout {

DiskCache::DiskCache(std::filesystem::path root, std::int64_t created_at)
    : root_(std::move(root)), created_at_(created_at) {
  std::filesystem::create_directories(root_);
}

std::string DiskCache::key_for(const nlohmann::json& descriptor) {
  // nlohmann::json orders object keys, so dump() is a canonical form.
  return sha256_hex(descriptor.dump());
}

std::filesystem::path DiskCache::path_for(const std::string& key) const {
  // Two-level fanout keeps directories small on large caches.
  return root_ / key.substr(0, 2) / (key + ".bin");
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ++hits_;
  return buffer.str();
}

bool DiskCache::contains(const std::string& key) const {
  return std::filesystem::exists(path_for(key));
}

void DiskCache::put(const std::string& key, std::string_view payload) {
  static std::atomic<std::uint64_t> counter{0};
  std::filesystem::path target = path_for(key);
  std::filesystem::create_directories(target.parent_path());
  std::filesystem::path tmp =
      target.parent_path() /
      (key + ".tmp." + std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::UpstreamError, "cache write failed: " + tmp.string());
    }
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  }
  std::filesystem::rename(tmp, target);
  ++writes_;
}

CacheStats DiskCache::stats() const {
  return CacheStats{hits_.load(), misses_.load(), writes_.load()};
}

}  // namespace paperscout
