// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace paperscout {

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t writes = 0;
};

/// Content-addressed on-disk cache. The key is the SHA-256 hex of a request
/// descriptor; the payload is the raw provider/endpoint response. Entries
/// double as replayable offline fixtures. Writes are atomic
/// (write-temp-then-rename), safe for concurrent writers of the same key.
class DiskCache {
 public:
  DiskCache(std::filesystem::path root, std::int64_t created_at = 0);

  /// Stable key for a request descriptor (kind + normalized parameters).
  static std::string key_for(const nlohmann::json& descriptor);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, std::string_view payload);
  bool contains(const std::string& key) const;

  CacheStats stats() const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path root_;
  std::int64_t created_at_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
  std::atomic<std::uint64_t> writes_{0};
};

}  // namespace paperscout
