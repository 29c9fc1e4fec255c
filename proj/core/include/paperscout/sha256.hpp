// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace paperscout {

/// Lowercase hex SHA-256 digest. Stable across platforms and runs; used for
/// cache keys, title-hash identities and deterministic stub endpoints.
std::string sha256_hex(std::string_view data);

/// First 8 bytes of the digest as an unsigned integer (seed material).
std::uint64_t sha256_seed(std::string_view data);

}  // namespace paperscout
