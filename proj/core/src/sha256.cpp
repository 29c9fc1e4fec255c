// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/sha256.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace paperscout {

namespace {

std::array<unsigned char, 32> digest(std::string_view data) {
  std::array<unsigned char, 32> out{};
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
  bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
            EVP_DigestUpdate(ctx, data.data(), data.size()) == 1 &&
            EVP_DigestFinal_ex(ctx, out.data(), &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok || len != out.size()) throw std::runtime_error("SHA-256 digest failed");
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  static const char* kHex = "0123456789abcdef";
  auto d = digest(data);
  std::string hex;
  hex.reserve(64);
  for (unsigned char byte : d) {
    hex.push_back(kHex[byte >> 4]);
    hex.push_back(kHex[byte & 0x0f]);
  }
  return hex;
}

std::uint64_t sha256_seed(std::string_view data) {
  auto d = digest(data);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | d[static_cast<size_t>(i)];
  return seed;
}

}  // namespace paperscout
