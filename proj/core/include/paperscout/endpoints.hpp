// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "paperscout/cache.hpp"
#include "paperscout/clock.hpp"
#include "paperscout/http.hpp"

namespace paperscout {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

/// Any service that accepts role-tagged messages and returns text.
class ChatEndpoint {
 public:
  virtual ~ChatEndpoint() = default;
  virtual std::string complete(const std::vector<ChatMessage>& messages) = 0;
  virtual std::string model_id() const = 0;
};

/// Text list in, one vector per text out. All vectors from one endpoint
/// share length and model id.
class EmbeddingEndpoint {
 public:
  virtual ~EmbeddingEndpoint() = default;
  virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
  virtual std::string model_id() const = 0;
};

struct EndpointConfig {
  std::string kind = "http";  // chat: http|stub; embedding: http|hashed
  std::string base_url;
  std::string model;
  std::string api_key_env;
  int max_concurrent = 4;
  double requests_per_second = 8.0;
  int max_retries = 4;
  int backoff_base_ms = 500;
  int batch_size = 16;  // texts per embedding request
  int stub_dim = 16;    // hashed-embedding dimension
};

/// OpenAI-style POST {base_url}/chat/completions client. Responses are
/// cached by (model, messages) content hash, so identical calls are served
/// with zero network traffic.
class HttpChatEndpoint final : public ChatEndpoint {
 public:
  HttpChatEndpoint(EndpointConfig config, HttpTransport* transport, DiskCache* cache,
                   Clock* clock, bool offline);
  ~HttpChatEndpoint() override;

  std::string complete(const std::vector<ChatMessage>& messages) override;
  std::string model_id() const override { return config_.model; }

 private:
  EndpointConfig config_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// OpenAI-style POST {base_url}/embeddings client. Vectors are cached one
/// entry per (model, text hash); only cache misses are batched into
/// requests.
class HttpEmbeddingEndpoint final : public EmbeddingEndpoint {
 public:
  HttpEmbeddingEndpoint(EndpointConfig config, HttpTransport* transport,
                        DiskCache* cache, Clock* clock, bool offline);
  ~HttpEmbeddingEndpoint() override;

  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;
  std::string model_id() const override { return config_.model; }

 private:
  EndpointConfig config_;
  DiskCache* cache_;
  bool offline_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace paperscout
