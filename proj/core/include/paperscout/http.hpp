// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace paperscout {

struct HttpResponse {
  int status = 0;
  std::string body;
};

struct HttpRequest {
  std::string method = "GET";  // GET or POST
  std::string url;             // absolute, scheme://host[:port]/path?query
  std::map<std::string, std::string> headers;
  std::string body;  // POST payload
};

/// The seam between provider/endpoint clients and the network. Tests and
/// offline mode swap in instrumented implementations.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse execute(const HttpRequest& request) = 0;
};

/// Real network transport backed by cpp-httplib (TLS when built with
/// OpenSSL support).
class HttplibTransport final : public HttpTransport {
 public:
  explicit HttplibTransport(int timeout_seconds = 30);
  HttpResponse execute(const HttpRequest& request) override;

 private:
  int timeout_seconds_;
};

/// Counts calls through to an inner transport; offline assertions check the
/// count stays zero.
class CountingTransport final : public HttpTransport {
 public:
  explicit CountingTransport(HttpTransport* inner) : inner_(inner) {}
  HttpResponse execute(const HttpRequest& request) override {
    ++calls_;
    return inner_->execute(request);
  }
  std::uint64_t calls() const { return calls_.load(); }

 private:
  HttpTransport* inner_;
  std::atomic<std::uint64_t> calls_{0};
};

/// Offline mode: any network attempt is a hard error.
class ForbiddenTransport final : public HttpTransport {
 public:
  HttpResponse execute(const HttpRequest& request) override;
  std::uint64_t attempts() const { return attempts_.load(); }

 private:
  std::atomic<std::uint64_t> attempts_{0};
};

/// Scripted in-process transport for tests and fixture generation. Handlers
/// are matched in registration order against the full URL; the first match
/// serves the request. Tracks in-flight concurrency and grant history so
/// limiter properties can be asserted.
class MockTransport final : public HttpTransport {
 public:
  using Handler = std::function<HttpResponse(const HttpRequest&)>;

  void route(std::string url_substring, Handler handler);
  HttpResponse execute(const HttpRequest& request) override;

  int max_in_flight() const { return max_in_flight_.load(); }
  std::uint64_t calls() const { return calls_.load(); }
  std::vector<std::string> unmatched() const;

  /// Per-call artificial latency (real time), to let in-flight counts pile up.
  void set_latency_us(int us) { latency_us_ = us; }

 private:
  struct Route {
    std::string needle;
    Handler handler;
  };
  std::vector<Route> routes_;
  mutable std::mutex mutex_;
  std::vector<std::string> unmatched_;
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
  std::atomic<std::uint64_t> calls_{0};
  int latency_us_ = 0;
};

}  // namespace paperscout
