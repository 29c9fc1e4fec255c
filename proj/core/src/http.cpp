// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/http.hpp"

#include <thread>

#include <httplib.h>

#include "paperscout/errors.hpp"

namespace paperscout {

namespace {

// Splits "https://host[:port]/path?query" into (origin, path+query).
std::pair<std::string, std::string> split_url(const std::string& url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::UpstreamError, "malformed url: " + url);
  }
  size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {url, "/"};
  }
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

HttplibTransport::HttplibTransport(int timeout_seconds)
    : timeout_seconds_(timeout_seconds) {}

HttpResponse HttplibTransport::execute(const HttpRequest& request) {
  auto [origin, path] = split_url(request.url);
  httplib::Client client(origin);
  client.set_connection_timeout(timeout_seconds_);
  client.set_read_timeout(timeout_seconds_);
  client.set_follow_location(true);
  httplib::Headers headers;
  for (const auto& [k, v] : request.headers) headers.emplace(k, v);

  httplib::Result result =
      request.method == "POST"
          ? client.Post(path, headers, request.body, "application/json")
          : client.Get(path, headers);
  if (!result) {
    throw Error(ErrorCode::UpstreamError,
                "transport failure for " + request.url + ": " +
                    httplib::to_string(result.error()));
  }
  return HttpResponse{result->status, result->body};
}

HttpResponse ForbiddenTransport::execute(const HttpRequest& request) {
  ++attempts_;
  throw Error(ErrorCode::OfflineCacheMiss,
              "offline mode: network request attempted for " + request.url);
}

void MockTransport::route(std::string url_substring, Handler handler) {
  routes_.push_back({std::move(url_substring), std::move(handler)});
}

HttpResponse MockTransport::execute(const HttpRequest& request) {
  ++calls_;
  int cur = in_flight_.fetch_add(1) + 1;
  int observed_max = max_in_flight_.load();
  while (cur > observed_max &&
         !max_in_flight_.compare_exchange_weak(observed_max, cur)) {
  }
  if (latency_us_ > 0) {
    std::this_thread::sleep_for(std::chrono::microseconds(latency_us_));
  }
  HttpResponse response{404, ""};
  bool matched = false;
  for (const Route& r : routes_) {
    if (request.url.find(r.needle) != std::string::npos) {
      response = r.handler(request);
      matched = true;
      break;
    }
  }
  if (!matched) {
    std::lock_guard<std::mutex> lock(mutex_);
    unmatched_.push_back(request.url);
  }
  in_flight_.fetch_sub(1);
  return response;
}

std::vector<std::string> MockTransport::unmatched() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return unmatched_;
}

}  // namespace paperscout
