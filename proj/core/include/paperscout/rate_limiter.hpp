// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <condition_variable>
#include <cstdint>
#include <mutex>

#include "paperscout/clock.hpp"

namespace paperscout {

class AdmissionLimiter;

/// RAII admission slot. Holds one concurrency slot from acquire() until
/// destruction; granted_at_ns is the pacing timestamp assigned to the
/// request (grants are spaced >= 1/rps apart).
class AdmissionTicket {
 public:
  AdmissionTicket(AdmissionTicket&& other) noexcept;
  AdmissionTicket& operator=(AdmissionTicket&&) = delete;
  AdmissionTicket(const AdmissionTicket&) = delete;
  ~AdmissionTicket();

  std::int64_t granted_at_ns() const { return granted_at_ns_; }

 private:
  friend class AdmissionLimiter;
  AdmissionTicket(AdmissionLimiter* limiter, std::int64_t granted_at_ns)
      : limiter_(limiter), granted_at_ns_(granted_at_ns) {}

  AdmissionLimiter* limiter_;
  std::int64_t granted_at_ns_;
};

/// Per-provider admission control: at most max_concurrent requests in
/// flight, grants paced so the observed rate never exceeds
/// requests_per_second. Safe under concurrent acquire/release.
class AdmissionLimiter {
 public:
  AdmissionLimiter(int max_concurrent, double requests_per_second, Clock* clock);

  /// Blocks until a slot and a pacing token are available.
  AdmissionTicket acquire();

  int max_concurrent() const { return max_concurrent_; }
  double requests_per_second() const { return requests_per_second_; }

 private:
  friend class AdmissionTicket;
  void release();

  int max_concurrent_;
  double requests_per_second_;
  std::int64_t interval_ns_;
  Clock* clock_;

  std::mutex mutex_;
  std::condition_variable slot_available_;
  int in_flight_ = 0;
  std::int64_t next_grant_ns_ = 0;
};

}  // namespace paperscout
