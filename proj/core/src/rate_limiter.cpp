// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/rate_limiter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paperscout {

AdmissionTicket::AdmissionTicket(AdmissionTicket&& other) noexcept
    : limiter_(other.limiter_), granted_at_ns_(other.granted_at_ns_) {
  other.limiter_ = nullptr;
}

AdmissionTicket::~AdmissionTicket() {
  if (limiter_ != nullptr) limiter_->release();
}

AdmissionLimiter::AdmissionLimiter(int max_concurrent, double requests_per_second,
                                   Clock* clock)
    : max_concurrent_(max_concurrent),
      requests_per_second_(requests_per_second),
      clock_(clock) {
  if (max_concurrent < 1) throw std::invalid_argument("max_concurrent must be >= 1");
  if (!(requests_per_second > 0.0)) {
    throw std::invalid_argument("requests_per_second must be > 0");
  }
  interval_ns_ = static_cast<std::int64_t>(std::ceil(1e9 / requests_per_second));
}

AdmissionTicket AdmissionLimiter::acquire() {
  std::int64_t grant;
  {
    std::unique_lock<std::mutex> lock(mutex_);
    slot_available_.wait(lock, [this] { return in_flight_ < max_concurrent_; });
    ++in_flight_;
    // Pacing: each grant gets the next free slot on the per-provider
    // timeline, never earlier than now and never closer than interval_ns
    // to the previous grant.
    std::int64_t now = clock_->now_ns();
    grant = std::max(now, next_grant_ns_);
    next_grant_ns_ = grant + interval_ns_;
  }
  clock_->sleep_until_ns(grant);
  return AdmissionTicket(this, grant);
}

void AdmissionLimiter::release() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    --in_flight_;
  }
  slot_available_.notify_one();
}

}  // namespace paperscout
