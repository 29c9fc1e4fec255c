// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>

namespace paperscout {

/// Time source used by the rate limiter, retry backoff and record stamps.
/// Injectable so tests and offline fixture runs are instant and
/// deterministic.
class Clock {
 public:
  virtual ~Clock() = default;
  /// Monotonic nanoseconds since an arbitrary epoch.
  virtual std::int64_t now_ns() = 0;
  virtual void sleep_until_ns(std::int64_t t) = 0;
  /// Wall-clock unix seconds, for PaperRecord.fetched_at stamps.
  virtual std::int64_t unix_seconds() = 0;

  void sleep_for_ns(std::int64_t d) { sleep_until_ns(now_ns() + d); }
};

class SystemClock final : public Clock {
 public:
  std::int64_t now_ns() override;
  void sleep_until_ns(std::int64_t t) override;
  std::int64_t unix_seconds() override;
};

/// Virtual clock: sleep_until advances `now` instead of blocking. Time is
/// monotone under concurrent use (now only moves forward).
class ManualClock final : public Clock {
 public:
  explicit ManualClock(std::int64_t start_ns = 0, std::int64_t unix_start = 0)
      : now_(start_ns), unix_start_(unix_start) {}

  std::int64_t now_ns() override { return now_.load(); }

  void sleep_until_ns(std::int64_t t) override {
    std::int64_t cur = now_.load();
    while (cur < t && !now_.compare_exchange_weak(cur, t)) {
    }
  }

  std::int64_t unix_seconds() override {
    return unix_start_ + now_.load() / 1'000'000'000;
  }

 private:
  std::atomic<std::int64_t> now_;
  std::int64_t unix_start_;
};

/// Wall clock frozen at a fixed instant; used by offline fixture runs so
/// fetched_at stamps (and therefore intermediate files) are reproducible.
class FixedClock final : public Clock {
 public:
  explicit FixedClock(std::int64_t unix_seconds) : unix_(unix_seconds) {}
  std::int64_t now_ns() override { return real_.now_ns(); }
  void sleep_until_ns(std::int64_t t) override { real_.sleep_until_ns(t); }
  std::int64_t unix_seconds() override { return unix_; }

 private:
  SystemClock real_;
  std::int64_t unix_;
};

}  // namespace paperscout
