// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/clock.hpp"

#include <thread>

namespace paperscout {

std::int64_t SystemClock::now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void SystemClock::sleep_until_ns(std::int64_t t) {
  std::int64_t now = now_ns();
  if (t > now) {
    std::this_thread::sleep_for(std::chrono::nanoseconds(t - now));
  }
}

std::int64_t SystemClock::unix_seconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace paperscout
