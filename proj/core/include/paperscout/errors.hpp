// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <stdexcept>
#include <string>

namespace paperscout {

enum class ErrorCode {
  MissingIdentity,
  EmptyAfterCleaning,
  MalformedResponse,
  MalformedPayload,
  UpstreamError,
  RateLimited,
  NotFound,
  OfflineCacheMiss,
  CandidateSetMismatch,
  EmptyGroundTruth,
  NoRelevantDocs,
  EmptySlice,
  Unresolvable,
  MissingArtifacts,
  ConfigError,
};

const char* error_code_name(ErrorCode code);

/// All failure paths surface as this exception; `code()` identifies the
/// condition so callers can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace paperscout
