// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/errors.hpp"

namespace paperscout {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingIdentity: return "MissingIdentity";
    case ErrorCode::EmptyAfterCleaning: return "EmptyAfterCleaning";
    case ErrorCode::MalformedResponse: return "MalformedResponse";
    case ErrorCode::MalformedPayload: return "MalformedPayload";
    case ErrorCode::UpstreamError: return "UpstreamError";
    case ErrorCode::RateLimited: return "RateLimited";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::OfflineCacheMiss: return "OfflineCacheMiss";
    case ErrorCode::CandidateSetMismatch: return "CandidateSetMismatch";
    case ErrorCode::EmptyGroundTruth: return "EmptyGroundTruth";
    case ErrorCode::NoRelevantDocs: return "NoRelevantDocs";
    case ErrorCode::EmptySlice: return "EmptySlice";
    case ErrorCode::Unresolvable: return "Unresolvable";
    case ErrorCode::MissingArtifacts: return "MissingArtifacts";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace paperscout
