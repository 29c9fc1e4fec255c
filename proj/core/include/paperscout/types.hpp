// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace paperscout {

enum class Provider { arxiv, openalex, s2, manual };

/// Re-ranking method attached to every scored candidate.
enum class Method { none, qwen_embed, debate, ensemble };

const char* provider_name(Provider p);
Provider provider_from_name(const std::string& name);
const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct AuthorRef {
  std::optional<std::string> openalex_author_id;
  std::string display_name;  // never empty

  bool operator==(const AuthorRef&) const = default;
};

/// Canonical candidate/query paper. Immutable once constructed; the
/// canonical_id is stable across re-fetches of the same work.
struct PaperRecord {
  std::string canonical_id;
  std::optional<std::string> arxiv_id;
  std::optional<std::string> doi;
  std::optional<std::string> openalex_id;
  std::optional<std::string> s2_id;
  std::string title;
  std::optional<std::string> abstract;
  std::optional<std::string> full_text;
  std::vector<AuthorRef> authors;
  std::optional<std::vector<std::string>> references;  // canonical ids
  Provider source_provider = Provider::manual;
  std::int64_t fetched_at = 0;  // unix seconds, 0 = unknown

  bool operator==(const PaperRecord&) const = default;
};

/// A benchmark query paper with its cleaned full text and ground truth.
struct QueryDocument {
  PaperRecord paper;
  std::string cleaned_text;
  std::vector<std::string> ground_truth_refs;  // canonical ids, the set G

  int n_p() const { return static_cast<int>(ground_truth_refs.size()); }
};

struct ScoredCandidate {
  PaperRecord paper;
  double score = 0.0;  // [0, 100]
  int rank = 0;        // 1-based, contiguous
  Method method = Method::none;
};

struct RankedList {
  std::string query_id;
  Method method = Method::none;
  std::vector<ScoredCandidate> entries;
};

/// Shared invariant check for every RankedList produced anywhere: scores
/// finite and in [0,100], sorted descending with ties broken by canonical_id
/// ascending, ranks 1..n contiguous, no duplicate canonical_id. Throws
/// Error(MalformedPayload) on violation.
void validate_ranked_list(const RankedList& list);

/// Sorts scored entries by (score desc, canonical_id asc), assigns ranks
/// 1..n and stamps query/method. The one constructor used by every ranker.
RankedList make_ranked_list(std::string query_id, Method method,
                            std::vector<ScoredCandidate> entries);

// JSON representations (line-delimited on disk; absent optionals omitted).
void to_json(nlohmann::json& j, const AuthorRef& a);
void from_json(const nlohmann::json& j, AuthorRef& a);
void to_json(nlohmann::json& j, const PaperRecord& r);
void from_json(const nlohmann::json& j, PaperRecord& r);

/// RankedList entries serialize one candidate per line, each line carrying
/// query_id/method so the file is self-describing.
nlohmann::json ranked_entry_to_json(const RankedList& list, size_t index);
RankedList ranked_list_from_lines(const std::vector<nlohmann::json>& lines);

}  // namespace paperscout
