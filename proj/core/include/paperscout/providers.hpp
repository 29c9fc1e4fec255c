// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paperscout/cache.hpp"
#include "paperscout/clock.hpp"
#include "paperscout/http.hpp"
#include "paperscout/query_gen.hpp"
#include "paperscout/rate_limiter.hpp"
#include "paperscout/types.hpp"

namespace paperscout {

struct ProviderConfig {
  std::string base_url;
  int max_concurrent = 4;
  double requests_per_second = 2.0;
  int page_size = 25;
  int max_retries = 4;
  int backoff_base_ms = 500;
  std::string api_key_env;  // env var holding the auth token, if any
  std::string mailto;       // OpenAlex polite-pool contact, optional
};

/// OpenAlex batched id filters accept at most this many ids per request.
inline constexpr size_t kBatchFilterLimit = 50;

/// Cache-then-network request path shared by every provider client:
/// consult the cache first; on a miss acquire an admission slot, execute
/// with retry/backoff on 429 and 5xx, and store the raw payload.
///
/// Cache keys are derived from the request descriptor (kind + normalized
/// parameters), never from the base URL, so a cache warmed against a mock
/// server replays against any configured endpoint.
class ProviderSession {
 public:
  ProviderSession(std::string provider_label, ProviderConfig config,
                  HttpTransport* transport, DiskCache* cache, Clock* clock,
                  bool offline, std::uint64_t jitter_seed = 0);

  /// Returns the response body. Throws Error(NotFound) on 404,
  /// Error(RateLimited) when retries are exhausted on 429,
  /// Error(UpstreamError) on other failures, Error(OfflineCacheMiss) when
  /// offline and the key is absent.
  std::string fetch(const nlohmann::json& descriptor, const HttpRequest& request);

  const ProviderConfig& config() const { return config_; }
  const std::string& label() const { return label_; }

 private:
  std::string label_;
  ProviderConfig config_;
  HttpTransport* transport_;
  DiskCache* cache_;  // may be null (uncached session)
  Clock* clock_;
  bool offline_;
  AdmissionLimiter limiter_;
  std::mutex rng_mutex_;
  std::mt19937_64 rng_;
};

class ArxivClient {
 public:
  ArxivClient(ProviderConfig config, HttpTransport* transport, DiskCache* cache,
              Clock* clock, bool offline);

  std::vector<PaperRecord> search(const ProviderQuery& query);
  /// Resolves arXiv ids (no version suffix) to records via the id_list API.
  std::vector<PaperRecord> get_by_ids(const std::vector<std::string>& arxiv_ids);

 private:
  ProviderSession session_;
  Clock* clock_;
};

struct WorkAuthors {
  std::string work_id;
  std::vector<std::string> author_ids;
};

enum class IdKind { doi, author };

class OpenAlexClient {
 public:
  OpenAlexClient(ProviderConfig config, HttpTransport* transport, DiskCache* cache,
                 Clock* clock, bool offline);

  std::vector<PaperRecord> search(const ProviderQuery& query);

  /// Fetches one Work; id may be "W...", an arXiv id ("arxiv:...") or a DOI
  /// ("doi:..."). Throws Error(NotFound) when the work does not exist.
  nlohmann::json get_work(const std::string& id);

  /// Resolves Work records for bare OpenAlex ids, batched, input order kept.
  std::vector<PaperRecord> get_works_by_ids(const std::vector<std::string>& work_ids);

  /// Works of one author, most recent first, at most max_pages * per_page.
  std::vector<WorkAuthors> fetch_author_works(const std::string& author_id,
                                              int max_pages, int per_page);

  /// Batched filter resolution (chunks of <= 50 ids). The returned map is
  /// keyed by the normalized requested id; unresolved ids are simply absent.
  std::map<std::string, nlohmann::json> resolve_ids_batched(
      const std::vector<std::string>& ids, IdKind kind);

 private:
  ProviderSession session_;
  Clock* clock_;
};

class S2Client {
 public:
  S2Client(ProviderConfig config, HttpTransport* transport, DiskCache* cache,
           Clock* clock, bool offline);

  std::vector<PaperRecord> search(const ProviderQuery& query);
  nlohmann::json get_paper(const std::string& id);
  /// Reference entries of a paper; id forms as in get_paper.
  std::vector<PaperRecord> get_references(const std::string& id);

 private:
  ProviderSession session_;
  Clock* clock_;
};

struct ReferenceFetch {
  std::vector<PaperRecord> references;
  /// False when both providers reported no or partial bibliography; the
  /// caller may hand the id to a pluggable fallback resolver.
  bool complete = false;
};

/// Optional plug-in invoked for ids whose bibliography both providers
/// reported incomplete (for example an external PDF-parsing tool).
using FallbackReferenceResolver =
    std::function<std::optional<std::vector<PaperRecord>>(const std::string& canonical_id)>;

/// Facade over the three provider clients.
class ProviderHub {
 public:
  ProviderHub(std::map<Provider, ProviderConfig> configs, HttpTransport* transport,
              DiskCache* cache, Clock* clock, bool offline);

  std::vector<PaperRecord> search(const ProviderQuery& query);

  /// Merged, deduped reference list from OpenAlex and Semantic Scholar
  /// (OpenAlex ordering first). Throws Error(NotFound) when the id resolves
  /// at neither provider.
  ReferenceFetch fetch_references(const std::string& canonical_id);

  /// Resolves canonical ids to records, trying OpenAlex then S2 then arXiv.
  std::optional<PaperRecord> lookup(const std::string& canonical_id);

  OpenAlexClient& openalex() { return *openalex_; }
  S2Client& s2() { return *s2_; }
  ArxivClient& arxiv() { return *arxiv_; }

  void set_fallback_resolver(FallbackReferenceResolver resolver) {
    fallback_ = std::move(resolver);
  }

 private:
  std::unique_ptr<ArxivClient> arxiv_;
  std::unique_ptr<OpenAlexClient> openalex_;
  std::unique_ptr<S2Client> s2_;
  FallbackReferenceResolver fallback_;
};

}  // namespace paperscout
