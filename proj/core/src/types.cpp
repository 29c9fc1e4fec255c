// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/types.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "paperscout/errors.hpp"

namespace paperscout {

const char* provider_name(Provider p) {
  switch (p) {
    case Provider::arxiv: return "arxiv";
    case Provider::openalex: return "openalex";
    case Provider::s2: return "s2";
    case Provider::manual: return "manual";
  }
  return "manual";
}

Provider provider_from_name(const std::string& name) {
  if (name == "arxiv") return Provider::arxiv;
  if (name == "openalex") return Provider::openalex;
  if (name == "s2") return Provider::s2;
  if (name == "manual") return Provider::manual;
  throw Error(ErrorCode::ConfigError, "unknown provider '" + name + "'");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::none: return "none";
    case Method::qwen_embed: return "qwen_embed";
    case Method::debate: return "debate";
    case Method::ensemble: return "ensemble";
  }
  return "none";
}

Method method_from_name(const std::string& name) {
  if (name == "none") return Method::none;
  if (name == "qwen_embed") return Method::qwen_embed;
  if (name == "debate") return Method::debate;
  if (name == "ensemble") return Method::ensemble;
  throw Error(ErrorCode::ConfigError, "unknown method '" + name + "'");
}

void validate_ranked_list(const RankedList& list) {
  std::unordered_set<std::string> seen;
  seen.reserve(list.entries.size());
  for (size_t i = 0; i < list.entries.size(); ++i) {
    const ScoredCandidate& e = list.entries[i];
    if (!std::isfinite(e.score) || e.score < 0.0 || e.score > 100.0) {
      throw Error(ErrorCode::MalformedPayload,
                  "ranked list " + list.query_id + ": score out of range at rank " +
                      std::to_string(i + 1));
    }
    if (e.rank != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::MalformedPayload,
                  "ranked list " + list.query_id + ": ranks not contiguous at index " +
                      std::to_string(i));
    }
    if (!seen.insert(e.paper.canonical_id).second) {
      throw Error(ErrorCode::MalformedPayload,
                  "ranked list " + list.query_id + ": duplicate id " + e.paper.canonical_id);
    }
    if (i > 0) {
      const ScoredCandidate& prev = list.entries[i - 1];
      bool ordered = prev.score > e.score ||
                     (prev.score == e.score &&
                      prev.paper.canonical_id < e.paper.canonical_id);
      if (!ordered) {
        throw Error(ErrorCode::MalformedPayload,
                    "ranked list " + list.query_id + ": order violated at rank " +
                        std::to_string(i + 1));
      }
    }
  }
}

RankedList make_ranked_list(std::string query_id, Method method,
                            std::vector<ScoredCandidate> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ScoredCandidate& a, const ScoredCandidate& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.paper.canonical_id < b.paper.canonical_id;
            });
  RankedList list{std::move(query_id), method, std::move(entries)};
  for (size_t i = 0; i < list.entries.size(); ++i) {
    list.entries[i].rank = static_cast<int>(i) + 1;
    list.entries[i].method = method;
  }
  validate_ranked_list(list);
  return list;
}

namespace {

template <typename T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v.has_value()) j[key] = *v;
}

template <typename T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) {
    v = j.at(key).get<T>();
  } else {
    v.reset();
  }
}

}  // namespace

void to_json(nlohmann::json& j, const AuthorRef& a) {
  j = nlohmann::json{{"display_name", a.display_name}};
  put_optional(j, "openalex_author_id", a.openalex_author_id);
}

void from_json(const nlohmann::json& j, AuthorRef& a) {
  a.display_name = j.at("display_name").get<std::string>();
  get_optional(j, "openalex_author_id", a.openalex_author_id);
}

void to_json(nlohmann::json& j, const PaperRecord& r) {
  j = nlohmann::json{{"canonical_id", r.canonical_id},
                     {"title", r.title},
                     {"authors", r.authors},
                     {"source_provider", provider_name(r.source_provider)},
                     {"fetched_at", r.fetched_at}};
  put_optional(j, "arxiv_id", r.arxiv_id);
  put_optional(j, "doi", r.doi);
  put_optional(j, "openalex_id", r.openalex_id);
  put_optional(j, "s2_id", r.s2_id);
  put_optional(j, "abstract", r.abstract);
  put_optional(j, "full_text", r.full_text);
  put_optional(j, "references", r.references);
}

void from_json(const nlohmann::json& j, PaperRecord& r) {
  r.canonical_id = j.at("canonical_id").get<std::string>();
  r.title = j.value("title", std::string{});
  r.authors = j.value("authors", std::vector<AuthorRef>{});
  r.source_provider = provider_from_name(j.value("source_provider", std::string{"manual"}));
  r.fetched_at = j.value("fetched_at", std::int64_t{0});
  get_optional(j, "arxiv_id", r.arxiv_id);
  get_optional(j, "doi", r.doi);
  get_optional(j, "openalex_id", r.openalex_id);
  get_optional(j, "s2_id", r.s2_id);
  get_optional(j, "abstract", r.abstract);
  get_optional(j, "full_text", r.full_text);
  get_optional(j, "references", r.references);
}

nlohmann::json ranked_entry_to_json(const RankedList& list, size_t index) {
  const ScoredCandidate& e = list.entries.at(index);
  return nlohmann::json{{"query_id", list.query_id},
                        {"method", method_name(list.method)},
                        {"rank", e.rank},
                        {"score", e.score},
                        {"paper", e.paper}};
}

RankedList ranked_list_from_lines(const std::vector<nlohmann::json>& lines) {
  RankedList list;
  for (const nlohmann::json& j : lines) {
    if (list.entries.empty()) {
      list.query_id = j.at("query_id").get<std::string>();
      list.method = method_from_name(j.at("method").get<std::string>());
    } else if (j.at("query_id").get<std::string>() != list.query_id) {
      throw Error(ErrorCode::MalformedPayload, "mixed query ids in ranked list file");
    }
    ScoredCandidate c;
    c.rank = j.at("rank").get<int>();
    c.score = j.at("score").get<double>();
    c.paper = j.at("paper").get<PaperRecord>();
    c.method = list.method;
    list.entries.push_back(std::move(c));
  }
  validate_ranked_list(list);
  return list;
}

}  // namespace paperscout
