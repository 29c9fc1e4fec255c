// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/canonical.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "paperscout/errors.hpp"
#include "paperscout/ids.hpp"
#include "paperscout/util.hpp"

namespace paperscout {

namespace {

std::optional<std::string> nonempty(std::string value) {
  if (value.empty()) return std::nullopt;
  return value;
}

std::string json_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return {};
  const nlohmann::json& v = j.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void finalize(PaperRecord& r) {
  // Back-fill the arXiv id from a DataCite DOI.
  if (!r.arxiv_id && r.doi) {
    if (auto backfilled = arxiv_id_from_doi(*r.doi)) r.arxiv_id = *backfilled;
  }
  r.canonical_id = canonical_id_for(r.arxiv_id, r.doi, r.openalex_id, r.s2_id, r.title);
  // Authors with empty names violate the AuthorRef invariant; drop them.
  std::erase_if(r.authors, [](const AuthorRef& a) { return a.display_name.empty(); });
  if (r.references) {
    std::vector<std::string> refs;
    std::unordered_set<std::string> seen;
    for (const std::string& id : *r.references) {
      if (id.empty() || id == r.canonical_id) continue;
      if (seen.insert(id).second) refs.push_back(id);
    }
    r.references = std::move(refs);
  }
}

PaperRecord from_arxiv(const nlohmann::json& payload) {
  PaperRecord r;
  r.source_provider = Provider::arxiv;
  r.arxiv_id = nonempty(normalize_arxiv_id(json_string(payload, "id")));
  std::string doi = json_string(payload, "doi");
  if (!doi.empty()) r.doi = normalize_doi(doi);
  r.title = collapse_whitespace(json_string(payload, "title"));
  r.abstract = nonempty(trim(json_string(payload, "summary")));
  if (payload.contains("authors")) {
    for (const nlohmann::json& a : payload.at("authors")) {
      r.authors.push_back({std::nullopt, collapse_whitespace(json_string(a, "name"))});
    }
  }
  return r;
}

PaperRecord from_openalex(const nlohmann::json& payload) {
  PaperRecord r;
  r.source_provider = Provider::openalex;
  r.openalex_id = nonempty(normalize_openalex_id(json_string(payload, "id")));
  std::string doi = json_string(payload, "doi");
  if (!doi.empty()) r.doi = normalize_doi(doi);
  std::string title = json_string(payload, "title");
  if (title.empty()) title = json_string(payload, "display_name");
  r.title = collapse_whitespace(title);
  if (payload.contains("abstract_inverted_index") &&
      payload.at("abstract_inverted_index").is_object()) {
    r.abstract = nonempty(abstract_from_inverted_index(payload.at("abstract_inverted_index")));
  } else if (payload.contains("abstract")) {
    r.abstract = nonempty(trim(json_string(payload, "abstract")));
  }
  if (payload.contains("authorships")) {
    for (const nlohmann::json& s : payload.at("authorships")) {
      if (!s.contains("author")) continue;
      const nlohmann::json& a = s.at("author");
      AuthorRef ref;
      ref.display_name = collapse_whitespace(json_string(a, "display_name"));
      std::string author_id = normalize_openalex_id(json_string(a, "id"));
      if (!author_id.empty()) ref.openalex_author_id = author_id;
      r.authors.push_back(std::move(ref));
    }
  }
  if (payload.contains("referenced_works") && payload.at("referenced_works").is_array()) {
    std::vector<std::string> refs;
    for (const nlohmann::json& w : payload.at("referenced_works")) {
      std::string id = normalize_openalex_id(w.get<std::string>());
      if (!id.empty()) refs.push_back("openalex:" + id);
    }
    r.references = std::move(refs);
  }
  return r;
}

PaperRecord from_s2(const nlohmann::json& payload) {
  PaperRecord r;
  r.source_provider = Provider::s2;
  r.s2_id = nonempty(json_string(payload, "paperId"));
  if (payload.contains("externalIds") && payload.at("externalIds").is_object()) {
    const nlohmann::json& ext = payload.at("externalIds");
    std::string arxiv = json_string(ext, "ArXiv");
    if (!arxiv.empty()) r.arxiv_id = normalize_arxiv_id(arxiv);
    std::string doi = json_string(ext, "DOI");
    if (!doi.empty()) r.doi = normalize_doi(doi);
  }
  r.title = collapse_whitespace(json_string(payload, "title"));
  r.abstract = nonempty(trim(json_string(payload, "abstract")));
  if (payload.contains("authors")) {
    for (const nlohmann::json& a : payload.at("authors")) {
      r.authors.push_back({std::nullopt, collapse_whitespace(json_string(a, "name"))});
    }
  }
  return r;
}

PaperRecord from_manual(const nlohmann::json& payload) {
  PaperRecord r;
  r.source_provider = Provider::manual;
  std::string arxiv = json_string(payload, "arxiv_id");
  if (!arxiv.empty()) r.arxiv_id = normalize_arxiv_id(arxiv);
  std::string doi = json_string(payload, "doi");
  if (!doi.empty()) r.doi = normalize_doi(doi);
  std::string openalex = json_string(payload, "openalex_id");
  if (!openalex.empty()) r.openalex_id = normalize_openalex_id(openalex);
  r.s2_id = nonempty(json_string(payload, "s2_id"));
  r.title = collapse_whitespace(json_string(payload, "title"));
  r.abstract = nonempty(trim(json_string(payload, "abstract")));
  r.full_text = nonempty(json_string(payload, "full_text"));
  if (payload.contains("authors")) {
    for (const nlohmann::json& a : payload.at("authors")) {
      AuthorRef ref;
      ref.display_name = collapse_whitespace(json_string(a, "display_name"));
      std::string author_id = json_string(a, "openalex_author_id");
      if (!author_id.empty()) ref.openalex_author_id = normalize_openalex_id(author_id);
      r.authors.push_back(std::move(ref));
    }
  }
  if (payload.contains("references") && payload.at("references").is_array()) {
    r.references = payload.at("references").get<std::vector<std::string>>();
  }
  return r;
}

}  // namespace

std::string canonical_id_for(const std::optional<std::string>& arxiv_id,
                             const std::optional<std::string>& doi,
                             const std::optional<std::string>& openalex_id,
                             const std::optional<std::string>& s2_id,
                             const std::string& title) {
  if (arxiv_id && !arxiv_id->empty()) return "arxiv:" + *arxiv_id;
  if (doi && !doi->empty()) return "doi:" + *doi;
  if (openalex_id && !openalex_id->empty()) return "openalex:" + *openalex_id;
  if (s2_id && !s2_id->empty()) return "s2:" + *s2_id;
  if (!title.empty()) return title_hash_id(title);
  throw Error(ErrorCode::MissingIdentity, "payload has no identifier and no title");
}

PaperRecord canonicalize(const nlohmann::json& payload, Provider provider,
                         std::int64_t fetched_at) {
  PaperRecord r;
  switch (provider) {
    case Provider::arxiv: r = from_arxiv(payload); break;
    case Provider::openalex: r = from_openalex(payload); break;
    case Provider::s2: r = from_s2(payload); break;
    case Provider::manual: r = from_manual(payload); break;
  }
  r.fetched_at = fetched_at;
  finalize(r);
  return r;
}

std::string abstract_from_inverted_index(const nlohmann::json& inverted) {
  std::map<int, std::string> positions;
  for (const auto& [word, locs] : inverted.items()) {
    for (const nlohmann::json& pos : locs) {
      positions[pos.get<int>()] = word;
    }
  }
  std::string text;
  for (const auto& [pos, word] : positions) {
    if (!text.empty()) text.push_back(' ');
    text += word;
  }
  return text;
}

namespace {

template <typename T>
bool field_empty(const std::optional<T>& v) {
  if (!v.has_value()) return true;
  if constexpr (std::is_same_v<T, std::string>) return v->empty();
  if constexpr (std::is_same_v<T, std::vector<std::string>>) return v->empty();
  return false;
}

/// prefer non-empty over empty; on a non-empty conflict the newer record wins.
template <typename T>
void merge_field(std::optional<T>& dst, const std::optional<T>& src, bool src_newer) {
  if (field_empty(dst)) {
    if (!field_empty(src)) dst = src;
  } else if (!field_empty(src) && src_newer && *dst != *src) {
    dst = src;
  }
}

void merge_into(PaperRecord& dst, const PaperRecord& src) {
  bool src_newer = src.fetched_at > dst.fetched_at;
  merge_field(dst.arxiv_id, src.arxiv_id, src_newer);
  merge_field(dst.doi, src.doi, src_newer);
  merge_field(dst.openalex_id, src.openalex_id, src_newer);
  merge_field(dst.s2_id, src.s2_id, src_newer);
  merge_field(dst.abstract, src.abstract, src_newer);
  merge_field(dst.full_text, src.full_text, src_newer);
  merge_field(dst.references, src.references, src_newer);
  if (dst.title.empty()) {
    dst.title = src.title;
  } else if (!src.title.empty() && src_newer) {
    dst.title = src.title;
  }
  if (dst.authors.empty()) {
    dst.authors = src.authors;
  } else if (!src.authors.empty() && src_newer) {
    dst.authors = src.authors;
  }
  if (src_newer) dst.source_provider = src.source_provider;
  dst.fetched_at = std::max(dst.fetched_at, src.fetched_at);
}

}  // namespace

std::vector<PaperRecord> dedupe(const std::vector<PaperRecord>& pool) {
  std::vector<PaperRecord> out;
  std::unordered_map<std::string, size_t> index;
  out.reserve(pool.size());
  for (const PaperRecord& r : pool) {
    auto [it, inserted] = index.emplace(r.canonical_id, out.size());
    if (inserted) {
      out.push_back(r);
    } else {
      merge_into(out[it->second], r);
    }
  }
  return out;
}

}  // namespace paperscout
