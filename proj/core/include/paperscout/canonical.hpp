// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "paperscout/types.hpp"

namespace paperscout {

/// Normalizes one raw provider payload into a PaperRecord.
///
/// Accepted shapes per provider:
///  - arxiv:    Atom entry reduced to JSON by the arXiv client
///              {id, title, summary, authors:[{name}], doi?}
///  - openalex: a Work object (id, doi, display_name/title,
///              abstract_inverted_index, authorships, referenced_works)
///  - s2:       a Graph API paper (paperId, externalIds, title, abstract,
///              authors)
///  - manual:   this library's own PaperRecord JSON field names
///
/// canonical_id precedence: arxiv_id > doi > openalex_id > s2_id > hash of
/// the normalized title. An arXiv id is back-filled from a DataCite DOI with
/// the "10.48550/arxiv." prefix. Throws Error(MissingIdentity) when every
/// identifier and the title are absent.
PaperRecord canonicalize(const nlohmann::json& payload, Provider provider,
                         std::int64_t fetched_at = 0);

/// Computes the canonical id for already-normalized identifier fields.
std::string canonical_id_for(const std::optional<std::string>& arxiv_id,
                             const std::optional<std::string>& doi,
                             const std::optional<std::string>& openalex_id,
                             const std::optional<std::string>& s2_id,
                             const std::string& title);

/// Merges duplicates: one record per canonical_id, first-seen order.
/// Field-wise merge prefers non-empty over empty; when both sides are
/// non-empty and disagree the record with the newer fetched_at wins.
std::vector<PaperRecord> dedupe(const std::vector<PaperRecord>& pool);

/// Reassembles an OpenAlex abstract_inverted_index into plain text.
std::string abstract_from_inverted_index(const nlohmann::json& inverted);

}  // namespace paperscout
