// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace paperscout {

// Identifier normalization rules shared by every provider client.
//
// arXiv ids are lowercased and version-stripped ("2301.10140v2" ->
// "2301.10140"); URL and "arXiv:" prefixes are removed. DOIs are lowercased
// with any "https://doi.org/" prefix removed. OpenAlex ids keep only the
// trailing key ("https://openalex.org/W42" -> "W42", uppercased first letter).

std::string normalize_arxiv_id(std::string_view raw);
std::string normalize_doi(std::string_view raw);
std::string normalize_openalex_id(std::string_view raw);

/// arXiv DataCite DOIs carry the prefix "10.48550/arxiv."; the remainder is
/// the arXiv id. Returns nullopt for any other DOI.
std::optional<std::string> arxiv_id_from_doi(std::string_view doi);

/// Inverse of the prefix rule: "2301.10140" -> "10.48550/arxiv.2301.10140".
std::string doi_from_arxiv_id(std::string_view arxiv_id);

/// Case-, whitespace- and punctuation-insensitive form used for title-hash
/// identities. ASCII letters are lowercased, punctuation becomes spaces,
/// whitespace runs collapse.
std::string normalize_title(std::string_view title);

/// "title:" + first 16 hex chars of SHA-256 over the normalized title.
std::string title_hash_id(std::string_view title);

}  // namespace paperscout
