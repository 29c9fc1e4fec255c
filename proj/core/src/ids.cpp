// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/ids.hpp"

#include <cctype>

#include "paperscout/sha256.hpp"
#include "paperscout/util.hpp"

namespace paperscout {

namespace {

std::string_view strip_prefix_ci(std::string_view text, std::string_view prefix) {
  if (text.size() < prefix.size()) return text;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return text;
    }
  }
  return text.substr(prefix.size());
}

}  // namespace

std::string normalize_arxiv_id(std::string_view raw) {
  std::string_view id = raw;
  id = strip_prefix_ci(id, "https://arxiv.org/abs/");
  id = strip_prefix_ci(id, "http://arxiv.org/abs/");
  id = strip_prefix_ci(id, "arxiv:");
  std::string out = to_lower(trim(id));
  // Strip a trailing version suffix: "2301.10140v2" -> "2301.10140".
  size_t v = out.rfind('v');
  if (v != std::string::npos && v > 0 && v + 1 < out.size()) {
    bool digits = true;
    for (size_t i = v + 1; i < out.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(out[i]))) {
        digits = false;
        break;
      }
    }
    if (digits) out.erase(v);
  }
  return out;
}

std::string normalize_doi(std::string_view raw) {
  std::string_view doi = raw;
  doi = strip_prefix_ci(doi, "https://doi.org/");
  doi = strip_prefix_ci(doi, "http://doi.org/");
  doi = strip_prefix_ci(doi, "doi:");
  return to_lower(trim(doi));
}

std::string normalize_openalex_id(std::string_view raw) {
  std::string_view id = raw;
  id = strip_prefix_ci(id, "https://openalex.org/");
  id = strip_prefix_ci(id, "http://openalex.org/");
  id = strip_prefix_ci(id, "openalex:");
  std::string out = trim(id);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::optional<std::string> arxiv_id_from_doi(std::string_view doi) {
  static constexpr std::string_view kPrefix = "10.48550/arxiv.";
  std::string normalized = normalize_doi(doi);
  if (normalized.size() <= kPrefix.size()) return std::nullopt;
  if (std::string_view(normalized).substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  return normalize_arxiv_id(std::string_view(normalized).substr(kPrefix.size()));
}

std::string doi_from_arxiv_id(std::string_view arxiv_id) {
  return "10.48550/arxiv." + normalize_arxiv_id(arxiv_id);
}

std::string normalize_title(std::string_view title) {
  std::string mapped;
  mapped.reserve(title.size());
  for (unsigned char c : title) {
    if (std::isalnum(c)) {
      mapped.push_back(static_cast<char>(std::tolower(c)));
    } else if (c < 0x80) {
      mapped.push_back(' ');  // ASCII punctuation and whitespace
    } else {
      mapped.push_back(static_cast<char>(c));  // keep UTF-8 bytes as-is
    }
  }
  return collapse_whitespace(mapped);
}

std::string title_hash_id(std::string_view title) {
  return "title:" + sha256_hex(normalize_title(title)).substr(0, 16);
}

}  // namespace paperscout
