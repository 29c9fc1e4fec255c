// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <filesystem>
#include <string>

namespace paperscout {

/// The four prompt templates the pipeline uses: keyword-query generation,
/// debate ranking, the embedding query instruction, and the relevance
/// judge. Placeholders use {name} syntax; see each template for its keys.
///
/// Compiled-in defaults are the canonical text; a prompts directory with
/// matching file names overrides them (the shipped prompts/ directory holds
/// byte-identical copies, asserted by tests).
struct PromptLibrary {
  std::string keyword_system;
  std::string keyword_user;  // {paper_text}
  std::string debate_system;
  std::string debate_user;  // {query_full}, {reference_papers}
  std::string embed_query_instruction;  // {query_paper}
  std::string judge_system;
  std::string judge_user;  // {query_title}, {query_abstract}, {query_full},
                           // {candidate_title}, {candidate_abstract}

  static PromptLibrary defaults();

  /// Defaults overlaid with any of keyword_system.txt, keyword_user.txt,
  /// debate_system.txt, debate_user.txt, embed_query_instruction.txt,
  /// judge_system.txt, judge_user.txt found under dir.
  static PromptLibrary load(const std::filesystem::path& dir);

  /// Writes all seven template files into dir.
  void save(const std::filesystem::path& dir) const;

  /// Content hash over all templates (cache key component).
  std::string digest() const;
};

}  // namespace paperscout
