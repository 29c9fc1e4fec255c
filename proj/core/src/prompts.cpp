// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#include "paperscout/prompts.hpp"

#include <fstream>
#include <sstream>

#include "paperscout/errors.hpp"
#include "paperscout/sha256.hpp"

namespace paperscout {

namespace {

constexpr const char* kResearchAssistantSystem =
    "You are a helpful research assistant who is helping with literature review "
    "of a research idea.";

constexpr const char* kKeywordUser =
    R"(You are a helpful research assistant assisting with a literature review for a research idea. You will be given the abstract of a scientific paper. Your goal is to generate a diverse set of mutually exclusive search queries to help find relevant and citable academic papers using scholarly search engines.

Here is the abstract: {paper_text}

Instructions.
- Generate 10 search queries written in the natural, concise style typically used by researchers using academic search engines (e.g., OpenAlex, Semantic Scholar, or Google Scholar).
- Each query should reflect a different angle of the abstract (e.g., method, task, dataset, domain, application, or novelty).
- Use a variety of keywords and phrasings to maximize diversity and avoid redundancy.
- Focus on maximizing recall (retrieving a broad but relevant set of papers), not just precision.
- Avoid stopwords or overly verbose phrasing; use terms that researchers would actually search for.
- Return a JSON object with the following structure:

{
  "queries": [
    "first query here",
    "second query here"
  ]
}
)";

constexpr const char* kDebateUser =
    R"(You are a helpful research assistant. Your task is to rank some papers based on their relevance to a query paper.

Given the query paper:
<query_paper>
{query_full}
</query_paper>

And the following candidate reference paper abstracts:
<candidate_paper_abstracts>
{reference_papers}
</candidate_paper_abstracts>

Instructions.
- For EVERY candidate paper, provide a relevance score between 0 and 100 representing the probability that the query paper would cite it.
- The relevance score MUST be an integer between 0 and 100 (inclusive).
- The score MUST be written using digits only (e.g., 0, 17, 42, 50, 100).
- Do NOT write numbers in words (e.g., "thirty-seven" or "fifty").
- If a candidate paper happens to be a duplicate of the query paper, it should receive a score of 0.
- Provide arguments for and against citing the candidate paper, extracting supporting sentences from the candidate's abstract.
- Format your response for EACH paper using the specified tags below.

Response format for each paper:
<arguments_for>
[paper's id]: [Arguments for including the paper]
Extracted Sentences: "Sentence 1", "Sentence 2", ...
</arguments_for>
<arguments_against>
[paper's id]: [Arguments for not including the paper]
Extracted Sentences: "Sentence 1", "Sentence 2", ...
</arguments_against>
<probability>
paper_id: [paper's id]
score: [Final Probability Score Based on the Arguments]/100
</probability>

Note: your response MUST contain arguments and probabilities for ALL the candidate paper abstracts.
)";

constexpr const char* kEmbedQueryInstruction =
    R"(Instruct: You are a helpful research assistant. Your task is to retrieve the candidates that are highly likely to be cited by the query paper below.
Query:
{query_paper})";

constexpr const char* kJudgeSystem =
    "You are an expert academic research assistant. You will be shown a query "
    "paper and a candidate paper and your task is to analyze the semantic "
    "relevance of the query paper and the candidate paper. Assess how relevant "
    "the candidate paper is to the subject matter, research scope, and focus of "
    "the query paper. Consider topical overlap, methodological similarity, "
    "shared objectives, and whether the candidate contributes meaningfully to "
    "the themes of the query paper.";

constexpr const char* kJudgeUser =
    R"(You are an expert academic research assistant.

Input.
Query Paper Details:
Title: {query_title}
Abstract: {query_abstract}
Full Paper: {query_full}

Candidate Paper:
Title: {candidate_title}
Abstract: {candidate_abstract}

Instructions. Analyze the semantic relevance of the query paper and the candidate paper. Assess how relevant the candidate paper is to the subject matter, research scope, and focus of the query paper.

Task rubric.
- 5 (Direct Correspondence): Candidate directly addresses the same research problem as the query paper.
- 4 (Primary Topical Focus): Candidate's central theme is closely related to the query paper.
- 3 (Substantial Topical Coverage): Candidate covers significant aspects of the query paper's domain.
- 2 (Peripheral Topical Treatment): Candidate addresses the query paper's subject as a secondary element.
- 1 (Tangential Relevance): Minimal substantive overlap.
- 0 (No Substantive Relevance): Candidate is from a different domain or research area.

Output format.
{
 "paper_to_paper_relevance": {
  "relevanceScore": 0,
  "confidenceLevel": 0,
  "summaryStatement": "..."
 }
}
)";

struct TemplateFile {
  const char* name;
  std::string PromptLibrary::* field;
};

const TemplateFile kFiles[] = {
    {"keyword_system.txt", &PromptLibrary::keyword_system},
    {"keyword_user.txt", &PromptLibrary::keyword_user},
    {"debate_system.txt", &PromptLibrary::debate_system},
    {"debate_user.txt", &PromptLibrary::debate_user},
    {"embed_query_instruction.txt", &PromptLibrary::embed_query_instruction},
    {"judge_system.txt", &PromptLibrary::judge_system},
    {"judge_user.txt", &PromptLibrary::judge_user},
};

}  // namespace

PromptLibrary PromptLibrary::defaults() {
  PromptLibrary lib;
  lib.keyword_system = kResearchAssistantSystem;
  lib.keyword_user = kKeywordUser;
  lib.debate_system = kResearchAssistantSystem;
  lib.debate_user = kDebateUser;
  lib.embed_query_instruction = kEmbedQueryInstruction;
  lib.judge_system = kJudgeSystem;
  lib.judge_user = kJudgeUser;
  return lib;
}

PromptLibrary PromptLibrary::load(const std::filesystem::path& dir) {
  PromptLibrary lib = defaults();
  for (const TemplateFile& f : kFiles) {
    std::ifstream in(dir / f.name, std::ios::binary);
    if (!in) continue;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    lib.*(f.field) = buffer.str();
  }
  return lib;
}

void PromptLibrary::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  for (const TemplateFile& f : kFiles) {
    std::ofstream out(dir / f.name, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::ConfigError, "cannot write " + (dir / f.name).string());
    }
    out << this->*(f.field);
  }
}

std::string PromptLibrary::digest() const {
  std::string all;
  for (const TemplateFile& f : kFiles) {
    all += this->*(f.field);
    all.push_back('\0');
  }
  return sha256_hex(all);
}

}  // namespace paperscout
