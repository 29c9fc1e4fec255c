// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "paperscout/errors.hpp"

namespace paperscout {

// Line-delimited JSON is the interchange format at every stage boundary:
// one object per line, UTF-8, no trailing commas. Writers emit compact
// single-line dumps (nlohmann sorts keys, so output is deterministic).

inline std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::MissingArtifacts, "cannot open " + path.string());
  }
  std::vector<nlohmann::json> lines;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      lines.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::MalformedPayload,
                  path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return lines;
}

inline void write_jsonl(const std::filesystem::path& path,
                        const std::vector<nlohmann::json>& lines) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::UpstreamError, "cannot write " + path.string());
  }
  for (const nlohmann::json& j : lines) {
    out << j.dump() << '\n';
  }
}

template <typename T>
std::vector<T> read_jsonl_as(const std::filesystem::path& path) {
  std::vector<T> out;
  for (const nlohmann::json& j : read_jsonl(path)) {
    out.push_back(j.get<T>());
  }
  return out;
}

template <typename T>
void write_jsonl_as(const std::filesystem::path& path, const std::vector<T>& items) {
  std::vector<nlohmann::json> lines;
  lines.reserve(items.size());
  for (const T& item : items) lines.push_back(nlohmann::json(item));
  write_jsonl(path, lines);
}

}  // namespace paperscout
