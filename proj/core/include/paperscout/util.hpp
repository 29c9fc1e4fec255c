// Copyright 2026 The paperscout Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace paperscout {

std::string to_lower(std::string_view text);
std::string trim(std::string_view text);

/// Collapses every run of whitespace (including newlines) to one space and
/// trims the ends.
std::string collapse_whitespace(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

std::string replace_all(std::string text, std::string_view needle,
                        std::string_view replacement);

/// Substitutes `{key}` placeholders; unknown braces are left untouched so
/// literal JSON in templates survives.
std::string substitute_placeholders(
    std::string text, const std::map<std::string, std::string>& values);

/// RFC 3986 percent-encoding; unreserved characters (ALPHA / DIGIT / "-" /
/// "." / "_" / "~") pass through, everything else including space becomes
/// %XX on the UTF-8 bytes.
std::string url_encode(std::string_view text);
std::string url_decode(std::string_view text);

/// Runs fn(i) for i in [0, n) on up to max_concurrency worker threads.
/// The first exception thrown by any item is rethrown after all workers join.
void parallel_for(std::size_t n, std::size_t max_concurrency,
                  const std::function<void(std::size_t)>& fn);

}  // namespace paperscout
