// Copyright 2026 The Resumerank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESUMERANK_TEXT_HPP_
#define RESUMERANK_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace resumerank::text {

// Characters that belong to a token run: ASCII alphanumerics, '+', '#', and
// every non-ASCII byte. Everything else is a word boundary.
bool is_token_char(unsigned char c);

// ASCII-only lowercasing; multi-byte UTF-8 sequences pass through untouched.
std::string to_lower(std::string_view s);

std::string trim(std::string_view s);

// Lowercase, trim, and collapse internal whitespace runs to single spaces.
// Canonical form for gazetteer entries and gold annotation values.
std::string normalize_entry(std::string_view s);

// "new york" -> "New York". Display form for matched gazetteer entries.
std::string title_case(std::string_view s);

// Splits on '\n', dropping a trailing '\r' on each line.
std::vector<std::string> split_lines(std::string_view s);

// Decodes one UTF-8 code point at `i` and advances `i`. Invalid bytes are
// returned as-is with width 1.
std::uint32_t decode_utf8(std::string_view s, std::size_t& i);

bool is_unicode_space(std::uint32_t cp);

// Finds `needle` inside `haystack_lower` (both lowercase) such that the match
// does not sit inside a longer token run: "java" never hits "javascript".
// Returns std::string_view::npos when there is no such occurrence.
std::size_t find_whole_word(std::string_view haystack_lower, std::string_view needle,
                            std::size_t from = 0);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace resumerank::text

#endif  // RESUMERANK_TEXT_HPP_
