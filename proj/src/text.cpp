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

#include "resumerank/text.hpp"

#include <cctype>

namespace resumerank::text {

bool is_token_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '+' || c == '#' || c >= 0x80;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string normalize_entry(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string title_case(std::string_view s) {
  std::string out(s);
  bool word_start = true;
  for (char& c : out) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      word_start = true;
    } else if (std::isalpha(uc)) {
      c = static_cast<char>(word_start ? std::toupper(uc) : std::tolower(uc));
      word_start = false;
    } else {
      word_start = false;
    }
  }
  return out;
}

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t nl = s.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? s.substr(start) : s.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  // A trailing newline does not produce a phantom empty line.
  if (!lines.empty() && lines.back().empty() && !s.empty() && s.back() == '\n') {
    lines.pop_back();
  }
  return lines;
}

std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t off) { return static_cast<unsigned char>(s[off]); };
  const auto is_cont = [&](std::size_t off) {
    return off < s.size() && (byte(off) & 0xC0) == 0x80;
  };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  if ((b0 >> 5) == 0x6 && is_cont(i + 1)) {
    const std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
    i += 2;
    return cp;
  }
  if ((b0 >> 4) == 0xE && is_cont(i + 1) && is_cont(i + 2)) {
    const std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x0F) << 12) |
                             (static_cast<std::uint32_t>(byte(i + 1) & 0x3F) << 6) |
                             (byte(i + 2) & 0x3F);
    i += 3;
    return cp;
  }
  if ((b0 >> 3) == 0x1E && is_cont(i + 1) && is_cont(i + 2) && is_cont(i + 3)) {
    const std::uint32_t cp = (static_cast<std::uint32_t>(b0 & 0x07) << 18) |
                             (static_cast<std::uint32_t>(byte(i + 1) & 0x3F) << 12) |
                             (static_cast<std::uint32_t>(byte(i + 2) & 0x3F) << 6) |
                             (byte(i + 3) & 0x3F);
    i += 4;
    return cp;
  }
  i += 1;  // invalid sequence: treat the byte as an opaque character
  return b0;
}

bool is_unicode_space(std::uint32_t cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::size_t find_whole_word(std::string_view haystack_lower, std::string_view needle,
                            std::size_t from) {
  if (needle.empty()) return std::string_view::npos;
  std::size_t pos = from;
  while ((pos = haystack_lower.find(needle, pos)) != std::string_view::npos) {
    const std::size_t end = pos + needle.size();
    const bool left_ok = pos == 0 || !is_token_char(haystack_lower[pos - 1]) ||
                         !is_token_char(needle.front());
    const bool right_ok = end == haystack_lower.size() || !is_token_char(haystack_lower[end]) ||
                          !is_token_char(needle.back());
    if (left_ok && right_ok) return pos;
    ++pos;
  }
  return std::string_view::npos;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

}  // namespace resumerank::text
