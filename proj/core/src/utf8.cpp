// Copyright 2026 The lexidyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexidyn/utf8.hpp"

#include <algorithm>
#include <array>

namespace lexidyn::utf8 {

std::optional<char32_t> decode(std::string_view text, std::size_t& pos) noexcept {
  if (pos >= text.size()) return std::nullopt;
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }

  std::size_t extra;
  char32_t cp;
  char32_t min;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3, cp = lead & 0x07, min = 0x10000;
  } else {
    return std::nullopt;
  }
  if (text.size() - pos <= extra) return std::nullopt;

  for (std::size_t i = 1; i <= extra; ++i) {
    const auto c = static_cast<unsigned char>(text[pos + i]);
    if ((c & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
  pos += extra + 1;
  return cp;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(char32_t cp) {
  std::string out;
  append(out, cp);
  return out;
}

bool valid(std::string_view text) noexcept {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (static_cast<unsigned char>(text[pos]) < 0x80) {
      ++pos;
      continue;
    }
    if (!decode(text, pos)) return false;
  }
  return true;
}

std::size_t scalar_count(std::string_view text) noexcept {
  // continuation bytes do not start a scalar
  return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

}  // namespace lexidyn::utf8

namespace lexidyn::unicode {
namespace {

struct Range {
  char32_t first;
  char32_t last;
  Script script;
};

// Letter code points (general category L*) of the supported scripts.
constexpr std::array kLetterRanges{
    Range{0x0041, 0x005A, Script::kLatin},
    Range{0x0061, 0x007A, Script::kLatin},
    Range{0x00AA, 0x00AA, Script::kLatin},
    Range{0x00BA, 0x00BA, Script::kLatin},
    Range{0x00C0, 0x00D6, Script::kLatin},
    Range{0x00D8, 0x00F6, Script::kLatin},
    Range{0x00F8, 0x024F, Script::kLatin},
    Range{0x0250, 0x02AF, Script::kLatin},
    Range{0x0370, 0x0373, Script::kGreek},
    Range{0x0376, 0x0377, Script::kGreek},
    Range{0x037B, 0x037D, Script::kGreek},
    Range{0x037F, 0x037F, Script::kGreek},
    Range{0x0386, 0x0386, Script::kGreek},
    Range{0x0388, 0x038A, Script::kGreek},
    Range{0x038C, 0x038C, Script::kGreek},
    Range{0x038E, 0x03A1, Script::kGreek},
    Range{0x03A3, 0x03F5, Script::kGreek},
    Range{0x03F7, 0x03FF, Script::kGreek},
    Range{0x0400, 0x0481, Script::kCyrillic},
    Range{0x048A, 0x052F, Script::kCyrillic},
    Range{0x1C80, 0x1C88, Script::kCyrillic},
    Range{0x1D00, 0x1D25, Script::kLatin},
    Range{0x1E00, 0x1EFF, Script::kLatin},
    Range{0x1F00, 0x1F15, Script::kGreek},
    Range{0x1F18, 0x1F1D, Script::kGreek},
    Range{0x1F20, 0x1F45, Script::kGreek},
    Range{0x1F48, 0x1F4D, Script::kGreek},
    Range{0x1F50, 0x1F57, Script::kGreek},
    Range{0x1F59, 0x1F59, Script::kGreek},
    Range{0x1F5B, 0x1F5B, Script::kGreek},
    Range{0x1F5D, 0x1F5D, Script::kGreek},
    Range{0x1F5F, 0x1F7D, Script::kGreek},
    Range{0x1F80, 0x1FB4, Script::kGreek},
    Range{0x1FB6, 0x1FBC, Script::kGreek},
    Range{0x1FBE, 0x1FBE, Script::kGreek},
    Range{0x1FC2, 0x1FC4, Script::kGreek},
    Range{0x1FC6, 0x1FCC, Script::kGreek},
    Range{0x1FD0, 0x1FD3, Script::kGreek},
    Range{0x1FD6, 0x1FDB, Script::kGreek},
    Range{0x1FE0, 0x1FEC, Script::kGreek},
    Range{0x1FF2, 0x1FF4, Script::kGreek},
    Range{0x1FF6, 0x1FFC, Script::kGreek},
    Range{0x2C60, 0x2C7F, Script::kLatin},
    Range{0xA640, 0xA66E, Script::kCyrillic},
    Range{0xA680, 0xA69D, Script::kCyrillic},
    Range{0xA722, 0xA787, Script::kLatin},
    Range{0xA78B, 0xA7CA, Script::kLatin},
    Range{0xFB00, 0xFB06, Script::kLatin},
    Range{0xFF21, 0xFF3A, Script::kLatin},
    Range{0xFF41, 0xFF5A, Script::kLatin},
};

static_assert(std::is_sorted(kLetterRanges.begin(), kLetterRanges.end(),
                             [](const Range& a, const Range& b) { return a.last < b.first; }));

}  // namespace

std::optional<Script> letter_script(char32_t cp) noexcept {
  if (cp < 0x80) {
    if ((cp | 0x20) >= 'a' && (cp | 0x20) <= 'z') return Script::kLatin;
    return std::nullopt;
  }
  auto it = std::lower_bound(kLetterRanges.begin(), kLetterRanges.end(), cp,
                             [](const Range& r, char32_t c) { return r.last < c; });
  if (it == kLetterRanges.end() || cp < it->first) return std::nullopt;
  return it->script;
}

char32_t to_lower(char32_t cp) noexcept {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A: mostly even upper / odd lower pairs
  if (cp >= 0x0100 && cp <= 0x017F) {
    if (cp == 0x0130) return U'i';
    if (cp == 0x0178) return 0x00FF;
    if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E))
      return (cp & 1) ? cp + 1 : cp;
    if (cp == 0x0138 || cp == 0x0149 || cp == 0x017F) return cp;
    return (cp & 1) ? cp : cp + 1;
  }
  // Greek
  if (cp == 0x0386) return 0x03AC;
  if (cp >= 0x0388 && cp <= 0x038A) return cp + 0x25;
  if (cp == 0x038C) return 0x03CC;
  if (cp == 0x038E || cp == 0x038F) return cp + 0x3F;
  if (cp >= 0x0391 && cp <= 0x03AB && cp != 0x03A2) return cp + 0x20;
  // Cyrillic
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if ((cp >= 0x0460 && cp <= 0x0481) || (cp >= 0x048A && cp <= 0x04BF) ||
      (cp >= 0x04D0 && cp <= 0x052F))
    return (cp & 1) ? cp : cp + 1;
  if (cp == 0x04C0) return 0x04CF;
  if (cp >= 0x04C1 && cp <= 0x04CE) return (cp & 1) ? cp + 1 : cp;
  return cp;
}

std::optional<Script> parse_script(std::string_view name) noexcept {
  if (name == "latin") return Script::kLatin;
  if (name == "cyrillic") return Script::kCyrillic;
  if (name == "greek") return Script::kGreek;
  return std::nullopt;
}

std::string_view script_name(Script s) noexcept {
  switch (s) {
    case Script::kLatin:
      return "latin";
    case Script::kCyrillic:
      return "cyrillic";
    case Script::kGreek:
      return "greek";
  }
  return "unknown";
}

}  // namespace lexidyn::unicode
