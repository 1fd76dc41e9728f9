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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace lexidyn::utf8 {

/// Decodes one scalar value starting at `pos` and advances `pos` past it.
/// Returns nullopt on any ill-formed sequence (overlong forms, surrogates,
/// values above U+10FFFF, truncation); `pos` is then unspecified.
std::optional<char32_t> decode(std::string_view text, std::size_t& pos) noexcept;

void append(std::string& out, char32_t cp);

std::string encode(char32_t cp);

bool valid(std::string_view text) noexcept;

/// Number of Unicode scalar values. `text` must be valid UTF-8.
std::size_t scalar_count(std::string_view text) noexcept;

}  // namespace lexidyn::utf8

namespace lexidyn::unicode {

enum class Script { kLatin, kCyrillic, kGreek };

/// Script of `cp` if it is a letter in one of the supported scripts.
std::optional<Script> letter_script(char32_t cp) noexcept;

/// Simple (one-to-one) lowercase mapping for Latin, Greek and Cyrillic.
/// Code points outside those blocks are returned unchanged.
char32_t to_lower(char32_t cp) noexcept;

std::optional<Script> parse_script(std::string_view name) noexcept;
std::string_view script_name(Script s) noexcept;

inline constexpr char32_t kApostrophe = U'\'';
inline constexpr char32_t kRightSingleQuote = U'’';

}  // namespace lexidyn::unicode
