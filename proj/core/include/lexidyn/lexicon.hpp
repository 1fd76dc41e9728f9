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

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexidyn/ingest.hpp"
#include "lexidyn/metrics.hpp"

namespace lexidyn {

inline constexpr std::string_view kFunctionClass = "function";
inline constexpr std::string_view kContentClass = "content";
inline constexpr std::string_view kPronounClass = "pronoun-personal";

struct WordClassList {
  std::string language;
  std::string label;  // function, content, pronoun-personal or custom:<name>
  std::set<std::string, std::less<>> members;
  std::filesystem::path source;

  bool contains(std::string_view token) const { return members.contains(token); }
};

/// Reads a list file: UTF-8, one token per line, "#" comments and blank lines
/// ignored. The label comes from the file stem (function, content,
/// pronoun-personal, anything else becomes custom:<stem>), the language from
/// the parent directory name. Tokens are normalized like corpus tokens;
/// entries that are not words under `filter` are dropped.
/// Throws IoFailure, or EmptyList when no member remains.
WordClassList load_list(const std::filesystem::path& path,
                        const NormalizationRuleset& rules = {},
                        const TokenFilterConfig& filter = {});

/// Ordered set of class lists; the first list containing a token wins.
/// Personal-pronoun lists are moved ahead of function lists; otherwise the
/// given order is kept. Tokens in no list are content words.
class Classifier {
 public:
  Classifier() = default;
  explicit Classifier(std::vector<WordClassList> lists);

  std::string_view classify(std::string_view token) const;
  std::span<const WordClassList> lists() const noexcept { return lists_; }

  /// Loads every *.txt list under <dir>/<language>/ in file-name order.
  static Classifier load_language(const std::filesystem::path& lists_dir,
                                  std::string_view language,
                                  const NormalizationRuleset& rules = {},
                                  const TokenFilterConfig& filter = {});

 private:
  std::vector<WordClassList> lists_;
};

/// (short, long): short accepts length <= cutoff, long the rest.
std::pair<WordFilter, WordFilter> split_by_length(int cutoff);

/// Filter for a class name. "function" also accepts personal pronouns,
/// which are function words with their own finer label; "all" accepts
/// every word.
WordFilter class_filter(const Classifier& classifier, std::string_view class_name);

}  // namespace lexidyn
