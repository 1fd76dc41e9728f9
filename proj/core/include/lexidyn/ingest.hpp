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

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lexidyn/store.hpp"
#include "lexidyn/utf8.hpp"

namespace lexidyn {

struct RawNgramRecord {
  std::string token;
  int year = 0;
  Count match_count = 0;
  Count volume_count = 0;

  friend bool operator==(const RawNgramRecord&, const RawNgramRecord&) = default;
};

/// Non-owning parse result used on the hot path; `token` views the line.
struct RawNgramView {
  std::string_view token;
  int year = 0;
  Count match_count = 0;
  Count volume_count = 0;
};

/// Parses `token TAB year TAB match_count [TAB volume_count]`. A trailing CR
/// is ignored. Returns nullopt for anything else, including negative counts
/// and a token that is empty or not valid UTF-8.
std::optional<RawNgramView> try_parse_ngram_line(std::string_view line) noexcept;

/// Throwing variant; MalformedLine on failure.
RawNgramRecord parse_ngram_line(std::string_view line);

/// Parses a totals line: tab-separated `year,match_count,page_count,volume_count`
/// entries. Returns (year, match_count) pairs.
std::vector<std::pair<int, Count>> parse_totals_line(std::string_view line);

struct TokenFilterConfig {
  std::set<unicode::Script> allowed_scripts{unicode::Script::kLatin};
  bool allow_apostrophe = true;
  bool case_fold = false;
  std::vector<std::string> reject_substrings{"_"};

  /// Stable textual identity, recorded as store provenance.
  std::string id() const;

  /// Throws InvalidConfig if no script is enabled.
  void validate() const;

  static TokenFilterConfig for_language(std::string_view lang);
};

/// true iff every scalar is a letter of an allowed script or (when allowed)
/// an apostrophe, at least one letter is present, and no reject substring
/// occurs. Invalid UTF-8 is never a word.
bool is_word(std::string_view token, const TokenFilterConfig& config) noexcept;

/// Length in Unicode scalar values; apostrophes count.
int word_length(std::string_view token) noexcept;

struct StripFinal {
  char32_t letter;
  friend bool operator==(const StripFinal&, const StripFinal&) = default;
};

struct MapChar {
  char32_t from;
  char32_t to;
  friend bool operator==(const MapChar&, const MapChar&) = default;
};

using NormalizationRule = std::variant<StripFinal, MapChar>;

/// Ordered orthographic rewrite rules.
///
/// map_char rules rewrite every occurrence, in listed order; strip_final
/// rules then run once at the end, removing the trailing run of any of their
/// letters. Construction rejects rulesets whose map targets are also map
/// sources, which keeps application idempotent.
class NormalizationRuleset {
 public:
  NormalizationRuleset() : id_("empty") {}
  NormalizationRuleset(std::string id, std::vector<NormalizationRule> rules);

  const std::string& id() const noexcept { return id_; }
  std::span<const NormalizationRule> rules() const noexcept { return rules_; }
  bool empty() const noexcept { return rules_.empty(); }

  /// Ruleset file: "#" comments, `id <name>`, `strip_final <c>`, `map_char <from> <to>`.
  static NormalizationRuleset parse(std::string_view text);
  static NormalizationRuleset load(const std::filesystem::path& path);

 private:
  std::string id_;
  std::vector<NormalizationRule> rules_;
  std::vector<char32_t> strip_;
};

std::string normalize_token(std::string_view token, const NormalizationRuleset& rules);

/// Full token pipeline used by ingestion: word check, typographic apostrophe
/// to U+0027, optional case folding, ruleset, word check again. Returns the
/// stored form, or nullopt if the token is rejected.
std::optional<std::string> canonical_token(std::string_view raw, const TokenFilterConfig& filter,
                                           const NormalizationRuleset& rules);

struct IngestStats {
  std::uint64_t lines_read = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;      // well-formed, in range, not a word
  std::uint64_t out_of_range = 0;  // well-formed, year outside the range
  std::uint64_t malformed = 0;

  IngestStats& operator+=(const IngestStats& o) noexcept;
  friend bool operator==(const IngestStats&, const IngestStats&) = default;
};

struct IngestOptions {
  TokenFilterConfig filter;
  NormalizationRuleset rules;
  YearRange years;
  std::string language = "en";

  /// Provenance string stored with every store built from these options.
  std::string provenance() const;
};

/// Single-shard ingestion state: feed lines, then seal.
class Ingestor {
 public:
  explicit Ingestor(IngestOptions options);

  void add_line(std::string_view line);
  const IngestStats& stats() const noexcept { return stats_; }
  FrequencyStore seal() &&;

 private:
  std::optional<std::uint32_t> resolve(std::string_view raw);

  IngestOptions options_;
  StoreBuilder builder_;
  IngestStats stats_;
  std::string scratch_;
  std::string last_raw_;
  std::optional<std::uint32_t> last_id_;
  bool has_last_ = false;
};

struct IngestResult {
  FrequencyStore store;
  IngestStats stats;
};

IngestResult ingest_stream(std::span<const std::string> lines, const IngestOptions& options);
IngestResult ingest_stream(std::istream& in, const IngestOptions& options);

/// Reads one file ("-" is standard input); gzip is detected by magic bytes.
IngestResult ingest_file(const std::filesystem::path& path, const IngestOptions& options);

/// One shard per file, up to `threads` at a time, merged deterministically.
IngestResult ingest_files(std::span<const std::filesystem::path> paths,
                          const IngestOptions& options, unsigned threads);

}  // namespace lexidyn
