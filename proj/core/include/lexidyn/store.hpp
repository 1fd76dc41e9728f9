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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexidyn {

using TokenId = std::uint32_t;
using Count = std::int64_t;

/// An interned, normalized word form and its length in letters.
struct WordEntry {
  std::string token;
  int length = 0;

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

struct Posting {
  std::int32_t year = 0;
  Count count = 0;

  friend bool operator==(const Posting&, const Posting&) = default;
};

struct YearRange {
  int min = 1800;
  int max = 2008;

  bool contains(int year) const noexcept { return year >= min && year <= max; }
  friend bool operator==(const YearRange&, const YearRange&) = default;
};

/// One year's counts, as a view into the store. Entries are ordered by token id.
struct YearSlice {
  int year = 0;
  Count total = 0;
  std::span<const TokenId> tokens;
  std::span<const Count> counts;

  std::size_t size() const noexcept { return tokens.size(); }
};

/// Immutable multi-year table of word counts.
///
/// Tokens are kept in lexicographic (byte) order, so token ids and every
/// iteration order derived from them are deterministic. All stored counts are
/// strictly positive. A year can be present with a zero total (every line
/// for it was rejected); years never seen are absent, and queries on them
/// throw YearAbsent.
class FrequencyStore {
 public:
  FrequencyStore() = default;

  YearRange year_range() const noexcept { return range_; }
  const std::string& provenance() const noexcept { return provenance_; }

  std::span<const int> years() const noexcept { return years_; }
  bool has_year(int year) const noexcept;
  Count total(int year) const;
  YearSlice slice(int year) const;

  std::size_t token_count() const noexcept { return words_.size(); }
  std::span<const WordEntry> words() const noexcept { return words_; }
  const WordEntry& word(TokenId id) const { return words_.at(id); }
  std::optional<TokenId> find(std::string_view token) const noexcept;

  /// Postings of one token, in increasing year order.
  std::span<const Posting> postings(TokenId id) const;
  Count count(TokenId id, int year) const noexcept;

  bool empty() const noexcept { return words_.empty() && years_.empty(); }

  friend bool operator==(const FrequencyStore& a, const FrequencyStore& b);

 private:
  friend class StoreBuilder;

  std::size_t year_index(int year) const;

  YearRange range_;
  std::string provenance_;

  std::vector<WordEntry> words_;
  std::vector<std::size_t> posting_offsets_{0};  // words_.size() + 1
  std::vector<Posting> postings_;

  std::vector<int> years_;
  std::vector<Count> totals_;
  std::vector<std::size_t> year_offsets_{0};  // years_.size() + 1
  std::vector<TokenId> year_tokens_;
  std::vector<Count> year_counts_;
};

/// Mutable accumulator that produces a sealed FrequencyStore.
class StoreBuilder {
 public:
  StoreBuilder(YearRange range, std::string provenance);

  /// Returns the builder-local id of `token`, interning it if needed.
  /// `token` must already be normalized and a valid word.
  std::uint32_t intern(std::string_view token);

  /// Adds `count` occurrences; also marks `year` present.
  void add(std::uint32_t local_id, int year, Count count);
  void add(std::string_view token, int year, Count count) { add(intern(token), year, count); }

  /// Marks a year present even if it has no accepted tokens.
  void mark_year(int year);

  const YearRange& year_range() const noexcept { return range_; }
  const std::string& provenance() const noexcept { return provenance_; }

  FrequencyStore seal() &&;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  YearRange range_;
  std::string provenance_;
  std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> index_;
  std::vector<std::string> tokens_;
  std::vector<std::vector<Posting>> postings_;
  std::vector<bool> year_seen_;
};

/// Relative frequency of `token` in `year`: count / total. Zero for absent
/// tokens and for present years with a zero total.
double frequency(const FrequencyStore& store, std::string_view token, int year);

/// Sums counts per (token, year). All stores must carry the same provenance.
/// The result's year range spans all inputs. merge({}) is the empty store.
FrequencyStore merge(std::vector<FrequencyStore> stores);

/// Binary cache ("LXDN" format, little-endian, CRC-32 trailer).
inline constexpr std::uint32_t kCacheFormatVersion = 1;

std::string encode_cache(const FrequencyStore& store);
FrequencyStore decode_cache(std::string_view bytes);
void save_cache(const FrequencyStore& store, const std::filesystem::path& path);
FrequencyStore load_cache(const std::filesystem::path& path);

}  // namespace lexidyn
