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

#include "lexidyn/store.hpp"

#include <algorithm>
#include <numeric>

#include "lexidyn/error.hpp"
#include "lexidyn/utf8.hpp"

namespace lexidyn {

bool FrequencyStore::has_year(int year) const noexcept {
  return std::binary_search(years_.begin(), years_.end(), year);
}

std::size_t FrequencyStore::year_index(int year) const {
  auto it = std::lower_bound(years_.begin(), years_.end(), year);
  if (it == years_.end() || *it != year) throw YearAbsent(year);
  return static_cast<std::size_t>(it - years_.begin());
}

Count FrequencyStore::total(int year) const { return totals_[year_index(year)]; }

YearSlice FrequencyStore::slice(int year) const {
  const auto i = year_index(year);
  const auto first = year_offsets_[i];
  const auto n = year_offsets_[i + 1] - first;
  return YearSlice{year, totals_[i], std::span(year_tokens_).subspan(first, n),
                   std::span(year_counts_).subspan(first, n)};
}

std::optional<TokenId> FrequencyStore::find(std::string_view token) const noexcept {
  auto it = std::lower_bound(words_.begin(), words_.end(), token,
                             [](const WordEntry& w, std::string_view t) { return w.token < t; });
  if (it == words_.end() || it->token != token) return std::nullopt;
  return static_cast<TokenId>(it - words_.begin());
}

std::span<const Posting> FrequencyStore::postings(TokenId id) const {
  const auto first = posting_offsets_.at(id);
  return std::span(postings_).subspan(first, posting_offsets_[id + 1] - first);
}

Count FrequencyStore::count(TokenId id, int year) const noexcept {
  if (id >= words_.size()) return 0;
  const auto p = postings(id);
  auto it = std::lower_bound(p.begin(), p.end(), year,
                             [](const Posting& q, int y) { return q.year < y; });
  return (it != p.end() && it->year == year) ? it->count : 0;
}

bool operator==(const FrequencyStore& a, const FrequencyStore& b) {
  // the per-year view is derived from the postings
  return a.range_ == b.range_ && a.provenance_ == b.provenance_ && a.words_ == b.words_ &&
         a.posting_offsets_ == b.posting_offsets_ && a.postings_ == b.postings_ &&
         a.years_ == b.years_;
}

StoreBuilder::StoreBuilder(YearRange range, std::string provenance)
    : range_(range), provenance_(std::move(provenance)) {
  if (range_.max < range_.min) throw InvalidConfig("year range is empty");
  year_seen_.assign(static_cast<std::size_t>(range_.max - range_.min + 1), false);
}

std::uint32_t StoreBuilder::intern(std::string_view token) {
  if (auto it = index_.find(token); it != index_.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(tokens_.size());
  tokens_.emplace_back(token);
  postings_.emplace_back();
  index_.emplace(tokens_.back(), id);
  return id;
}

void StoreBuilder::mark_year(int year) {
  if (!range_.contains(year)) {
    throw InvalidConfig("year " + std::to_string(year) + " outside builder range");
  }
  year_seen_[static_cast<std::size_t>(year - range_.min)] = true;
}

void StoreBuilder::add(std::uint32_t local_id, int year, Count count) {
  mark_year(year);
  auto& list = postings_.at(local_id);
  // corpus exports are sorted by token then year, so appending is the common case
  if (list.empty() || list.back().year < year) {
    list.push_back({year, count});
    return;
  }
  if (list.back().year == year) {
    list.back().count += count;
    return;
  }
  auto it = std::lower_bound(list.begin(), list.end(), year,
                             [](const Posting& p, int y) { return p.year < y; });
  if (it != list.end() && it->year == year) {
    it->count += count;
  } else {
    list.insert(it, {year, count});
  }
}

FrequencyStore StoreBuilder::seal() && {
  FrequencyStore s;
  s.range_ = range_;
  s.provenance_ = std::move(provenance_);

  for (std::size_t i = 0; i < year_seen_.size(); ++i) {
    if (year_seen_[i]) s.years_.push_back(range_.min + static_cast<int>(i));
  }

  std::vector<std::uint32_t> order(tokens_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return tokens_[a] < tokens_[b]; });

  std::vector<std::size_t> per_year(s.years_.size(), 0);
  for (auto local : order) {
    auto& list = postings_[local];
    std::erase_if(list, [](const Posting& p) { return p.count == 0; });
    if (list.empty()) continue;
    const auto length = static_cast<int>(utf8::scalar_count(tokens_[local]));
    s.words_.push_back({std::move(tokens_[local]), length});
    for (const auto& p : list) {
      s.postings_.push_back(p);
      auto yi = std::lower_bound(s.years_.begin(), s.years_.end(), p.year) - s.years_.begin();
      ++per_year[static_cast<std::size_t>(yi)];
    }
    s.posting_offsets_.push_back(s.postings_.size());
    list = {};
  }

  s.year_offsets_.assign(s.years_.size() + 1, 0);
  for (std::size_t i = 0; i < per_year.size(); ++i) {
    s.year_offsets_[i + 1] = s.year_offsets_[i] + per_year[i];
  }
  s.year_tokens_.resize(s.postings_.size());
  s.year_counts_.resize(s.postings_.size());
  s.totals_.assign(s.years_.size(), 0);
  std::vector<std::size_t> cursor(s.year_offsets_.begin(), s.year_offsets_.end() - 1);
  for (TokenId id = 0; id < s.words_.size(); ++id) {
    for (auto i = s.posting_offsets_[id]; i < s.posting_offsets_[id + 1]; ++i) {
      const auto& p = s.postings_[i];
      auto yi = static_cast<std::size_t>(
          std::lower_bound(s.years_.begin(), s.years_.end(), p.year) - s.years_.begin());
      s.year_tokens_[cursor[yi]] = id;
      s.year_counts_[cursor[yi]] = p.count;
      ++cursor[yi];
      s.totals_[yi] += p.count;
    }
  }

  index_.clear();
  tokens_.clear();
  postings_.clear();
  return s;
}

double frequency(const FrequencyStore& store, std::string_view token, int year) {
  const Count total = store.total(year);
  if (total == 0) return 0.0;
  auto id = store.find(token);
  if (!id) return 0.0;
  return static_cast<double>(store.count(*id, year)) / static_cast<double>(total);
}

FrequencyStore merge(std::vector<FrequencyStore> stores) {
  if (stores.empty()) return {};
  if (stores.size() == 1) return std::move(stores.front());

  YearRange range = stores.front().year_range();
  for (const auto& s : stores) {
    if (s.provenance() != stores.front().provenance()) {
      throw ProvenanceMismatch("cannot merge stores built with '" + stores.front().provenance() +
                               "' and '" + s.provenance() + "'");
    }
    range.min = std::min(range.min, s.year_range().min);
    range.max = std::max(range.max, s.year_range().max);
  }

  StoreBuilder builder(range, stores.front().provenance());
  for (auto& s : stores) {
    for (int year : s.years()) builder.mark_year(year);
    for (TokenId id = 0; id < s.token_count(); ++id) {
      const auto local = builder.intern(s.word(id).token);
      for (const auto& p : s.postings(id)) builder.add(local, p.year, p.count);
    }
    s = {};
  }
  return std::move(builder).seal();
}

}  // namespace lexidyn
