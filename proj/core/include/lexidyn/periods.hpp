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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexidyn/metrics.hpp"
#include "lexidyn/store.hpp"

namespace lexidyn {

struct PeriodSpec {
  int start = 0;  // inclusive
  int end = 0;    // inclusive

  std::string label() const { return std::to_string(start) + "-" + std::to_string(end); }
  friend bool operator==(const PeriodSpec&, const PeriodSpec&) = default;
};

enum class Sign { kIncrease, kDecrease, kBoth };
enum class Metric { kLinear, kExact };

std::string_view to_string(Sign s) noexcept;
std::string_view to_string(Metric m) noexcept;

struct TopKRow {
  int rank = 0;
  std::string token;
  double dl_linear = 0.0;
  double dl_exact = 0.0;
};

struct TopKTable {
  PeriodSpec period;
  int k = 0;
  Sign sign = Sign::kIncrease;
  std::string class_filter;
  Metric metric = Metric::kLinear;
  std::vector<TopKRow> rows;
};

struct PresenceMatrix {
  std::vector<PeriodSpec> periods;
  std::vector<std::string> tokens;
  std::vector<std::vector<bool>> present;  // [token][period]
};

struct TokenSeries {
  std::string token;
  std::vector<SeriesPoint> points;
};

inline constexpr int kDefaultPeriodStep = 25;

/// Consecutive periods [b_i, b_{i+1}]. With no breakpoints the boundaries are
/// year_min, year_min + 25, ... and finally year_max. Throws
/// InvalidBreakpoints unless the breakpoints are strictly increasing, inside
/// [year_min, year_max] and at least two.
std::vector<PeriodSpec> segment(int year_min, int year_max, std::span<const int> breakpoints = {});

/// Ranks the words of the whole vocabulary by their contribution over the
/// period, keeping those accepted by `class_filter` whose chosen metric has
/// the requested sign (nonzero for kBoth). Rows are ordered by |metric|
/// descending, ties by token. Fewer than k rows are returned when fewer
/// words qualify.
TopKTable top_contributors(const FrequencyStore& store, const PeriodSpec& period, int k, Sign sign,
                           const WordFilter& class_filter, Metric metric = Metric::kLinear,
                           int w = 0);

/// Token x period grid of table membership. Tables must share k, sign,
/// class filter and metric, and their periods must follow one another.
PresenceMatrix presence_matrix(std::span<const TopKTable> tables);

/// Relative frequency of each token per year, smoothed with window w.
std::vector<TokenSeries> word_set_series(const FrequencyStore& store,
                                         std::span<const std::string> tokens,
                                         std::span<const int> years, int w);

}  // namespace lexidyn
