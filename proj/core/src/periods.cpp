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

#include "lexidyn/periods.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lexidyn/error.hpp"

namespace lexidyn {

std::string_view to_string(Sign s) noexcept {
  switch (s) {
    case Sign::kIncrease:
      return "increase";
    case Sign::kDecrease:
      return "decrease";
    case Sign::kBoth:
      return "both";
  }
  return "?";
}

std::string_view to_string(Metric m) noexcept {
  return m == Metric::kLinear ? "linear" : "exact";
}

std::vector<PeriodSpec> segment(int year_min, int year_max, std::span<const int> breakpoints) {
  std::vector<int> bounds(breakpoints.begin(), breakpoints.end());
  if (bounds.empty()) {
    if (year_max <= year_min) throw InvalidBreakpoints("year range must span at least two years");
    for (int y = year_min; y < year_max; y += kDefaultPeriodStep) bounds.push_back(y);
    bounds.push_back(year_max);
  }
  if (bounds.size() < 2) throw InvalidBreakpoints("need at least two breakpoints");
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] < year_min || bounds[i] > year_max) {
      throw InvalidBreakpoints("breakpoint " + std::to_string(bounds[i]) + " outside " +
                               std::to_string(year_min) + "-" + std::to_string(year_max));
    }
    if (i > 0 && bounds[i] <= bounds[i - 1]) {
      throw InvalidBreakpoints("breakpoints must be strictly increasing");
    }
  }
  std::vector<PeriodSpec> out;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) out.push_back({bounds[i], bounds[i + 1]});
  return out;
}

TopKTable top_contributors(const FrequencyStore& store, const PeriodSpec& period, int k, Sign sign,
                           const WordFilter& class_filter, Metric metric, int w) {
  if (k < 1) throw EmptySelection("k must be at least 1");
  const auto records = interval_contributions(store, period.start, period.end, WordFilter::all(), w);

  const auto value = [metric](const ContributionRecord& r) {
    return metric == Metric::kLinear ? r.dl_linear : r.dl_exact;
  };
  std::vector<const ContributionRecord*> picked;
  for (const auto& r : records) {
    const double v = value(r);
    if (std::isnan(v) || !class_filter(r.token, r.length)) continue;
    if ((sign == Sign::kIncrease && v > 0) || (sign == Sign::kDecrease && v < 0) ||
        (sign == Sign::kBoth && v != 0)) {
      picked.push_back(&r);
    }
  }
  const auto n = std::min<std::size_t>(picked.size(), static_cast<std::size_t>(k));
  std::partial_sort(picked.begin(), picked.begin() + static_cast<std::ptrdiff_t>(n), picked.end(),
                    [&](const ContributionRecord* a, const ContributionRecord* b) {
                      const double va = std::abs(value(*a));
                      const double vb = std::abs(value(*b));
                      if (va != vb) return va > vb;
                      return a->token < b->token;
                    });

  TopKTable table{period, k, sign, class_filter.id(), metric, {}};
  for (std::size_t i = 0; i < n; ++i) {
    table.rows.push_back(
        {static_cast<int>(i + 1), picked[i]->token, picked[i]->dl_linear, picked[i]->dl_exact});
  }
  return table;
}

PresenceMatrix presence_matrix(std::span<const TopKTable> tables) {
  PresenceMatrix m;
  if (tables.empty()) return m;
  const auto& ref = tables.front();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto& t = tables[i];
    if (t.k != ref.k || t.sign != ref.sign || t.class_filter != ref.class_filter ||
        t.metric != ref.metric) {
      throw SettingsMismatch("table for " + t.period.label() + " uses different settings");
    }
    if (i > 0 && t.period.start < tables[i - 1].period.end) {
      throw SettingsMismatch("periods " + tables[i - 1].period.label() + " and " +
                             t.period.label() + " overlap or are out of order");
    }
    m.periods.push_back(t.period);
  }

  // token -> first period index
  std::map<std::string, std::size_t> first_seen;
  for (std::size_t p = 0; p < tables.size(); ++p) {
    for (const auto& row : tables[p].rows) first_seen.try_emplace(row.token, p);
  }
  std::vector<std::pair<std::size_t, std::string>> order;
  for (const auto& [token, p] : first_seen) order.emplace_back(p, token);
  std::sort(order.begin(), order.end());

  std::map<std::string, std::size_t> row_of;
  for (auto& [p, token] : order) {
    row_of[token] = m.tokens.size();
    m.tokens.push_back(token);
  }
  m.present.assign(m.tokens.size(), std::vector<bool>(tables.size(), false));
  for (std::size_t p = 0; p < tables.size(); ++p) {
    for (const auto& row : tables[p].rows) m.present[row_of[row.token]][p] = true;
  }
  return m;
}

std::vector<TokenSeries> word_set_series(const FrequencyStore& store,
                                         std::span<const std::string> tokens,
                                         std::span<const int> years, int w) {
  for (int y : years) {
    if (!store.has_year(y)) throw YearAbsent(y);
  }
  std::vector<TokenSeries> out;
  out.reserve(tokens.size());
  std::vector<double> raw(years.size());
  for (const auto& token : tokens) {
    for (std::size_t i = 0; i < years.size(); ++i) raw[i] = frequency(store, token, years[i]);
    const auto smoothed = smooth_centered(years, raw, w);
    TokenSeries s{token, {}};
    for (std::size_t i = 0; i < years.size(); ++i) s.points.push_back({years[i], smoothed[i]});
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lexidyn
