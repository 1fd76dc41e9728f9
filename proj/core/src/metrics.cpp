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

#include "lexidyn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lexidyn/error.hpp"
#include "lexidyn/parallel.hpp"

namespace lexidyn {
namespace {

struct FilteredSums {
  Count tokens = 0;
  Count letters = 0;
};

FilteredSums filtered_sums(const FrequencyStore& store, const YearSlice& slice,
                           const WordFilter& filter) {
  FilteredSums s;
  for (std::size_t i = 0; i < slice.size(); ++i) {
    const auto& w = store.word(slice.tokens[i]);
    if (!filter(w)) continue;
    s.tokens += slice.counts[i];
    s.letters += slice.counts[i] * w.length;
  }
  return s;
}

// Sparse distribution ordered by token id.
struct Distribution {
  std::vector<TokenId> ids;
  std::vector<double> p;
  double mean_length = 0.0;
};

Distribution endpoint(const FrequencyStore& store, int t, int w, const WordFilter& filter) {
  if (!store.has_year(t)) throw YearAbsent(t);

  std::vector<double> dense(store.token_count(), 0.0);
  std::vector<TokenId> touched;
  std::vector<std::pair<YearSlice, Count>> used;
  for (int y : store.years()) {
    if (y < t - w || y > t + w) continue;
    const auto slice = store.slice(y);
    const auto sums = filtered_sums(store, slice, filter);
    if (sums.tokens > 0) used.emplace_back(slice, sums.tokens);
  }
  if (used.empty()) {
    throw EmptySelection("filter '" + filter.id() + "' selects no words around year " +
                         std::to_string(t));
  }

  Distribution d;
  const double n = static_cast<double>(used.size());
  for (const auto& [slice, total] : used) {
    Count letters = 0;
    for (std::size_t i = 0; i < slice.size(); ++i) {
      const auto id = slice.tokens[i];
      const auto& word = store.word(id);
      if (!filter(word)) continue;
      if (dense[id] == 0.0) touched.push_back(id);
      dense[id] += static_cast<double>(slice.counts[i]) / static_cast<double>(total) / n;
      letters += slice.counts[i] * word.length;
    }
    d.mean_length += static_cast<double>(letters) / static_cast<double>(total) / n;
  }

  std::sort(touched.begin(), touched.end());
  d.ids = std::move(touched);
  d.p.reserve(d.ids.size());
  for (auto id : d.ids) d.p.push_back(dense[id]);
  if (used.size() == 1) {
    d.mean_length = average_word_length(store, used.front().first.year, filter);
  }
  return d;
}

ContributionRecord make_record(const WordEntry& w, double p1, double p2, double L) {
  ContributionRecord r;
  r.token = w.token;
  r.length = w.length;
  r.p_start = p1;
  r.p_end = p2;
  r.delta_p = p2 - p1;
  r.baseline_L = L;
  r.dl_linear = contribution_linear(r.delta_p, w.length, L);
  r.dl_exact = p1 < 1.0 ? contribution_exact(p1, r.delta_p, w.length, L)
                        : std::numeric_limits<double>::quiet_NaN();
  return r;
}

}  // namespace

WordFilter WordFilter::all() { return WordFilter("all", nullptr); }

double ContributionRecord::mean_excluding() const {
  if (!(p_start < 1.0)) throw DegenerateDistribution("no other words at interval start");
  return (baseline_L - p_start * length) / (1.0 - p_start);
}

double average_word_length(const FrequencyStore& store, int year, const WordFilter& filter) {
  const auto slice = store.slice(year);
  const auto sums = filtered_sums(store, slice, filter);
  if (sums.tokens == 0) {
    throw EmptySelection("filter '" + filter.id() + "' selects no words in year " +
                         std::to_string(year));
  }
  return static_cast<double>(sums.letters) / static_cast<double>(sums.tokens);
}

std::vector<double> smooth_centered(std::span<const int> years, std::span<const double> raw,
                                    int w) {
  std::vector<double> out(raw.begin(), raw.end());
  if (w <= 0) return out;
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    while (years[lo] < years[i] - w) ++lo;
    while (hi < raw.size() && years[hi] <= years[i] + w) ++hi;
    // offset by the centre value so constant stretches come out exact
    const double ref = raw[i];
    double dev = 0.0;
    for (std::size_t j = lo; j < hi; ++j) dev += raw[j] - ref;
    out[i] = ref + dev / static_cast<double>(hi - lo);
  }
  return out;
}

LengthSeries length_series(const FrequencyStore& store, std::span<const int> years, int w,
                           const WordFilter& filter, unsigned threads) {
  for (int y : years) {
    if (!store.has_year(y)) throw YearAbsent(y);
  }
  std::vector<double> raw(years.size());
  parallel_for(years.size(), threads,
               [&](std::size_t i) { raw[i] = average_word_length(store, years[i], filter); });

  const auto smoothed = smooth_centered(years, raw, w);
  LengthSeries s;
  s.window = w;
  s.filter_id = filter.id();
  s.points.reserve(years.size());
  for (std::size_t i = 0; i < years.size(); ++i) s.points.push_back({years[i], smoothed[i]});
  return s;
}

double contribution_exact(double p_k, double delta_p, int l_k, double L) {
  if (!(p_k < 1.0)) throw DegenerateDistribution("contribution_exact requires p_k < 1");
  return delta_p / (1.0 - p_k) * (l_k - L);
}

double contribution_linear(double delta_p, int l_k, double L) noexcept {
  return delta_p * (l_k - L);
}

std::vector<ContributionRecord> interval_contributions(const FrequencyStore& store, int t1,
                                                       int t2, const WordFilter& filter,
                                                       int w) {
  if (!(t1 < t2)) {
    throw EmptySelection("interval " + std::to_string(t1) + ":" + std::to_string(t2) +
                         " must have start < end");
  }
  const auto start = endpoint(store, t1, w, filter);
  const auto end = endpoint(store, t2, w, filter);
  const double L = start.mean_length;

  std::vector<ContributionRecord> out;
  out.reserve(std::max(start.ids.size(), end.ids.size()));
  std::size_t i = 0, j = 0;
  while (i < start.ids.size() || j < end.ids.size()) {
    const auto a = i < start.ids.size() ? start.ids[i] : std::numeric_limits<TokenId>::max();
    const auto b = j < end.ids.size() ? end.ids[j] : std::numeric_limits<TokenId>::max();
    if (a == b) {
      out.push_back(make_record(store.word(a), start.p[i++], end.p[j++], L));
    } else if (a < b) {
      out.push_back(make_record(store.word(a), start.p[i++], 0.0, L));
    } else {
      out.push_back(make_record(store.word(b), 0.0, end.p[j++], L));
    }
  }
  return out;
}

LengthBandSummary band_contributions(std::span<const ContributionRecord> records,
                                     bool normalize) {
  if (records.empty()) throw EmptySelection("no contribution records to group");
  LengthBandSummary summary;
  for (const auto& r : records) summary.bands[r.length].contribution += r.dl_linear;
  if (normalize) {
    double total = 0.0;
    for (const auto& [len, band] : summary.bands) total += std::abs(band.contribution);
    for (auto& [len, band] : summary.bands) {
      band.share = total > 0.0 ? std::abs(band.contribution) / total : 0.0;
    }
  }
  return summary;
}

std::optional<LinearFit> least_squares(std::span<const double> x, std::span<const double> y) {
  const auto n = x.size();
  if (n < 2 || y.size() != n) return std::nullopt;
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= static_cast<double>(n);
  ym /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  if (sxx == 0.0) return std::nullopt;
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  return fit;
}

VocabSeries vocabulary_series(const FrequencyStore& store, std::span<const int> years,
                              double min_rel_freq, unsigned threads) {
  for (int y : years) {
    if (!store.has_year(y)) throw YearAbsent(y);
  }
  VocabSeries s;
  s.threshold = min_rel_freq;
  s.points.resize(years.size());
  parallel_for(years.size(), threads, [&](std::size_t i) {
    const auto slice = store.slice(years[i]);
    std::size_t n = 0;
    if (slice.total > 0) {
      const auto total = static_cast<double>(slice.total);
      for (auto c : slice.counts) {
        if (static_cast<double>(c) / total >= min_rel_freq) ++n;
      }
    }
    s.points[i] = {years[i], n};
  });

  std::vector<double> x, y;
  for (const auto& p : s.points) {
    x.push_back(p.year);
    y.push_back(static_cast<double>(p.count));
  }
  s.fit = least_squares(x, y);
  return s;
}

}  // namespace lexidyn
