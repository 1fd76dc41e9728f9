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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexidyn/store.hpp"

namespace lexidyn {

/// A named predicate over word forms. Filtered statistics renormalize
/// frequencies over the words the predicate accepts.
class WordFilter {
 public:
  using Predicate = std::function<bool(std::string_view token, int length)>;

  WordFilter(std::string id, Predicate predicate)
      : id_(std::move(id)), predicate_(std::move(predicate)) {}

  static WordFilter all();

  bool operator()(std::string_view token, int length) const {
    return !predicate_ || predicate_(token, length);
  }
  bool operator()(const WordEntry& w) const { return (*this)(w.token, w.length); }

  const std::string& id() const noexcept { return id_; }
  bool accepts_everything() const noexcept { return !predicate_; }

 private:
  std::string id_;
  Predicate predicate_;
};

struct SeriesPoint {
  int year = 0;
  double value = 0.0;

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

struct LengthSeries {
  std::vector<SeriesPoint> points;
  int window = 0;
  std::string filter_id;
};

struct ContributionRecord {
  std::string token;
  int length = 0;
  double p_start = 0.0;
  double p_end = 0.0;
  double delta_p = 0.0;
  double baseline_L = 0.0;
  double dl_linear = 0.0;
  /// NaN when p_start == 1 (the word is the whole distribution).
  double dl_exact = 0.0;

  /// Mean length of every other word at the interval start.
  double mean_excluding() const;
};

struct LengthBand {
  double contribution = 0.0;
  std::optional<double> share;
};

struct LengthBandSummary {
  std::map<int, LengthBand> bands;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;

  double at(double x) const noexcept { return intercept + slope * x; }
};

struct VocabPoint {
  int year = 0;
  std::size_t count = 0;
};

struct VocabSeries {
  std::vector<VocabPoint> points;
  double threshold = 0.0;
  std::optional<LinearFit> fit;  // absent with fewer than two years
};

inline constexpr double kDefaultVocabThreshold = 1e-9;

/// Frequency-weighted mean word length over the words accepted by `filter`.
/// Throws YearAbsent, or EmptySelection when the filtered total is zero.
double average_word_length(const FrequencyStore& store, int year, const WordFilter& filter);

/// Centered moving average: each output is the mean of the raw values whose
/// years fall within [year - w, year + w]. `years` must be increasing.
std::vector<double> smooth_centered(std::span<const int> years, std::span<const double> raw,
                                    int w);

/// Per-year average length, optionally smoothed. Years are evaluated in
/// parallel when `threads` > 1; the result does not depend on it.
LengthSeries length_series(const FrequencyStore& store, std::span<const int> years, int w,
                           const WordFilter& filter, unsigned threads = 1);

/// Change in mean length when one word's frequency moves by `delta_p` and
/// every other word rescales proportionally.
double contribution_exact(double p_k, double delta_p, int l_k, double L);

/// First-order form of contribution_exact for p_k << 1.
double contribution_linear(double delta_p, int l_k, double L) noexcept;

/// Per-word decomposition of the change of mean length between two years,
/// one record per word of either year's filtered vocabulary, ordered by
/// token. With w > 0 each endpoint distribution is the mean of the filtered
/// distributions over [t - w, t + w]. The baseline is the start mean length.
std::vector<ContributionRecord> interval_contributions(const FrequencyStore& store, int t1,
                                                       int t2, const WordFilter& filter,
                                                       int w = 0);

/// Groups dl_linear by word length. With `normalize`, each band's share is
/// |sum| / sum over bands of |sum| (all shares 0 when every sum is 0).
LengthBandSummary band_contributions(std::span<const ContributionRecord> records,
                                     bool normalize);

/// Distinct words per year with count > 0 and relative frequency >=
/// `min_rel_freq`, plus an ordinary least squares fit of count on year.
VocabSeries vocabulary_series(const FrequencyStore& store, std::span<const int> years,
                              double min_rel_freq = kDefaultVocabThreshold,
                              unsigned threads = 1);

std::optional<LinearFit> least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace lexidyn
