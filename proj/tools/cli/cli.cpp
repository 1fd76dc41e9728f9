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

#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "cli/csv.hpp"
#include "lexidyn/error.hpp"
#include "lexidyn/ingest.hpp"
#include "lexidyn/lexicon.hpp"
#include "lexidyn/metrics.hpp"
#include "lexidyn/parallel.hpp"
#include "lexidyn/periods.hpp"
#include "lexidyn/store.hpp"

namespace lexidyn::cli {
namespace {

namespace fs = std::filesystem;

constexpr int kDefaultYearMin = 1800;
constexpr int kDefaultYearMax = 2008;

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(sep, start);
    if (end == std::string_view::npos) end = s.size();
    auto item = s.substr(start, end - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

int parse_year(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidConfig("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

/// "a:b" or a single year "a".
YearRange parse_year_range(std::string_view spec, std::string_view what) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    const int y = parse_year(spec, what);
    return {y, y};
  }
  YearRange r{parse_year(spec.substr(0, colon), what), parse_year(spec.substr(colon + 1), what)};
  if (r.max < r.min) throw InvalidConfig("empty " + std::string(what) + ": '" + std::string(spec) + "'");
  return r;
}

PeriodSpec parse_period(std::string_view spec) {
  if (spec.empty()) throw InvalidConfig("--period is required (e.g. 1900:1925)");
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidConfig("period must be start:end, got '" + std::string(spec) + "'");
  }
  // ordering is checked by the analysis itself (empty interval)
  return {parse_year(spec.substr(0, colon), "period"), parse_year(spec.substr(colon + 1), "period")};
}

fs::path resolve_data_dir(const RunConfig& cfg) {
  if (!cfg.data_dir.empty()) return cfg.data_dir;
  if (const char* env = std::getenv("LEXIDYN_DATA_DIR"); env && *env) return env;
  std::error_code ec;
  if (fs::is_directory(LEXIDYN_INSTALL_DATA_DIR, ec)) return LEXIDYN_INSTALL_DATA_DIR;
  return LEXIDYN_SOURCE_DATA_DIR;
}

NormalizationRuleset resolve_ruleset(const std::string& name, const fs::path& data_dir) {
  if (name.empty() || name == "empty") return {};
  std::error_code ec;
  if (fs::is_regular_file(name, ec)) return NormalizationRuleset::load(name);
  const auto shipped = data_dir / "rulesets" / (name + ".rules");
  if (fs::is_regular_file(shipped, ec)) return NormalizationRuleset::load(shipped);
  throw InvalidConfig("unknown ruleset '" + name + "'");
}

std::map<std::string, std::string> parse_provenance(std::string_view provenance) {
  std::map<std::string, std::string> kv;
  for (const auto& item : split(provenance, ';')) {
    const auto eq = item.find('=');
    if (eq != std::string::npos) kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

/// Filter configuration and ruleset the cache was built with.
struct CacheSettings {
  std::string language = "en";
  TokenFilterConfig filter;
  NormalizationRuleset rules;
};

CacheSettings cache_settings(const FrequencyStore& store, const fs::path& data_dir) {
  const auto kv = parse_provenance(store.provenance());
  CacheSettings s;
  if (auto it = kv.find("lang"); it != kv.end()) s.language = it->second;
  s.filter = TokenFilterConfig::for_language(s.language);
  if (auto it = kv.find("scripts"); it != kv.end()) {
    s.filter.allowed_scripts.clear();
    for (const auto& name : split(it->second, '+')) {
      if (auto script = unicode::parse_script(name)) s.filter.allowed_scripts.insert(*script);
    }
  }
  if (auto it = kv.find("apostrophe"); it != kv.end()) s.filter.allow_apostrophe = it->second == "1";
  if (auto it = kv.find("case_fold"); it != kv.end()) s.filter.case_fold = it->second == "1";
  if (auto it = kv.find("ruleset"); it != kv.end()) {
    try {
      s.rules = resolve_ruleset(it->second, data_dir);
    } catch (const InvalidConfig&) {
      s.rules = {};  // custom ruleset file no longer around; lists stay unnormalized
    }
  }
  return s;
}

class Session {
 public:
  explicit Session(const RunConfig& cfg)
      : cfg_(cfg), data_dir_(resolve_data_dir(cfg)), store_(load_cache(cfg.cache)) {}

  const FrequencyStore& store() const { return store_; }

  WordFilter filter(const std::string& name) {
    if (name == "all") return WordFilter::all();
    if (name == "short") return split_by_length(cfg_.cutoff).first;
    if (name == "long") return split_by_length(cfg_.cutoff).second;
    if (name == kFunctionClass || name == kContentClass || name == kPronounClass ||
        name.starts_with("custom:")) {
      return class_filter(classifier(), name);
    }
    throw InvalidConfig("unknown filter or class '" + name + "'");
  }

  std::vector<int> years() const {
    std::vector<int> out;
    const auto all = store_.years();
    if (cfg_.years.empty()) return {all.begin(), all.end()};
    const auto range = parse_year_range(cfg_.years, "year range");
    if (range.min == range.max && !store_.has_year(range.min)) throw YearAbsent(range.min);
    std::copy_if(all.begin(), all.end(), std::back_inserter(out),
                 [&](int y) { return range.contains(y); });
    if (out.empty()) throw EmptySelection("no years of the cache fall in " + cfg_.years);
    return out;
  }

  std::string canonical(const std::string& token) {
    const auto& s = settings();
    return canonical_token(token, s.filter, s.rules).value_or(token);
  }

 private:
  const CacheSettings& settings() {
    if (!settings_) settings_ = cache_settings(store_, data_dir_);
    return *settings_;
  }

  const Classifier& classifier() {
    if (!classifier_) {
      const auto& s = settings();
      classifier_ = Classifier::load_language(data_dir_ / "lists", s.language, s.rules, s.filter);
    }
    return *classifier_;
  }

  const RunConfig& cfg_;
  fs::path data_dir_;
  FrequencyStore store_;
  std::optional<CacheSettings> settings_;
  std::optional<Classifier> classifier_;
};

Sign parse_sign(const std::string& s) {
  if (s == "increase") return Sign::kIncrease;
  if (s == "decrease") return Sign::kDecrease;
  if (s == "both") return Sign::kBoth;
  throw InvalidConfig("unknown sign '" + s + "'");
}

Metric parse_metric(const std::string& s) {
  if (s == "linear") return Metric::kLinear;
  if (s == "exact") return Metric::kExact;
  throw InvalidConfig("unknown metric '" + s + "'");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty() || cfg.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure("cannot open " + cfg.out + " for writing");
  file << text;
  if (!file.flush()) throw IoFailure("write failed: " + cfg.out);
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.inputs.empty()) throw InvalidConfig("build needs at least one --input");
  const auto data_dir = resolve_data_dir(cfg);

  IngestOptions opts;
  opts.language = cfg.lang;
  opts.filter = TokenFilterConfig::for_language(cfg.lang);
  if (!cfg.scripts.empty()) {
    opts.filter.allowed_scripts.clear();
    for (const auto& name : split(cfg.scripts, ',')) {
      auto script = unicode::parse_script(name);
      if (!script) throw InvalidConfig("unknown script '" + name + "'");
      opts.filter.allowed_scripts.insert(*script);
    }
  }
  opts.filter.case_fold = cfg.case_fold;
  opts.rules = resolve_ruleset(cfg.ruleset, data_dir);
  opts.years = cfg.years.empty() ? YearRange{kDefaultYearMin, kDefaultYearMax}
                                 : parse_year_range(cfg.years, "year range");

  std::vector<fs::path> paths(cfg.inputs.begin(), cfg.inputs.end());
  const unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                            : cfg.threads;
  auto result = ingest_files(paths, opts, threads);
  const auto& st = result.stats;

  out << "lines read: " << st.lines_read << '\n'
      << "accepted: " << st.accepted << '\n'
      << "rejected: " << st.rejected << '\n'
      << "out of range: " << st.out_of_range << '\n'
      << "malformed: " << st.malformed << '\n'
      << "distinct words: " << result.store.token_count() << '\n'
      << "years: " << result.store.years().size() << '\n';

  if (!cfg.totals.empty()) {
    std::ifstream in(cfg.totals, std::ios::binary);
    if (!in) throw IoFailure("cannot open totals file " + cfg.totals);
    Count raw = 0;
    std::string line;
    while (std::getline(in, line)) {
      for (auto [year, count] : parse_totals_line(line)) {
        if (opts.years.contains(year)) raw += count;
      }
    }
    Count words = 0;
    for (int y : result.store.years()) words += result.store.total(y);
    out << "raw 1-gram tokens in range: " << raw << '\n';
    if (raw > 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(words) / static_cast<double>(raw));
      out << "word share of raw tokens: " << buf << '\n';
    }
  }

  if (result.store.token_count() == 0) {
    err << "lexidyn: error: no words accepted; cache not written\n";
    return kEmptyBuild;
  }
  save_cache(result.store, cfg.cache);
  out << "cache: " << cfg.cache << '\n';
  return kOk;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  Session s(cfg);
  const auto series = length_series(s.store(), s.years(), cfg.smooth, s.filter(cfg.filter),
                                    std::max(1u, cfg.threads));
  std::ostringstream text;
  CsvWriter csv(text);
  csv.field("year").field("avg_length").end_row();
  for (const auto& p : series.points) csv.field(p.year).field(p.value).end_row();
  emit(cfg, text.str(), out);
  return kOk;
}

int cmd_vocab(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Session s(cfg);
  const auto vocab = vocabulary_series(s.store(), s.years(), cfg.threshold,
                                       std::max(1u, cfg.threads));
  std::ostringstream text;
  CsvWriter csv(text);
  csv.field("year").field("vocab").field("fitted").end_row();
  for (const auto& p : vocab.points) {
    csv.field(p.year).field(p.count);
    if (vocab.fit) {
      csv.field(vocab.fit->at(p.year));
    } else {
      csv.field("");
    }
    csv.end_row();
  }
  emit(cfg, text.str(), out);
  if (vocab.fit) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", vocab.fit->slope);
    err << "slope: " << buf << " words/year\n";
  }
  return kOk;
}

int cmd_contrib(const RunConfig& cfg, std::ostream& out) {
  Session s(cfg);
  const auto period = parse_period(cfg.period);
  const auto records =
      interval_contributions(s.store(), period.start, period.end, s.filter(cfg.filter), cfg.smooth);
  std::ostringstream text;
  CsvWriter csv(text);
  csv.field("token").field("length").field("p_start").field("p_end").field("delta_p")
      .field("baseline_L").field("dl_linear").field("dl_exact").end_row();
  for (const auto& r : records) {
    csv.field(r.token).field(r.length).field(r.p_start).field(r.p_end).field(r.delta_p)
        .field(r.baseline_L).field(r.dl_linear).field(r.dl_exact).end_row();
  }
  emit(cfg, text.str(), out);
  return kOk;
}

int cmd_topk(const RunConfig& cfg, std::ostream& out) {
  Session s(cfg);
  const auto table = top_contributors(s.store(), parse_period(cfg.period), cfg.k,
                                      parse_sign(cfg.sign), s.filter(cfg.word_class),
                                      parse_metric(cfg.metric), cfg.smooth);
  std::ostringstream text;
  CsvWriter csv(text);
  csv.field("rank").field("token").field("dl_linear").field("dl_exact").end_row();
  for (const auto& r : table.rows) {
    csv.field(r.rank).field(r.token).field(r.dl_linear).field(r.dl_exact).end_row();
  }
  emit(cfg, text.str(), out);
  return kOk;
}

int cmd_presence(const RunConfig& cfg, std::ostream& out) {
  Session s(cfg);
  const auto years = s.years();
  std::vector<int> bps;
  for (const auto& b : split(cfg.breakpoints, ',')) bps.push_back(parse_year(b, "breakpoint"));
  const auto periods = segment(years.front(), years.back(), bps);

  const auto filter = s.filter(cfg.word_class);
  const auto sign = parse_sign(cfg.sign);
  const auto metric = parse_metric(cfg.metric);
  std::vector<TopKTable> tables(periods.size());
  parallel_for(periods.size(), std::max(1u, cfg.threads), [&](std::size_t i) {
    tables[i] = top_contributors(s.store(), periods[i], cfg.k, sign, filter, metric, cfg.smooth);
  });
  const auto matrix = presence_matrix(tables);

  std::ostringstream text;
  CsvWriter csv(text);
  csv.field("token");
  for (const auto& p : matrix.periods) csv.field(p.label());
  csv.end_row();
  for (std::size_t r = 0; r < matrix.tokens.size(); ++r) {
    csv.field(matrix.tokens[r]);
    for (bool mark : matrix.present[r]) csv.field(mark ? "+" : "");
    csv.end_row();
  }
  emit(cfg, text.str(), out);
  return kOk;
}

int cmd_bands(const RunConfig& cfg, std::ostream& out) {
  Session s(cfg);
  const auto period = parse_period(cfg.period);
  const auto records =
      interval_contributions(s.store(), period.start, period.end, WordFilter::all(), cfg.smooth);
  const auto summary = band_contributions(records, cfg.normalize);
  std::ostringstream text;
  CsvWriter csv(text);
  csv.field("length").field("contribution").field("share").end_row();
  for (const auto& [length, band] : summary.bands) {
    csv.field(length).field(band.contribution);
    if (band.share) {
      csv.field(*band.share);
    } else {
      csv.field("");
    }
    csv.end_row();
  }
  emit(cfg, text.str(), out);
  return kOk;
}

int cmd_words(const RunConfig& cfg, std::ostream& out) {
  Session s(cfg);
  std::vector<std::string> tokens;
  for (const auto& t : split(cfg.tokens, ',')) tokens.push_back(s.canonical(t));
  if (tokens.empty()) throw InvalidConfig("words needs --tokens");
  const auto series = word_set_series(s.store(), tokens, s.years(), cfg.smooth);
  std::ostringstream text;
  CsvWriter csv(text);
  csv.field("token").field("year").field("freq").end_row();
  for (const auto& ts : series) {
    for (const auto& p : ts.points) csv.field(ts.token).field(p.year).field(p.value).end_row();
  }
  emit(cfg, text.str(), out);
  return kOk;
}

/// Flat key=value file; keys are long option names without dashes. Values
/// only fill options not given on the command line.
void apply_config_file(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open config file " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto eq = line.find('=', b);
    if (eq == std::string::npos) {
      throw InvalidConfig(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = split(line.substr(b, eq - b), ' ');
    const auto value = split(line.substr(eq + 1), '\n');
    if (key.size() != 1) throw InvalidConfig(path + ":" + std::to_string(line_no) + ": bad key");
    auto* opt = sub.get_option_no_throw("--" + key[0]);
    if (!opt) {
      throw InvalidConfig(path + ":" + std::to_string(line_no) + ": unknown key '" + key[0] +
                          "' for " + sub.get_name());
    }
    if (opt->count() > 0) continue;
    for (const auto& v : value.empty() ? std::vector<std::string>{""} : value) opt->add_result(v);
    opt->run_callback();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lexidyn: diachronic word-length statistics over year-stamped 1-gram counts",
               "lexidyn"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  RunConfig cfg;
  std::string config_file;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "Flat key=value file with option defaults");
    sub->add_option("--data-dir", cfg.data_dir,
                    "Directory holding lists/ and rulesets/ (default: installed data)");
  };
  const auto cache_opt = [&](CLI::App* sub) {
    sub->add_option("-c,--cache", cfg.cache, "Cache file")->envname("LEXIDYN_CACHE");
  };
  const auto analysis = [&](CLI::App* sub) {
    common(sub);
    cache_opt(sub);
    sub->add_option("-o,--out", cfg.out, "Output CSV path (default: stdout)");
    sub->add_option("--smooth", cfg.smooth, "Centered moving-average half-width w")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", cfg.threads, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);
  };
  const auto cutoff_opt = [&](CLI::App* sub) {
    sub->add_option("--cutoff", cfg.cutoff, "Length cutoff for short/long filters")
        ->check(CLI::PositiveNumber);
  };
  const auto years_opt = [&](CLI::App* sub) {
    sub->add_option("--years", cfg.years, "Year range a:b (default: every year in the cache)");
  };
  const auto period_opt = [&](CLI::App* sub) {
    sub->add_option("--period", cfg.period, "Interval start:end")->required();
  };
  const auto ranking_opts = [&](CLI::App* sub) {
    sub->add_option("-k", cfg.k, "Rows per table")->check(CLI::PositiveNumber);
    sub->add_option("--sign", cfg.sign, "increase, decrease or both")
        ->check(CLI::IsMember({"increase", "decrease", "both"}));
    sub->add_option("--class", cfg.word_class,
                    "Word class: all, function, content, pronoun-personal, custom:<name>");
    sub->add_option("--metric", cfg.metric, "Ranking metric: linear or exact")
        ->check(CLI::IsMember({"linear", "exact"}));
    cutoff_opt(sub);
  };

  auto* build = app.add_subcommand("build", "Ingest 1-gram files into a cache");
  common(build);
  build->add_option("-i,--input", cfg.inputs, "Input files (gzip detected), '-' for stdin")
      ->required();
  build->add_option("-o,--output", cfg.cache, "Cache file to write")->envname("LEXIDYN_CACHE");
  build->add_option("--lang", cfg.lang, "Language tag (selects default scripts and lists)");
  build->add_option("--years", cfg.years, "Year range a:b (default: 1800:2008)");
  build->add_option("--ruleset", cfg.ruleset, "Orthography ruleset: empty, r1918 or a file");
  build->add_option("--scripts", cfg.scripts,
                    "Comma list of latin, cyrillic, greek (default: from --lang)");
  build->add_flag("--case-fold", cfg.case_fold, "Lowercase tokens before counting");
  build->add_option("--totals", cfg.totals, "Corpus totals file to report coverage against");
  build->add_option("--threads", cfg.threads, "Worker threads, one input file each (0: all cores)");

  auto* series = app.add_subcommand("series", "Average word length per year");
  analysis(series);
  years_opt(series);
  series->add_option("--filter", cfg.filter,
                     "all, short, long, function, content, pronoun-personal, custom:<name>");
  cutoff_opt(series);

  auto* vocab = app.add_subcommand("vocab", "Distinct words per year and linear growth fit");
  analysis(vocab);
  years_opt(vocab);
  vocab->add_option("--threshold", cfg.threshold, "Minimum relative frequency")
      ->check(CLI::NonNegativeNumber);

  auto* contrib = app.add_subcommand("contrib", "Per-word contributions to length change");
  analysis(contrib);
  period_opt(contrib);
  contrib->add_option("--filter", cfg.filter,
                      "all, short, long, function, content, pronoun-personal, custom:<name>");
  cutoff_opt(contrib);

  auto* topk = app.add_subcommand("topk", "Top contributors over one period");
  analysis(topk);
  period_opt(topk);
  ranking_opts(topk);

  auto* presence = app.add_subcommand("presence", "Top-contributor membership across periods");
  analysis(presence);
  years_opt(presence);
  presence->add_option("--breakpoints", cfg.breakpoints,
                       "Comma list of period boundaries (default: 25-year grid)");
  ranking_opts(presence);

  auto* bands = app.add_subcommand("bands", "Contributions grouped by word length");
  analysis(bands);
  period_opt(bands);
  bands->add_flag("--normalize,!--no-normalize", cfg.normalize, "Report each band's share");

  auto* words = app.add_subcommand("words", "Frequency series of selected words");
  analysis(words);
  years_opt(words);
  words->add_option("-t,--tokens", cfg.tokens, "Comma list of words")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadFlags;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (!config_file.empty()) apply_config_file(*active, config_file);

    const auto name = active->get_name();
    if (name == "build") return cmd_build(cfg, out, err);
    if (name == "series") return cmd_series(cfg, out);
    if (name == "vocab") return cmd_vocab(cfg, out, err);
    if (name == "contrib") return cmd_contrib(cfg, out);
    if (name == "topk") return cmd_topk(cfg, out);
    if (name == "presence") return cmd_presence(cfg, out);
    if (name == "bands") return cmd_bands(cfg, out);
    if (name == "words") return cmd_words(cfg, out);
  } catch (const YearAbsent& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kBadSelection;
  } catch (const EmptySelection& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kBadSelection;
  } catch (const DegenerateDistribution& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kBadSelection;
  } catch (const InvalidBreakpoints& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kBadSelection;
  } catch (const SettingsMismatch& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kBadSelection;
  } catch (const InvalidConfig& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const InvalidRuleset& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const CLI::Error& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const std::exception& e) {
    err << "lexidyn: error: " << e.what() << '\n';
    return kIoError;
  }
  return kBadFlags;
}

}  // namespace lexidyn::cli
