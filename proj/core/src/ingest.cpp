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

#include "lexidyn/ingest.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "lexidyn/error.hpp"
#include "lexidyn/line_reader.hpp"

namespace lexidyn {
namespace {

template <typename T>
bool parse_int(std::string_view s, T& out) noexcept {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_count(std::string_view s, Count& out) noexcept {
  return parse_int(s, out) && out >= 0;
}

std::string_view trim(std::string_view s) noexcept {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

char32_t single_scalar(std::string_view s, std::string_view what) {
  std::size_t pos = 0;
  auto cp = utf8::decode(s, pos);
  if (!cp || pos != s.size()) {
    throw InvalidRuleset(std::string(what) + " expects exactly one character, got '" +
                         std::string(s) + "'");
  }
  return *cp;
}

}  // namespace

std::optional<RawNgramView> try_parse_ngram_line(std::string_view line) noexcept {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

  std::string_view fields[4];
  std::size_t n = 0;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    if (n == 4) return std::nullopt;
    fields[n++] = line.substr(start, tab == std::string_view::npos ? tab : tab - start);
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  if (n < 3) return std::nullopt;

  RawNgramView rec;
  rec.token = fields[0];
  if (rec.token.empty() || !utf8::valid(rec.token)) return std::nullopt;
  if (!parse_int(fields[1], rec.year) || !parse_count(fields[2], rec.match_count)) {
    return std::nullopt;
  }
  if (n == 4 && !parse_count(fields[3], rec.volume_count)) return std::nullopt;
  return rec;
}

RawNgramRecord parse_ngram_line(std::string_view line) {
  auto view = try_parse_ngram_line(line);
  if (!view) throw MalformedLine("malformed ngram line: '" + std::string(line.substr(0, 80)) + "'");
  return {std::string(view->token), view->year, view->match_count, view->volume_count};
}

std::vector<std::pair<int, Count>> parse_totals_line(std::string_view line) {
  std::vector<std::pair<int, Count>> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) tab = line.size();
    const auto entry = trim(line.substr(start, tab - start));
    start = tab + 1;
    if (entry.empty()) continue;

    std::string_view parts[4];
    std::size_t n = 0;
    std::size_t p = 0;
    for (;;) {
      const auto comma = entry.find(',', p);
      if (n == 4) throw MalformedLine("totals entry has too many fields: '" + std::string(entry) + "'");
      parts[n++] = entry.substr(p, comma == std::string_view::npos ? comma : comma - p);
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    int year = 0;
    Count match = 0, pages = 0, volumes = 0;
    if (n != 4 || !parse_int(parts[0], year) || !parse_count(parts[1], match) ||
        !parse_count(parts[2], pages) || !parse_count(parts[3], volumes)) {
      throw MalformedLine("malformed totals entry: '" + std::string(entry) + "'");
    }
    out.emplace_back(year, match);
  }
  return out;
}

std::string TokenFilterConfig::id() const {
  std::string out = "scripts=";
  bool first = true;
  for (auto s : allowed_scripts) {
    if (!first) out += '+';
    out += unicode::script_name(s);
    first = false;
  }
  out += ";apostrophe=";
  out += allow_apostrophe ? '1' : '0';
  out += ";case_fold=";
  out += case_fold ? '1' : '0';
  out += ";reject=";
  for (std::size_t i = 0; i < reject_substrings.size(); ++i) {
    if (i) out += ',';
    out += reject_substrings[i];
  }
  return out;
}

void TokenFilterConfig::validate() const {
  if (allowed_scripts.empty()) throw InvalidConfig("at least one script must be enabled");
}

TokenFilterConfig TokenFilterConfig::for_language(std::string_view lang) {
  TokenFilterConfig c;
  if (lang == "ru" || lang == "uk" || lang == "be" || lang == "bg") {
    c.allowed_scripts = {unicode::Script::kCyrillic};
  } else if (lang == "el") {
    c.allowed_scripts = {unicode::Script::kGreek};
  }
  return c;
}

bool is_word(std::string_view token, const TokenFilterConfig& config) noexcept {
  if (token.empty()) return false;
  for (const auto& bad : config.reject_substrings) {
    if (!bad.empty() && token.find(bad) != std::string_view::npos) return false;
  }
  const bool latin = config.allowed_scripts.contains(unicode::Script::kLatin);
  bool has_letter = false;
  std::size_t pos = 0;
  while (pos < token.size()) {
    const auto c = static_cast<unsigned char>(token[pos]);
    if (c < 0x80) {
      if ((c | 0x20) >= 'a' && (c | 0x20) <= 'z') {
        if (!latin) return false;
        has_letter = true;
      } else if (c != '\'' || !config.allow_apostrophe) {
        return false;
      }
      ++pos;
      continue;
    }
    auto cp = utf8::decode(token, pos);
    if (!cp) return false;
    if (*cp == unicode::kRightSingleQuote) {
      if (!config.allow_apostrophe) return false;
      continue;
    }
    auto script = unicode::letter_script(*cp);
    if (!script || !config.allowed_scripts.contains(*script)) return false;
    has_letter = true;
  }
  return has_letter;
}

int word_length(std::string_view token) noexcept {
  return static_cast<int>(utf8::scalar_count(token));
}

NormalizationRuleset::NormalizationRuleset(std::string id, std::vector<NormalizationRule> rules)
    : id_(std::move(id)), rules_(std::move(rules)) {
  std::vector<char32_t> sources;
  for (const auto& r : rules_) {
    if (auto* m = std::get_if<MapChar>(&r)) sources.push_back(m->from);
    if (auto* s = std::get_if<StripFinal>(&r)) strip_.push_back(s->letter);
  }
  for (const auto& r : rules_) {
    if (auto* m = std::get_if<MapChar>(&r);
        m && std::find(sources.begin(), sources.end(), m->to) != sources.end()) {
      throw InvalidRuleset("ruleset '" + id_ + "': map target " + utf8::encode(m->to) +
                           " is also a map source");
    }
  }
}

NormalizationRuleset NormalizationRuleset::parse(std::string_view text) {
  std::string id = "custom";
  std::vector<NormalizationRule> rules;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> words;
    std::size_t p = 0;
    while (p < line.size()) {
      const auto b = line.find_first_not_of(" \t", p);
      if (b == std::string_view::npos) break;
      auto e = line.find_first_of(" \t", b);
      if (e == std::string_view::npos) e = line.size();
      words.push_back(line.substr(b, e - b));
      p = e;
    }

    const auto bad = [&] {
      return InvalidRuleset("ruleset line " + std::to_string(line_no) + ": '" +
                            std::string(line) + "'");
    };
    if (words[0] == "id" && words.size() == 2) {
      id = words[1];
    } else if (words[0] == "strip_final" && words.size() == 2) {
      rules.emplace_back(StripFinal{single_scalar(words[1], "strip_final")});
    } else if (words[0] == "map_char" && words.size() == 3) {
      rules.emplace_back(
          MapChar{single_scalar(words[1], "map_char"), single_scalar(words[2], "map_char")});
    } else {
      throw bad();
    }
  }
  return NormalizationRuleset(std::move(id), std::move(rules));
}

NormalizationRuleset NormalizationRuleset::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open ruleset " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::string normalize_token(std::string_view token, const NormalizationRuleset& rules) {
  if (rules.empty()) return std::string(token);

  std::u32string cps;
  cps.reserve(token.size());
  std::size_t pos = 0;
  while (pos < token.size()) {
    auto cp = utf8::decode(token, pos);
    if (!cp) return std::string(token);
    cps.push_back(*cp);
  }

  std::vector<char32_t> strip;
  for (const auto& rule : rules.rules()) {
    if (auto* m = std::get_if<MapChar>(&rule)) {
      std::replace(cps.begin(), cps.end(), m->from, m->to);
    } else {
      strip.push_back(std::get<StripFinal>(rule).letter);
    }
  }
  while (!cps.empty() && std::find(strip.begin(), strip.end(), cps.back()) != strip.end()) {
    cps.pop_back();
  }

  std::string out;
  out.reserve(token.size());
  for (auto cp : cps) utf8::append(out, cp);
  return out;
}

std::optional<std::string> canonical_token(std::string_view raw, const TokenFilterConfig& filter,
                                           const NormalizationRuleset& rules) {
  if (!is_word(raw, filter)) return std::nullopt;
  std::string token;
  token.reserve(raw.size());
  std::size_t pos = 0;
  while (pos < raw.size()) {
    auto cp = *utf8::decode(raw, pos);
    if (cp == unicode::kRightSingleQuote) cp = unicode::kApostrophe;
    if (filter.case_fold) cp = unicode::to_lower(cp);
    utf8::append(token, cp);
  }
  if (rules.empty()) return token;
  auto normalized = normalize_token(token, rules);
  if (!is_word(normalized, filter)) return std::nullopt;
  return normalized;
}

IngestStats& IngestStats::operator+=(const IngestStats& o) noexcept {
  lines_read += o.lines_read;
  accepted += o.accepted;
  rejected += o.rejected;
  out_of_range += o.out_of_range;
  malformed += o.malformed;
  return *this;
}

std::string IngestOptions::provenance() const {
  return "lang=" + language + ";" + filter.id() + ";ruleset=" + rules.id();
}

Ingestor::Ingestor(IngestOptions options)
    : options_(std::move(options)), builder_(options_.years, options_.provenance()) {
  options_.filter.validate();
}

std::optional<std::uint32_t> Ingestor::resolve(std::string_view raw) {
  const auto& filter = options_.filter;
  if (!is_word(raw, filter)) return std::nullopt;

  const bool ascii = std::all_of(raw.begin(), raw.end(),
                                 [](char c) { return static_cast<unsigned char>(c) < 0x80; });
  std::string_view token = raw;
  if (!ascii || filter.case_fold) {
    scratch_.clear();
    std::size_t pos = 0;
    while (pos < raw.size()) {
      auto cp = *utf8::decode(raw, pos);
      if (cp == unicode::kRightSingleQuote) cp = unicode::kApostrophe;
      if (filter.case_fold) cp = unicode::to_lower(cp);
      utf8::append(scratch_, cp);
    }
    token = scratch_;
  }

  if (options_.rules.empty()) return builder_.intern(token);
  const auto normalized = normalize_token(token, options_.rules);
  if (!is_word(normalized, filter)) return std::nullopt;
  return builder_.intern(normalized);
}

void Ingestor::add_line(std::string_view line) {
  ++stats_.lines_read;
  const auto rec = try_parse_ngram_line(line);
  if (!rec) {
    ++stats_.malformed;
    return;
  }
  if (!options_.years.contains(rec->year)) {
    ++stats_.out_of_range;
    return;
  }
  builder_.mark_year(rec->year);

  if (!has_last_ || rec->token != last_raw_) {
    last_id_ = resolve(rec->token);
    last_raw_.assign(rec->token);
    has_last_ = true;
  }
  if (!last_id_) {
    ++stats_.rejected;
    return;
  }
  ++stats_.accepted;
  builder_.add(*last_id_, rec->year, rec->match_count);
}

FrequencyStore Ingestor::seal() && { return std::move(builder_).seal(); }

IngestResult ingest_stream(std::span<const std::string> lines, const IngestOptions& options) {
  Ingestor ingestor(options);
  for (const auto& line : lines) ingestor.add_line(line);
  auto stats = ingestor.stats();
  return {std::move(ingestor).seal(), stats};
}

IngestResult ingest_stream(std::istream& in, const IngestOptions& options) {
  Ingestor ingestor(options);
  std::string line;
  while (std::getline(in, line)) ingestor.add_line(line);
  if (in.bad()) throw IoFailure("read error on input stream");
  auto stats = ingestor.stats();
  return {std::move(ingestor).seal(), stats};
}

IngestResult ingest_file(const std::filesystem::path& path, const IngestOptions& options) {
  Ingestor ingestor(options);
  LineReader reader(path);
  std::string_view line;
  while (reader.next(line)) ingestor.add_line(line);
  auto stats = ingestor.stats();
  return {std::move(ingestor).seal(), stats};
}

IngestResult ingest_files(std::span<const std::filesystem::path> paths,
                          const IngestOptions& options, unsigned threads) {
  std::vector<IngestResult> shards(paths.size());
  std::vector<std::exception_ptr> errors(paths.size());
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (auto i = next++; i < paths.size(); i = next++) {
      try {
        shards[i] = ingest_file(paths[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const auto n = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(paths.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  pool.clear();

  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  IngestResult out;
  std::vector<FrequencyStore> stores;
  for (auto& shard : shards) {
    out.stats += shard.stats;
    stores.push_back(std::move(shard.store));
  }
  out.store = stores.empty() ? StoreBuilder(options.years, options.provenance()).seal()
                             : merge(std::move(stores));
  return out;
}

}  // namespace lexidyn
