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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "lexidyn/error.hpp"
#include "lexidyn/line_reader.hpp"
#include "test_support.hpp"

using namespace lexidyn;
using namespace lexidyn::testing;

namespace {

NormalizationRuleset r1918() {
  return NormalizationRuleset::load(std::filesystem::path(LEXIDYN_SOURCE_DATA_DIR) / "rulesets" /
                                    "r1918.rules");
}

TokenFilterConfig cyrillic() {
  TokenFilterConfig c;
  c.allowed_scripts = {unicode::Script::kCyrillic};
  return c;
}

// Dirty corpus lines: words, numbers, tagged forms, apostrophe variants,
// junk and out-of-range years.
std::vector<std::string> random_lines(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> words;
  for (int i = 0; i < 60; ++i) words.push_back(random_word(rng, latin_alphabet(), 1, 9));
  words.insert(words.end(), {"don't", "don’t", "The", "the", "3.14", "1850", "run_VERB", "'''",
                             ",", "naïve", "мир"});
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> year(1795, 2012);
  std::uniform_int_distribution<int> count(0, 500);
  std::uniform_int_distribution<int> kind(0, 19);
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < n; ++i) {
    switch (kind(rng)) {
      case 0:
        lines.push_back("garbage line " + std::to_string(i));
        break;
      case 1:
        lines.push_back(words[pick(rng)] + "\t" + std::to_string(year(rng)) + "\tx\t1");
        break;
      case 2:
        lines.push_back(words[pick(rng)] + "\t" + std::to_string(year(rng)) + "\t" +
                        std::to_string(count(rng)));
        break;
      default:
        lines.push_back(words[pick(rng)] + "\t" + std::to_string(year(rng)) + "\t" +
                        std::to_string(count(rng)) + "\t" + std::to_string(count(rng) / 3) +
                        (kind(rng) == 0 ? "\r" : ""));
    }
  }
  return lines;
}

}  // namespace

TEST(ParseNgramLine, FourColumns) {
  EXPECT_EQ(parse_ngram_line("analysis\t1905\t54\t12"),
            (RawNgramRecord{"analysis", 1905, 54, 12}));
  EXPECT_EQ(parse_ngram_line("the\t2000\t0\t0"), (RawNgramRecord{"the", 2000, 0, 0}));
}

TEST(ParseNgramLine, SimplifiedThreeColumns) {
  EXPECT_EQ(parse_ngram_line("мир\t1901\t7"), (RawNgramRecord{"мир", 1901, 7, 0}));
}

TEST(ParseNgramLine, StripsCarriageReturn) {
  EXPECT_EQ(parse_ngram_line("word\t1950\t3\t2\r"), (RawNgramRecord{"word", 1950, 3, 2}));
}

TEST(ParseNgramLine, Malformed) {
  EXPECT_THROW(parse_ngram_line("bad line with no tabs"), MalformedLine);
  EXPECT_THROW(parse_ngram_line("a\t1900"), MalformedLine);
  EXPECT_THROW(parse_ngram_line("a\t1900\t1\t1\t1"), MalformedLine);
  EXPECT_THROW(parse_ngram_line("a\t19x0\t1\t1"), MalformedLine);
  EXPECT_THROW(parse_ngram_line("a\t1900\t-4\t1"), MalformedLine);
  EXPECT_THROW(parse_ngram_line("a\t1900\t4\t"), MalformedLine);
  EXPECT_THROW(parse_ngram_line("\t1900\t4\t1"), MalformedLine);
  EXPECT_THROW(parse_ngram_line("a\xFF\t1900\t4\t1"), MalformedLine);
  EXPECT_FALSE(try_parse_ngram_line(""));
}

TEST(ParseTotalsLine, Entries) {
  using V = std::vector<std::pair<int, Count>>;
  EXPECT_EQ(parse_totals_line("1800,100,10,1\t1801,200,20,2"), (V{{1800, 100}, {1801, 200}}));
  EXPECT_EQ(parse_totals_line(""), V{});
  EXPECT_EQ(parse_totals_line(" 1505,32059,231,1\t"), (V{{1505, 32059}}));
  EXPECT_THROW(parse_totals_line("1800,x,10,1"), MalformedLine);
  EXPECT_THROW(parse_totals_line("1800,1,10"), MalformedLine);
}

TEST(IsWord, BasicExamples) {
  const TokenFilterConfig en;
  EXPECT_TRUE(is_word("don't", en));
  EXPECT_FALSE(is_word("3.14", en));
  EXPECT_FALSE(is_word("burnt_NOUN", en));
  EXPECT_FALSE(is_word("'''", en));
}

TEST(IsWord, ScriptsAndApostrophes) {
  const TokenFilterConfig en;
  EXPECT_TRUE(is_word("Mr", en));
  EXPECT_TRUE(is_word("naïve", en));
  EXPECT_TRUE(is_word("don’t", en));
  EXPECT_FALSE(is_word("мир", en));
  EXPECT_FALSE(is_word("x86", en));
  EXPECT_FALSE(is_word("co-op", en));
  EXPECT_FALSE(is_word("", en));
  EXPECT_FALSE(is_word("a\xFF", en));

  EXPECT_TRUE(is_word("мир", cyrillic()));
  EXPECT_TRUE(is_word("хлѣбъ", cyrillic()));
  EXPECT_FALSE(is_word("mир", cyrillic()));  // Latin m

  TokenFilterConfig no_apos;
  no_apos.allow_apostrophe = false;
  EXPECT_FALSE(is_word("don't", no_apos));
  EXPECT_FALSE(is_word("don’t", no_apos));
}

TEST(FilterConfig, RequiresAScript) {
  TokenFilterConfig c;
  c.allowed_scripts.clear();
  EXPECT_THROW(c.validate(), InvalidConfig);
  IngestOptions opts;
  opts.filter = c;
  EXPECT_THROW(Ingestor{opts}, InvalidConfig);
}

TEST(WordLength, CountsScalars) {
  EXPECT_EQ(word_length("the"), 3);
  EXPECT_EQ(word_length("don't"), 5);
  EXPECT_EQ(word_length("мир"), 3);
}

TEST(NormalizeToken, R1918Goldens) {
  const auto rules = r1918();
  EXPECT_EQ(rules.id(), "r1918");
  EXPECT_EQ(normalize_token("миръ", rules), "мир");
  EXPECT_EQ(normalize_token("хлѣбъ", rules), "хлеб");
  EXPECT_EQ(normalize_token("Ѳеодоръ", rules), "Феодор");
  EXPECT_EQ(normalize_token("міръ", rules), "мир");
  EXPECT_EQ(normalize_token("объявить", rules), "объявить");  // medial ъ kept
}

TEST(NormalizeToken, EitherOrderGivesSameGolden) {
  // hand check: strip then map, and map then strip
  const NormalizationRuleset strip_first("a", {StripFinal{U'ъ'}, MapChar{U'ѣ', U'е'}});
  const NormalizationRuleset map_first("b", {MapChar{U'ѣ', U'е'}, StripFinal{U'ъ'}});
  EXPECT_EQ(normalize_token("хлѣбъ", strip_first), "хлеб");
  EXPECT_EQ(normalize_token("хлѣбъ", map_first), "хлеб");
}

TEST(NormalizeToken, EmptyRulesetIsIdentity) {
  const NormalizationRuleset empty;
  for (std::string t : {"миръ", "the", "don't"}) EXPECT_EQ(normalize_token(t, empty), t);
}

TEST(NormalizeToken, StripsWholeTrailingRun) {
  const auto rules = r1918();
  EXPECT_EQ(normalize_token("ъъ", rules), "");
  EXPECT_EQ(normalize_token("СЪЕЗДЪ", rules), "СЪЕЗД");
}

TEST(NormalizeToken, IdempotentOnRandomCyrillic) {
  const auto rules = r1918();
  std::vector<std::string> alphabet;
  for (char32_t c = U'а'; c <= U'я'; ++c) alphabet.push_back(utf8::encode(c));
  for (std::string s : {"ъ", "Ъ", "ѣ", "Ѣ", "і", "І", "ѳ", "Ѳ", "ъ", "ъ"}) alphabet.push_back(s);
  std::mt19937_64 rng(1918);
  for (int i = 0; i < 10000; ++i) {
    const auto t = random_word(rng, alphabet, 1, 12);
    const auto once = normalize_token(t, rules);
    ASSERT_EQ(normalize_token(once, rules), once) << t;
  }
}

TEST(Ruleset, RejectsChainedMaps) {
  EXPECT_THROW(NormalizationRuleset("x", {MapChar{U'a', U'b'}, MapChar{U'b', U'c'}}),
               InvalidRuleset);
  EXPECT_THROW(NormalizationRuleset("x", {MapChar{U'a', U'a'}}), InvalidRuleset);
}

TEST(Ruleset, ParseErrors) {
  EXPECT_THROW(NormalizationRuleset::parse("strip_final ab\n"), InvalidRuleset);
  EXPECT_THROW(NormalizationRuleset::parse("map_char a\n"), InvalidRuleset);
  EXPECT_THROW(NormalizationRuleset::parse("shout x\n"), InvalidRuleset);
  const auto r = NormalizationRuleset::parse("# c\n\nid mine\nmap_char ё е\n");
  EXPECT_EQ(r.id(), "mine");
  ASSERT_EQ(r.rules().size(), 1u);
  EXPECT_EQ(r.rules()[0], NormalizationRule(MapChar{U'ё', U'е'}));
  EXPECT_THROW(NormalizationRuleset::load("/nonexistent/x.rules"), IoFailure);
}

TEST(IngestStream, HandAccumulation) {
  const std::vector<std::string> lines{"a\t1900\t3\t1", "bb\t1900\t1\t1"};
  const auto r = ingest_stream(lines, IngestOptions{});
  EXPECT_EQ(r.store.total(1900), 4);
  EXPECT_DOUBLE_EQ(frequency(r.store, "a", 1900), 0.75);
  EXPECT_DOUBLE_EQ(frequency(r.store, "bb", 1900), 0.25);
  EXPECT_EQ(r.stats.accepted, 2u);
}

TEST(IngestStream, RejectedTokenLeavesEmptyYear) {
  const std::vector<std::string> lines{"7\t1900\t99\t1"};
  const auto r = ingest_stream(lines, IngestOptions{});
  EXPECT_EQ(r.store.token_count(), 0u);
  ASSERT_TRUE(r.store.has_year(1900));
  EXPECT_EQ(r.store.total(1900), 0);
  EXPECT_EQ(r.stats.rejected, 1u);
}

TEST(IngestStream, StatsAndRange) {
  const std::vector<std::string> lines{"a\t1700\t3\t1", "junk", "a\t1900\t2", "1\t1900\t1",
                                       "a\t2009\t5\t5"};
  const auto r = ingest_stream(lines, IngestOptions{});
  EXPECT_EQ(r.stats, (IngestStats{5, 1, 1, 2, 1}));
  EXPECT_EQ(std::vector<int>(r.store.years().begin(), r.store.years().end()),
            std::vector<int>{1900});
}

TEST(IngestStream, ApostropheVariantsMerge) {
  const std::vector<std::string> lines{"don't\t1900\t3\t1", "don’t\t1900\t2\t1"};
  const auto r = ingest_stream(lines, IngestOptions{});
  ASSERT_EQ(r.store.token_count(), 1u);
  EXPECT_EQ(r.store.word(0).token, "don't");
  EXPECT_EQ(r.store.total(1900), 5);
}

TEST(IngestStream, CaseSensitiveUnlessFolding) {
  const std::vector<std::string> lines{"The\t1900\t3\t1", "the\t1900\t2\t1", "ЖУК\t1900\t1"};
  IngestOptions opts;
  EXPECT_EQ(ingest_stream(lines, opts).store.token_count(), 2u);
  opts.filter.case_fold = true;
  opts.filter.allowed_scripts.insert(unicode::Script::kCyrillic);
  const auto folded = ingest_stream(lines, opts).store;
  ASSERT_EQ(folded.token_count(), 2u);
  EXPECT_EQ(folded.count(*folded.find("the"), 1900), 5);
  EXPECT_TRUE(folded.find("жук"));
}

TEST(IngestStream, AppliesRulesetAndRechecks) {
  IngestOptions opts;
  opts.filter = cyrillic();
  opts.rules = r1918();
  const std::vector<std::string> lines{"миръ\t1900\t3", "мир\t1900\t2", "ъ\t1900\t9"};
  const auto r = ingest_stream(lines, opts);
  ASSERT_EQ(r.store.token_count(), 1u);
  EXPECT_EQ(r.store.word(0).token, "мир");
  EXPECT_EQ(r.store.total(1900), 5);
  EXPECT_EQ(r.stats.rejected, 1u);
  EXPECT_EQ(r.store.provenance(), opts.provenance());
  EXPECT_NE(r.store.provenance().find("ruleset=r1918"), std::string::npos);
}

TEST(IngestProperties, OrderIndependence) {
  std::mt19937_64 rng(11);
  auto lines = random_lines(rng, 5000);
  const auto base = ingest_stream(lines, IngestOptions{});
  for (int round = 0; round < 5; ++round) {
    std::shuffle(lines.begin(), lines.end(), rng);
    const auto again = ingest_stream(lines, IngestOptions{});
    ASSERT_EQ(again.store, base.store);
    ASSERT_EQ(encode_cache(again.store), encode_cache(base.store));
    ASSERT_EQ(again.stats, base.stats);
  }
}

TEST(IngestProperties, ShardEquivalence) {
  std::mt19937_64 rng(12);
  const auto lines = random_lines(rng, 6000);
  const auto single = ingest_stream(lines, IngestOptions{});
  for (int k : {1, 2, 3, 7}) {
    std::vector<std::vector<std::string>> shards(static_cast<std::size_t>(k));
    std::uniform_int_distribution<int> pick(0, k - 1);
    for (const auto& l : lines) shards[static_cast<std::size_t>(pick(rng))].push_back(l);
    std::vector<FrequencyStore> parts;
    IngestStats stats;
    for (const auto& s : shards) {
      auto r = ingest_stream(s, IngestOptions{});
      stats += r.stats;
      parts.push_back(std::move(r.store));
    }
    const auto merged = merge(std::move(parts));
    ASSERT_EQ(encode_cache(merged), encode_cache(single.store)) << "k=" << k;
    ASSERT_EQ(stats, single.stats);
  }
}

TEST(IngestProperties, FilterSoundnessAndConservation) {
  std::mt19937_64 rng(13);
  const auto lines = random_lines(rng, 4000);
  const IngestOptions opts;
  const auto r = ingest_stream(lines, opts);
  for (const auto& w : r.store.words()) {
    ASSERT_TRUE(is_word(w.token, opts.filter)) << w.token;
    ASSERT_EQ(w.length, word_length(w.token));
  }
  for (int y : r.store.years()) {
    const auto slice = r.store.slice(y);
    Count sum = 0;
    for (auto c : slice.counts) sum += c;
    ASSERT_EQ(sum, slice.total);
  }
  EXPECT_EQ(r.stats.lines_read, lines.size());
  EXPECT_EQ(r.stats.accepted + r.stats.rejected + r.stats.out_of_range + r.stats.malformed,
            r.stats.lines_read);
}

TEST(LineReader, PlainGzipAndMultiMember) {
  TempDir dir;
  const std::string text = "a\t1900\t3\t1\r\nbb\t1900\t1\t1\nccc\t1901\t2";
  write_file(dir / "plain.tsv", text);
  write_gzip(dir / "one.gz", text);
  // two gzip members back to back
  write_gzip(dir / "m1.gz", "a\t1900\t3\t1\r\nbb\t1900\t1\t1\n");
  write_gzip(dir / "m2.gz", "ccc\t1901\t2");
  write_file(dir / "multi.gz", read_file(dir / "m1.gz") + read_file(dir / "m2.gz"));

  const auto plain = ingest_file(dir / "plain.tsv", IngestOptions{});
  EXPECT_EQ(plain.stats.accepted, 3u);
  for (auto name : {"one.gz", "multi.gz"}) {
    const auto gz = ingest_file(dir / name, IngestOptions{});
    EXPECT_EQ(gz.store, plain.store) << name;
    EXPECT_EQ(gz.stats, plain.stats) << name;
  }
  LineReader reader(dir / "one.gz");
  EXPECT_TRUE(reader.compressed());
}

TEST(LineReader, LongLinesAndEmptyFile) {
  TempDir dir;
  std::string big(3 << 20, 'x');
  write_file(dir / "big.txt", "short\n" + big + "\nend");
  LineReader reader(dir / "big.txt");
  std::string_view line;
  ASSERT_TRUE(reader.next(line));
  EXPECT_EQ(line, "short");
  ASSERT_TRUE(reader.next(line));
  EXPECT_EQ(line.size(), big.size());
  ASSERT_TRUE(reader.next(line));
  EXPECT_EQ(line, "end");
  EXPECT_FALSE(reader.next(line));

  write_file(dir / "empty.txt", "");
  LineReader empty(dir / "empty.txt");
  EXPECT_FALSE(empty.next(line));
}

TEST(LineReader, IoFailures) {
  TempDir dir;
  EXPECT_THROW(ingest_file(dir / "missing.tsv", IngestOptions{}), IoFailure);
  std::string text;
  for (int i = 0; i < 20000; ++i) text += "word" + std::to_string(i % 7) + "\t1900\t1\t1\n";
  write_gzip(dir / "full.gz", text);
  auto bytes = read_file(dir / "full.gz");
  write_file(dir / "cut.gz", bytes.substr(0, bytes.size() / 2));
  EXPECT_THROW(ingest_file(dir / "cut.gz", IngestOptions{}), IoFailure);
}

TEST(IngestFiles, ThreadCountDoesNotChangeOutput) {
  TempDir dir;
  std::mt19937_64 rng(14);
  std::vector<std::filesystem::path> paths;
  for (int i = 0; i < 5; ++i) {
    std::string text;
    for (const auto& l : random_lines(rng, 800)) text += l + "\n";
    paths.push_back(dir / ("part" + std::to_string(i) + ".tsv"));
    if (i % 2) {
      write_gzip(paths.back(), text);
    } else {
      write_file(paths.back(), text);
    }
  }
  const auto one = ingest_files(paths, IngestOptions{}, 1);
  const auto many = ingest_files(paths, IngestOptions{}, 4);
  EXPECT_EQ(encode_cache(one.store), encode_cache(many.store));
  EXPECT_EQ(one.stats, many.stats);
}

TEST(IngestStream, FromIstream) {
  std::istringstream in("a\t1900\t3\t1\nbb\t1900\t1\t1\n");
  const auto r = ingest_stream(in, IngestOptions{});
  EXPECT_EQ(r.store.total(1900), 4);
}
