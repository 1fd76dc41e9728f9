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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "lexidyn/lexicon.hpp"
#include "lexidyn/store.hpp"
#include "test_support.hpp"

using namespace lexidyn;
using namespace lexidyn::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    if (!line.empty() && line.back() == ',') row.emplace_back();
    rows.push_back(std::move(row));
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    write_file(dir_ / "fixture.tsv", "a\t1900\t1\t1\nabcd\t1900\t1\t1\na\t1901\t1\t1\nabcd\t1901\t3\t1\n");
    const auto r = run({"build", "-i", (dir_ / "fixture.tsv").string(), "-o", cache()});
    ASSERT_EQ(r.code, 0) << r.err;
  }

  std::string cache() const { return (dir_ / "fixture.lxdn").string(); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Random multi-year corpus written as a 1-gram file and built.
  std::string random_cache(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> vocab{"the", "of", "he", "it", "I", "development"};
    for (int i = 0; i < 150; ++i) vocab.push_back(random_word(rng, latin_alphabet(), 1, 11));
    std::uniform_int_distribution<int> count(0, 5000);
    std::string text;
    for (int y = 1900; y <= 1960; ++y) {
      for (const auto& w : vocab) {
        if (&w - vocab.data() < 6 || rng() % 4) text += w + "\t" + std::to_string(y) + "\t" + std::to_string(count(rng)) + "\t1\n";
      }
    }
    const auto tsv = path("random" + std::to_string(seed) + ".tsv");
    const auto out = path("random" + std::to_string(seed) + ".lxdn");
    write_file(tsv, text);
    EXPECT_EQ(run({"build", "-i", tsv, "-o", out}).code, 0);
    return out;
  }

  TempDir dir_;
};

}  // namespace

TEST_F(CliTest, HelpListsFlagsWithDefaults) {
  const auto top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  for (auto sub : {"build", "series", "vocab", "contrib", "topk", "presence", "bands", "words"}) {
    EXPECT_NE(top.out.find(sub), std::string::npos) << sub;
    EXPECT_EQ(run({sub, "--help"}).code, 0) << sub;
  }
  const auto series = run({"series", "--help"});
  for (auto flag : {"--cache", "--years", "--filter", "--smooth", "--cutoff", "--threads",
                    "--config", "--out"}) {
    EXPECT_NE(series.out.find(flag), std::string::npos) << flag;
  }
  EXPECT_NE(series.out.find("[all]"), std::string::npos) << series.out;
  EXPECT_NE(series.out.find("[3]"), std::string::npos) << series.out;
  const auto topk = run({"topk", "--help"});
  EXPECT_NE(topk.out.find("[increase]"), std::string::npos);
  EXPECT_NE(topk.out.find("[linear]"), std::string::npos);
}

TEST_F(CliTest, BuildReport) {
  write_file(path("mixed.tsv"), "a\t1900\t1\t1\n3.14\t1900\t1\t1\nnot a line\na\t1700\t1\t1\n");
  const auto r = run({"build", "-i", path("mixed.tsv"), "-o", path("mixed.lxdn")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lines read: 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("accepted: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("rejected: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("malformed: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("out of range: 1\n"), std::string::npos);
}

TEST_F(CliTest, BuildTotalsReport) {
  write_file(path("totals.txt"), "1900,8,1,1\t1901,8,1,1\t1700,99,1,1\n");
  const auto r = run({"build", "-i", path("fixture.tsv"), "-o", path("t.lxdn"), "--totals",
                      path("totals.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("raw 1-gram tokens in range: 16\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("word share of raw tokens: 0.375000\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, SeriesFixture) {
  const auto r = run({"series", "-c", cache(), "--years", "1800:2008", "--filter", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "year,avg_length\n1900,2.5\n1901,3.25\n");
  EXPECT_EQ(run({"series", "-c", cache(), "--filter", "short"}).out,
            "year,avg_length\n1900,1\n1901,1\n");
  EXPECT_EQ(run({"series", "-c", cache(), "--smooth", "1"}).out,
            "year,avg_length\n1900,2.875\n1901,2.875\n");
}

TEST_F(CliTest, ContribFixture) {
  const auto r = run({"contrib", "-c", cache(), "--period", "1900:1901"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "token,length,p_start,p_end,delta_p,baseline_L,dl_linear,dl_exact\n"
            "a,1,0.5,0.25,-0.25,2.5,0.375,0.75\n"
            "abcd,4,0.5,0.75,0.25,2.5,0.375,0.75\n");
}

TEST_F(CliTest, TopkFixture) {
  const auto r = run({"topk", "-c", cache(), "--period", "1900:1901", "-k", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "rank,token,dl_linear,dl_exact\n1,a,0.375,0.75\n");
  EXPECT_EQ(run({"topk", "-c", cache(), "--period", "1900:1901", "--sign", "decrease"}).out,
            "rank,token,dl_linear,dl_exact\n");
}

TEST_F(CliTest, BandsWordsVocabPresence) {
  EXPECT_EQ(run({"bands", "-c", cache(), "--period", "1900:1901"}).out,
            "length,contribution,share\n1,0.375,0.5\n4,0.375,0.5\n");
  EXPECT_EQ(run({"bands", "-c", cache(), "--period", "1900:1901", "--no-normalize"}).out,
            "length,contribution,share\n1,0.375,\n4,0.375,\n");
  EXPECT_EQ(run({"words", "-c", cache(), "-t", "a,zz"}).out,
            "token,year,freq\na,1900,0.5\na,1901,0.25\nzz,1900,0\nzz,1901,0\n");
  const auto v = run({"vocab", "-c", cache(), "--threshold", "0.3"});
  EXPECT_EQ(v.out, "year,vocab,fitted\n1900,2,2\n1901,1,1\n");
  EXPECT_NE(v.err.find("slope: -1 words/year"), std::string::npos) << v.err;
  EXPECT_EQ(run({"presence", "-c", cache(), "-k", "1", "--sign", "both"}).out,
            "token,1900-1901\na,+\n");
}

TEST_F(CliTest, OutFile) {
  const auto r = run({"series", "-c", cache(), "-o", path("series.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(read_file(path("series.csv")), "year,avg_length\n1900,2.5\n1901,3.25\n");
}

TEST_F(CliTest, ExitCodes) {
  write_file(path("junk.tsv"), "3.14\t1900\t1\t1\n");
  EXPECT_EQ(run({"build", "-i", path("junk.tsv"), "-o", path("junk.lxdn")}).code, 2);
  EXPECT_FALSE(std::filesystem::exists(path("junk.lxdn")));
  write_file(path("empty.tsv"), "");
  EXPECT_EQ(run({"build", "-i", path("empty.tsv"), "-o", path("e.lxdn")}).code, 2);
  EXPECT_EQ(run({"build", "-i", path("missing.tsv"), "-o", path("m.lxdn")}).code, 1);

  EXPECT_EQ(run({"series", "-c", path("missing.lxdn")}).code, 1);
  write_file(path("bad.lxdn"), "LXDN garbage");
  EXPECT_EQ(run({"series", "-c", path("bad.lxdn")}).code, 1);

  const auto absent = run({"contrib", "-c", cache(), "--period", "1900:1950"});
  EXPECT_EQ(absent.code, 3);
  EXPECT_NE(absent.err.find("1950"), std::string::npos) << absent.err;
  EXPECT_EQ(run({"series", "-c", cache(), "--years", "1950:1960"}).code, 3);
  EXPECT_EQ(run({"contrib", "-c", cache(), "--period", "1901:1900"}).code, 3);
  const auto empty_filter = run({"series", "-c", cache(), "--filter", "long", "--cutoff", "5"});
  EXPECT_EQ(empty_filter.code, 3);
  EXPECT_NE(empty_filter.err.find("long>5"), std::string::npos) << empty_filter.err;
  EXPECT_EQ(run({"presence", "-c", cache(), "--breakpoints", "1901,1900"}).code, 3);

  EXPECT_EQ(run({"series", "-c", cache(), "--bogus"}).code, 4);
  EXPECT_EQ(run({"series", "-c", cache(), "--filter", "nouns"}).code, 4);
  EXPECT_EQ(run({"series", "-c", cache(), "--smooth", "-1"}).code, 4);
  EXPECT_EQ(run({"topk", "-c", cache(), "--period", "1900:1901", "--sign", "up"}).code, 4);
  EXPECT_EQ(run({"contrib", "-c", cache(), "--period", "nineteen"}).code, 4);
  EXPECT_EQ(run({"build", "-i", path("fixture.tsv"), "--ruleset", "nope"}).code, 4);
  EXPECT_EQ(run({}).code, 4);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  write_file(path("run.cfg"), "# defaults\nsmooth = 1\nfilter=short\n");
  EXPECT_EQ(run({"series", "-c", cache(), "--config", path("run.cfg")}).out,
            "year,avg_length\n1900,1\n1901,1\n");
  EXPECT_EQ(run({"series", "-c", cache(), "--config", path("run.cfg"), "--filter", "all",
                 "--smooth", "0"})
                .out,
            "year,avg_length\n1900,2.5\n1901,3.25\n");
  write_file(path("bad.cfg"), "colour=red\n");
  EXPECT_EQ(run({"series", "-c", cache(), "--config", path("bad.cfg")}).code, 4);
  write_file(path("cache.cfg"), "cache=" + cache() + "\n");
  EXPECT_EQ(run({"series", "--config", path("cache.cfg")}).code, 0);
}

TEST_F(CliTest, CacheFromEnvironment) {
  ::setenv("LEXIDYN_CACHE", cache().c_str(), 1);
  const auto r = run({"series"});
  ::unsetenv("LEXIDYN_CACHE");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "year,avg_length\n1900,2.5\n1901,3.25\n");
}

TEST_F(CliTest, RussianBuildWithRuleset) {
  write_file(path("ru.tsv"), "миръ\t1900\t3\t1\nмир\t1900\t2\t1\nхлѣбъ\t1900\t5\t1\nthe\t1900\t9\t1\n");
  const auto r = run({"build", "-i", path("ru.tsv"), "-o", path("ru.lxdn"), "--lang", "ru",
                      "--ruleset", "r1918"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("distinct words: 2\n"), std::string::npos) << r.out;
  EXPECT_EQ(run({"words", "-c", path("ru.lxdn"), "-t", "миръ,хлеб"}).out,
            "token,year,freq\nмир,1900,0.5\nхлеб,1900,0.5\n");
  EXPECT_EQ(run({"series", "-c", path("ru.lxdn"), "--filter", "function"}).code, 3);
}

TEST_F(CliTest, ClassFiltersUseShippedLists) {
  const auto c = random_cache(7);
  const auto fn = run({"topk", "-c", c, "--period", "1900:1960", "--class", "function",
                       "--sign", "both", "-k", "50"});
  ASSERT_EQ(fn.code, 0) << fn.err;
  const auto classifier = Classifier::load_language(
      std::filesystem::path(LEXIDYN_SOURCE_DATA_DIR) / "lists", "en");
  const auto rows = parse_csv(fn.out);
  ASSERT_GT(rows.size(), 2u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cls = classifier.classify(rows[i][1]);
    EXPECT_TRUE(cls == kFunctionClass || cls == kPronounClass) << rows[i][1];
  }
  const auto pr = run({"series", "-c", c, "--filter", "pronoun-personal"});
  EXPECT_EQ(pr.code, 0) << pr.err;
}

TEST_F(CliTest, CsvRoundTripsDerivedColumns) {
  const auto c = random_cache(11);
  const auto r = run({"contrib", "-c", c, "--period", "1910:1950"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_GT(rows.size(), 10u);
  double sum = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), 8u);
    const double l = std::stod(rows[i][1]), ps = std::stod(rows[i][2]), pe = std::stod(rows[i][3]);
    const double dp = std::stod(rows[i][4]), L = std::stod(rows[i][5]);
    const double lin = std::stod(rows[i][6]);
    // each printed value carries up to 5e-12 relative rounding (12 digits)
    const double rel = 1e-11;
    ASSERT_NEAR(dp, pe - ps, rel * (std::abs(ps) + std::abs(pe)));
    ASSERT_NEAR(lin, dp * (l - L), rel * std::abs(dp) * (l + L));
    if (!rows[i][7].empty() && ps < 1) {
      const double ex = dp / (1 - ps) * (l - L);
      ASSERT_NEAR(std::stod(rows[i][7]), ex, rel * (std::abs(ex) + std::abs(dp) * (l + L) / (1 - ps)));
    }
    sum += lin;
  }
  const auto series = parse_csv(run({"series", "-c", c, "--years", "1910:1950"}).out);
  const double L1 = std::stod(series[1][1]), L2 = std::stod(series.back()[1]);
  EXPECT_NEAR(sum, L2 - L1, 1e-9);
}

TEST_F(CliTest, DeterministicAcrossRunsAndThreads) {
  const auto c = random_cache(13);
  const std::vector<std::vector<std::string>> commands{
      {"series", "--smooth", "3"},
      {"vocab", "--threshold", "1e-4"},
      {"contrib", "--period", "1900:1930", "--smooth", "2"},
      {"topk", "--period", "1920:1960", "--sign", "both", "--metric", "exact"},
      {"presence", "--breakpoints", "1900,1915,1930,1945,1960", "-k", "5"},
      {"bands", "--period", "1900:1960"},
      {"words", "-t", "the,he,it", "--smooth", "5"}};
  for (auto cmd : commands) {
    cmd.insert(cmd.end(), {"-c", c});
    auto one = cmd, four = cmd;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const auto a = run(one), b = run(one), d = run(four);
    ASSERT_EQ(a.code, 0) << cmd[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd[0];
    EXPECT_EQ(a.out, d.out) << cmd[0];
  }
}
