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

#include "lexidyn/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <memory>

#include "lexidyn/error.hpp"

namespace lexidyn {
namespace {

std::string label_for_stem(const std::string& stem) {
  if (stem == kFunctionClass || stem == kContentClass || stem == kPronounClass) return stem;
  return "custom:" + stem;
}

}  // namespace

WordClassList load_list(const std::filesystem::path& path, const NormalizationRuleset& rules,
                        const TokenFilterConfig& filter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open word list " + path.string());

  WordClassList list;
  list.source = path;
  list.label = label_for_stem(path.stem().string());
  list.language = path.parent_path().filename().string();

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t");
    if (auto token = canonical_token(std::string_view(line).substr(b, e - b + 1), filter, rules)) {
      list.members.insert(std::move(*token));
    }
  }
  if (in.bad()) throw IoFailure("read error on " + path.string());
  if (list.members.empty()) throw EmptyList("word list " + path.string() + " has no entries");
  return list;
}

Classifier::Classifier(std::vector<WordClassList> lists) : lists_(std::move(lists)) {
  std::stable_partition(lists_.begin(), lists_.end(),
                        [](const WordClassList& l) { return l.label == kPronounClass; });
}

std::string_view Classifier::classify(std::string_view token) const {
  for (const auto& list : lists_) {
    if (list.contains(token)) return list.label;
  }
  return kContentClass;
}

Classifier Classifier::load_language(const std::filesystem::path& lists_dir,
                                     std::string_view language, const NormalizationRuleset& rules,
                                     const TokenFilterConfig& filter) {
  const auto dir = lists_dir / std::string(language);
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoFailure("no word lists for language '" + std::string(language) + "' in " +
                    lists_dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<WordClassList> lists;
  for (const auto& f : files) lists.push_back(load_list(f, rules, filter));
  return Classifier(std::move(lists));
}

std::pair<WordFilter, WordFilter> split_by_length(int cutoff) {
  if (cutoff < 1) throw InvalidConfig("length cutoff must be >= 1");
  const auto suffix = "<=" + std::to_string(cutoff);
  return {WordFilter("short" + suffix, [cutoff](std::string_view, int len) { return len <= cutoff; }),
          WordFilter("long>" + std::to_string(cutoff),
                     [cutoff](std::string_view, int len) { return len > cutoff; })};
}

WordFilter class_filter(const Classifier& classifier, std::string_view class_name) {
  if (class_name == "all") return WordFilter::all();
  auto shared = std::make_shared<const Classifier>(classifier);
  std::string name(class_name);
  if (class_name == kFunctionClass) {
    return WordFilter(name, [shared](std::string_view token, int) {
      const auto label = shared->classify(token);
      return label == kFunctionClass || label == kPronounClass;
    });
  }
  return WordFilter(name, [shared, name](std::string_view token, int) {
    return shared->classify(token) == name;
  });
}

}  // namespace lexidyn
