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

#include <iosfwd>
#include <string>
#include <vector>

namespace lexidyn::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kEmptyBuild = 2,
  kBadSelection = 3,
  kBadFlags = 4,
};

/// Every knob of every subcommand. Defaults here are the documented ones;
/// a --config file overrides them and command-line flags override the file.
struct RunConfig {
  std::vector<std::string> inputs;
  std::string cache = "lexidyn.lxdn";
  std::string lang = "en";
  std::string years;  // "a:b"; empty means the cache's full range (build: 1800:2008)
  int smooth = 0;
  int cutoff = 3;
  std::string filter = "all";
  std::string word_class = "all";
  std::string ruleset = "empty";
  std::string scripts;  // comma list; empty means the language default
  bool case_fold = false;
  double threshold = 1e-9;
  std::string breakpoints;  // comma list; empty means 25-year grid
  std::string period;
  int k = 10;
  std::string sign = "increase";
  std::string metric = "linear";
  std::string tokens;
  bool normalize = true;
  std::string out;
  std::string totals;
  std::string data_dir;
  unsigned threads = 1;
};

/// Runs one invocation; args exclude the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexidyn::cli
