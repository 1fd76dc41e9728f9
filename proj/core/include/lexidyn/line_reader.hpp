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

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lexidyn {

/// Buffered line reader over a file or standard input ("-"). Input that
/// starts with the gzip magic 0x1F 0x8B is inflated on the fly, including
/// multi-member streams. Lines are returned without the LF terminator.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path);
  ~LineReader();

  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  /// The view stays valid until the next call.
  bool next(std::string_view& line);

  bool compressed() const noexcept { return inflater_ != nullptr; }

 private:
  struct Inflater;

  bool fill();
  std::size_t read_raw(char* dst, std::size_t n);

  std::string name_;
  std::FILE* file_ = nullptr;
  bool owns_file_ = false;
  std::unique_ptr<Inflater> inflater_;

  std::vector<char> raw_;  // compressed input
  std::size_t raw_begin_ = 0;
  std::size_t raw_end_ = 0;
  bool raw_eof_ = false;
  bool member_open_ = false;

  std::vector<char> buf_;  // decoded bytes
  std::size_t begin_ = 0;
  std::size_t end_ = 0;
  bool eof_ = false;
};

}  // namespace lexidyn
