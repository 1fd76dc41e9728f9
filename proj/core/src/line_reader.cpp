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

#include "lexidyn/line_reader.hpp"

#include <zlib.h>

#include <cstring>

#include "lexidyn/error.hpp"

namespace lexidyn {
namespace {

constexpr std::size_t kChunk = 1 << 20;

}  // namespace

struct LineReader::Inflater {
  z_stream zs{};

  Inflater() {
    if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) throw IoFailure("zlib init failed");
  }
  ~Inflater() { inflateEnd(&zs); }
};

LineReader::LineReader(const std::filesystem::path& path) : name_(path.string()) {
  if (name_ == "-") {
    file_ = stdin;
  } else {
    file_ = std::fopen(name_.c_str(), "rb");
    if (!file_) throw IoFailure("cannot open " + name_ + ": " + std::strerror(errno));
    owns_file_ = true;
  }

  raw_.resize(kChunk);
  buf_.resize(kChunk);
  raw_end_ = read_raw(raw_.data(), raw_.size());
  if (raw_end_ >= 2 && static_cast<unsigned char>(raw_[0]) == 0x1F &&
      static_cast<unsigned char>(raw_[1]) == 0x8B) {
    inflater_ = std::make_unique<Inflater>();
  } else {
    std::swap(raw_, buf_);
    end_ = raw_end_;
    raw_end_ = 0;
    raw_.clear();
    raw_.shrink_to_fit();
  }
}

LineReader::~LineReader() {
  if (owns_file_ && file_) std::fclose(file_);
}

std::size_t LineReader::read_raw(char* dst, std::size_t n) {
  std::size_t got = 0;
  while (got < n) {
    const auto r = std::fread(dst + got, 1, n - got, file_);
    got += r;
    if (r == 0) {
      if (std::ferror(file_)) throw IoFailure("read error on " + name_);
      raw_eof_ = true;
      break;
    }
  }
  return got;
}

bool LineReader::fill() {
  if (eof_) return false;
  if (begin_ > 0) {
    std::memmove(buf_.data(), buf_.data() + begin_, end_ - begin_);
    end_ -= begin_;
    begin_ = 0;
  }
  if (end_ == buf_.size()) buf_.resize(buf_.size() * 2);  // very long line

  if (!inflater_) {
    if (raw_eof_) {
      eof_ = true;
      return false;
    }
    const auto got = read_raw(buf_.data() + end_, buf_.size() - end_);
    end_ += got;
    if (got == 0) eof_ = true;
    return got > 0;
  }

  auto& zs = inflater_->zs;
  const auto before = end_;
  while (end_ == before) {
    if (raw_begin_ == raw_end_) {
      if (!raw_eof_) {
        raw_begin_ = 0;
        raw_end_ = read_raw(raw_.data(), raw_.size());
      }
      if (raw_begin_ == raw_end_) {
        if (member_open_) throw IoFailure("truncated gzip stream in " + name_);
        eof_ = true;
        return false;
      }
    }
    zs.next_in = reinterpret_cast<Bytef*>(raw_.data() + raw_begin_);
    zs.avail_in = static_cast<uInt>(raw_end_ - raw_begin_);
    zs.next_out = reinterpret_cast<Bytef*>(buf_.data() + end_);
    zs.avail_out = static_cast<uInt>(buf_.size() - end_);
    const int rc = inflate(&zs, Z_NO_FLUSH);
    raw_begin_ = raw_end_ - zs.avail_in;
    end_ = buf_.size() - zs.avail_out;
    member_open_ = rc != Z_STREAM_END;
    if (rc == Z_STREAM_END) {
      // concatenated gzip members
      inflateReset(&zs);
    } else if (rc != Z_OK && rc != Z_BUF_ERROR) {
      throw IoFailure("corrupt gzip data in " + name_);
    }
  }
  return true;
}

bool LineReader::next(std::string_view& line) {
  std::size_t scanned = begin_;
  for (;;) {
    if (auto* nl = static_cast<char*>(
            std::memchr(buf_.data() + scanned, '\n', end_ - scanned))) {
      const auto pos = static_cast<std::size_t>(nl - buf_.data());
      line = std::string_view(buf_.data() + begin_, pos - begin_);
      begin_ = pos + 1;
      return true;
    }
    const auto pending = end_ - begin_;
    if (!fill()) {
      if (end_ == begin_) return false;
      line = std::string_view(buf_.data() + begin_, end_ - begin_);
      begin_ = end_;
      return true;
    }
    scanned = begin_ + pending;
  }
}

}  // namespace lexidyn
