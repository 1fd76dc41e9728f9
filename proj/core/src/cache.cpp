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

// Cache layout (all integers little-endian):
//
//   "LXDN"
//   u32 format_version
//   i32 year_min, i32 year_max
//   u64 token_count
//   u32 provenance length, provenance bytes (UTF-8)
//   varint year_count, year_count x varint year delta (first from year_min)
//   token_count x (varint length, token bytes), lexicographically sorted
//   token_count x (varint n, n x (varint year delta, varint count))
//   u32 CRC-32 of every byte after the magic
//
// Year deltas in a posting list start from year_min; counts are > 0.

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <iterator>

#include "lexidyn/error.hpp"
#include "lexidyn/store.hpp"
#include "lexidyn/utf8.hpp"

namespace lexidyn {
namespace {

constexpr std::string_view kMagic = "LXDN";

class Writer {
 public:
  void bytes(std::string_view s) { out_.append(s); }

  template <typename T>
  void fixed(T value) {
    auto u = static_cast<std::make_unsigned_t<T>>(value);
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      out_.push_back(static_cast<char>(u & 0xFF));
      u = static_cast<decltype(u)>(u >> 8);
    }
  }

  void varint(std::uint64_t v) {
    while (v >= 0x80) {
      out_.push_back(static_cast<char>((v & 0x7F) | 0x80));
      v >>= 7;
    }
    out_.push_back(static_cast<char>(v));
  }

  std::string& str() { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::string_view bytes(std::size_t n) {
    need(n);
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  template <typename T>
  T fixed() {
    need(sizeof(T));
    std::make_unsigned_t<T> u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      u |= static_cast<decltype(u)>(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    }
    pos_ += sizeof(T);
    return static_cast<T>(u);
  }

  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      need(1);
      const auto b = static_cast<unsigned char>(in_[pos_++]);
      v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
    }
    throw CorruptCache("varint overflow");
  }

  bool done() const noexcept { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw CorruptCache("cache truncated");
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

std::uint32_t crc(std::string_view s) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(s.data()), static_cast<uInt>(s.size())));
}

}  // namespace

std::string encode_cache(const FrequencyStore& store) {
  Writer w;
  w.bytes(kMagic);
  w.fixed<std::uint32_t>(kCacheFormatVersion);
  w.fixed<std::int32_t>(store.year_range().min);
  w.fixed<std::int32_t>(store.year_range().max);
  w.fixed<std::uint64_t>(store.token_count());
  w.fixed<std::uint32_t>(static_cast<std::uint32_t>(store.provenance().size()));
  w.bytes(store.provenance());

  w.varint(store.years().size());
  int prev = store.year_range().min;
  for (int year : store.years()) {
    w.varint(static_cast<std::uint64_t>(year - prev));
    prev = year;
  }

  for (const auto& word : store.words()) {
    w.varint(word.token.size());
    w.bytes(word.token);
  }

  for (TokenId id = 0; id < store.token_count(); ++id) {
    const auto list = store.postings(id);
    w.varint(list.size());
    int last = store.year_range().min;
    for (const auto& p : list) {
      w.varint(static_cast<std::uint64_t>(p.year - last));
      w.varint(static_cast<std::uint64_t>(p.count));
      last = p.year;
    }
  }

  const auto sum = crc(std::string_view(w.str()).substr(kMagic.size()));
  w.fixed<std::uint32_t>(sum);
  return std::move(w.str());
}

FrequencyStore decode_cache(std::string_view bytes) {
  if (bytes.size() < kMagic.size() || bytes.substr(0, kMagic.size()) != kMagic) {
    throw CorruptCache("not a lexidyn cache (bad magic)");
  }
  Reader header(bytes.substr(kMagic.size()));
  const auto version = header.fixed<std::uint32_t>();
  if (version != kCacheFormatVersion) throw CacheVersionMismatch(version, kCacheFormatVersion);

  if (bytes.size() < kMagic.size() + 8) throw CorruptCache("cache truncated");
  const auto body = bytes.substr(kMagic.size(), bytes.size() - kMagic.size() - 4);
  Reader trailer(bytes.substr(bytes.size() - 4));
  if (crc(body) != trailer.fixed<std::uint32_t>()) throw CorruptCache("cache checksum mismatch");

  Reader r(body);
  r.fixed<std::uint32_t>();
  YearRange range{r.fixed<std::int32_t>(), r.fixed<std::int32_t>()};
  if (range.max < range.min) throw CorruptCache("invalid year range");
  const auto token_count = r.fixed<std::uint64_t>();
  const auto prov_len = r.fixed<std::uint32_t>();
  std::string provenance(r.bytes(prov_len));

  StoreBuilder builder(range, std::move(provenance));
  const auto year_count = r.varint();
  std::int64_t year = range.min;
  for (std::uint64_t i = 0; i < year_count; ++i) {
    const auto delta = r.varint();
    if ((i > 0 && delta == 0) || delta > static_cast<std::uint64_t>(range.max - year)) {
      throw CorruptCache("invalid year table");
    }
    year += static_cast<std::int64_t>(delta);
    builder.mark_year(static_cast<int>(year));
  }

  std::vector<std::uint32_t> ids;
  ids.reserve(token_count);
  std::string_view prev_token;
  for (std::uint64_t i = 0; i < token_count; ++i) {
    const auto token = r.bytes(r.varint());
    if (token.empty() || !utf8::valid(token) || (i > 0 && !(prev_token < token))) {
      throw CorruptCache("invalid token table");
    }
    ids.push_back(builder.intern(token));
    prev_token = token;
  }

  for (std::uint64_t i = 0; i < token_count; ++i) {
    const auto n = r.varint();
    if (n == 0) throw CorruptCache("empty posting list");
    std::int64_t last = range.min;
    for (std::uint64_t j = 0; j < n; ++j) {
      const auto delta = r.varint();
      const auto count = r.varint();
      if ((j > 0 && delta == 0) || delta > static_cast<std::uint64_t>(range.max - last) ||
          count == 0 || count > static_cast<std::uint64_t>(INT64_MAX)) {
        throw CorruptCache("invalid posting");
      }
      last += static_cast<std::int64_t>(delta);
      builder.add(ids[i], static_cast<int>(last), static_cast<Count>(count));
    }
  }
  if (!r.done()) throw CorruptCache("trailing bytes in cache");

  auto store = std::move(builder).seal();
  if (store.years().size() != year_count) throw CorruptCache("posting year missing from year table");
  return store;
}

void save_cache(const FrequencyStore& store, const std::filesystem::path& path) {
  const auto bytes = encode_cache(store);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw IoFailure("write failed: " + path.string());
}

FrequencyStore load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open cache " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoFailure("read failed: " + path.string());
  return decode_cache(bytes);
}

}  // namespace lexidyn
