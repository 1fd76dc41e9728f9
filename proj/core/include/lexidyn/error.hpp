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

#include <stdexcept>
#include <string>

namespace lexidyn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedLine : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class YearAbsent : public Error {
 public:
  explicit YearAbsent(int year)
      : Error("year " + std::to_string(year) + " is absent from the store"),
        year_(year) {}

  int year() const noexcept { return year_; }

 private:
  int year_;
};

/// A selection (filter, class, period) left nothing to compute on.
class EmptySelection : public Error {
 public:
  using Error::Error;
};

/// Raised for p_k = 1: the rest of the distribution is empty.
class DegenerateDistribution : public Error {
 public:
  using Error::Error;
};

class ProvenanceMismatch : public Error {
 public:
  using Error::Error;
};

class CacheVersionMismatch : public Error {
 public:
  CacheVersionMismatch(unsigned found, unsigned expected)
      : Error("cache format version " + std::to_string(found) +
              " is not supported (expected " + std::to_string(expected) + ")"),
        found_(found) {}

  unsigned found() const noexcept { return found_; }

 private:
  unsigned found_;
};

class CorruptCache : public Error {
 public:
  using Error::Error;
};

class EmptyList : public Error {
 public:
  using Error::Error;
};

class InvalidRuleset : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class InvalidBreakpoints : public Error {
 public:
  using Error::Error;
};

class SettingsMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace lexidyn
