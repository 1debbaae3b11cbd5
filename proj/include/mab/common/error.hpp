// Copyright 2026 The mab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mab {

// Error taxonomy. The CLI maps each family onto a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or arguments: exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bad or missing input data: exit status 3.
class DataError : public Error {
 public:
  using Error::Error;
};

// Catalogue entry violates a record invariant (missing id/title, duplicate id).
class LoadError : public DataError {
 public:
  using DataError::DataError;
};

// Malformed JSON / JSONL input. `offset` is the byte offset into the file.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t offset) : DataError(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A table file could not be sampled (unreadable, empty, no header).
class SamplingError : public DataError {
 public:
  using DataError::DataError;
};

// Generation / embedding backend failure: exit status 4 when it aborts a run.
class BackendError : public Error {
 public:
  BackendError(const std::string& what, int status = 0, bool transient = false)
      : Error(what), status_(status), transient_(transient) {}

  // HTTP status, or 0 for transport-level failures.
  int status() const noexcept { return status_; }
  bool transient() const noexcept { return transient_; }

 private:
  int status_;
  bool transient_;
};

class DimensionMismatch : public BackendError {
 public:
  explicit DimensionMismatch(const std::string& what) : BackendError(what, 0, false) {}
};

}  // namespace mab
