// Copyright 2026 The adaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace adaudit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on configuration values was violated.
class InvalidConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Not enough voters of a gender in its designated county half.
class InsufficientPopulationError : public Error {
 public:
  using Error::Error;
};

/// A delivery report lacks the breakdown an operation requires.
class UnsupportedReportError : public Error {
 public:
  using Error::Error;
};

/// A tally with n = 0 where a proportion is needed.
class EmptySampleError : public Error {
 public:
  using Error::Error;
};

/// Pooled proportion is 0 or 1; the Z statistic is undefined.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

/// Zero effect size: no finite sample detects it.
class InfiniteSampleError : public Error {
 public:
  using Error::Error;
};

/// Two campaigns submitted as a pair do not share an audience/window.
class InvalidPairingError : public Error {
 public:
  using Error::Error;
};

/// A trial suite definition is unusable (empty, duplicated partitions, ...).
class InvalidSuiteError : public Error {
 public:
  using Error::Error;
};

/// Connection-level failure talking to the marketing API.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// Application-level marketing API error: carries the HTTP status and the
/// machine-readable code from the `{code, message}` error body.
class ApiError : public Error {
 public:
  ApiError(int status, std::string code, const std::string& message)
      : Error(message), status_(status), code_(std::move(code)) {}

  int status() const { return status_; }
  const std::string& code() const { return code_; }

 private:
  int status_;
  std::string code_;
};

}  // namespace adaudit
