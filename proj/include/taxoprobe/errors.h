/* Copyright 2026 The taxoprobe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TAXOPROBE_ERRORS_H_
#define TAXOPROBE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace taxoprobe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data. `line` is 1-based; 0 when the error is not tied to a row.
class DataError : public Error {
 public:
  DataError(std::string source, size_t line, const std::string& what)
      : Error(line == 0 ? source + ": " + what
                        : source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  size_t line() const { return line_; }

 private:
  std::string source_;
  size_t line_;
};

class TemplateError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Backend failure. Retryable failures (transport errors, 5xx) are retried
// with backoff by the remote clients before surfacing.
class OracleError : public Error {
 public:
  OracleError(const std::string& what, bool retryable)
      : Error(what), retryable_(retryable) {}

  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

class RunError : public Error {
 public:
  using Error::Error;
};

}  // namespace taxoprobe

#endif  // TAXOPROBE_ERRORS_H_
