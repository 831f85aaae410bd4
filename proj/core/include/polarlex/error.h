// Copyright 2026 The Polarlex Authors.
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

#ifndef POLARLEX_ERROR_H_
#define POLARLEX_ERROR_H_

#include <stdexcept>
#include <string>

namespace polarlex {

// Broad failure categories. The command-line driver maps these onto exit
// codes, so new kinds must be added there as well.
enum class ErrorKind {
  kUsage,
  kParse,
  kValidation,
  kOutOfVocabulary,
  kDegenerate,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorKind::kParse, message) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorKind::kValidation, message) {}
};

class OutOfVocabularyError : public Error {
 public:
  explicit OutOfVocabularyError(const std::string& message)
      : Error(ErrorKind::kOutOfVocabulary, message) {}
};

// A model cannot be estimated from the given data, e.g. one class is empty.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& message)
      : Error(ErrorKind::kDegenerate, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorKind::kIo, message) {}
};

}  // namespace polarlex

#endif  // POLARLEX_ERROR_H_
