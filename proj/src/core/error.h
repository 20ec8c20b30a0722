// Copyright 2026 The Rhesis Authors.
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

#ifndef RHESIS_CORE_ERROR_H_
#define RHESIS_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace rhesis {

// Every failure raised by the core carries one of these kinds; the C API
// maps them one-to-one onto status codes.
enum class ErrorKind {
  kInvalidArgument,
  kParse,       // malformed line in an input stream
  kStructure,   // well-formed input describing an invalid dependency tree
  kAlignment,   // gold text does not line up with the parsed sentence
  kFormat,      // malformed gold / score / weight document
  kConfig,
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

inline Error ParseError(int line, const std::string& what) {
  return Error(ErrorKind::kParse,
               "line " + std::to_string(line) + ": " + what);
}

inline Error FormatError(int line, const std::string& what) {
  return Error(ErrorKind::kFormat,
               "line " + std::to_string(line) + ": " + what);
}

}  // namespace rhesis

#endif  // RHESIS_CORE_ERROR_H_
