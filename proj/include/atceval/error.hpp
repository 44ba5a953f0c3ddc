// include/atceval/error.hpp

// Copyright 2026  the atceval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ATCEVAL_ERROR_HPP_
#define ATCEVAL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace atceval {

// Base for all toolkit exceptions. Module-specific subclasses carry a typed
// error code so callers and tests can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

template <typename Code>
class CodedError : public Error {
 public:
  CodedError(Code code, const std::string &msg) : Error(msg), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

}  // namespace atceval

#endif  // ATCEVAL_ERROR_HPP_
