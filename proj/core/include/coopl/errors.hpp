// Copyright 2026 The Coopl Authors
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

#ifndef COOPL_ERRORS_HPP_
#define COOPL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace coopl {

// Thrown when a bounded internal retry or iteration budget is exhausted
// (rejection-sampling retry caps, walk restarts, and similar).
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an input document (JSON game, distribution, sample file, ...)
// fails to parse or violates a schema invariant.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coopl

#endif  // COOPL_ERRORS_HPP_
