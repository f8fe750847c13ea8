// Copyright 2026 The Flowline Authors
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

#ifndef FLOWLINE_ERRORS_HPP_
#define FLOWLINE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace flowline {

// Bad input data (malformed files, out-of-range fields, infeasible
// configs). The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Internal failure while constructing a network (fixed-point overflow,
// non-finite cost). Exit code 1 territory.
class BuildError : public std::runtime_error {
 public:
  explicit BuildError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flowline

#endif  // FLOWLINE_ERRORS_HPP_
