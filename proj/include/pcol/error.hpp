// Copyright 2026 The pcol Authors.
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

#ifndef PCOL_ERROR_HPP_
#define PCOL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pcol {

// Malformed or out-of-contract input (bad file, loop, wrong degree, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant of the construction failed. Seeing one of these
// means either a bug or a counterexample to a proven statement.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pcol

#endif  // PCOL_ERROR_HPP_
