// Copyright 2026 The cayley-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAYLEY_ERROR_HPP
#define CAYLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cayley {

/// Bad user input: malformed notation, unknown names, caps exceeded.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold did not. Always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cayley

#endif  // CAYLEY_ERROR_HPP
