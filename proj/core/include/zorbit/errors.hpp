// Copyright 2026 The zorbit Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zorbit {

/// A base, modulus or other numeric parameter is outside the admitted domain.
class ParameterDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A digit vector holds a digit that is not in [0, base).
class DigitDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A verifier was invoked on parameters that do not meet its stated
/// hypothesis. `failed_conditions()` names them ("a", "b", "c").
class PreconditionError : public ParameterDomainError {
 public:
  PreconditionError(const std::string& what, std::vector<std::string> failed)
      : ParameterDomainError(what), failed_(std::move(failed)) {}

  const std::vector<std::string>& failed_conditions() const noexcept {
    return failed_;
  }

 private:
  std::vector<std::string> failed_;
};

/// The absorbing set is too large to enumerate in memory.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zorbit
