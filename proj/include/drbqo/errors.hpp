// Copyright 2026 The drbqo Authors. All Rights Reserved.
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
// =============================================================================

#ifndef DRBQO_ERRORS_HPP_
#define DRBQO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace drbqo {

/// Raised when a linear-algebra routine fails after all recovery attempts
/// (e.g. Cholesky factorization that stays indefinite through the whole
/// jitter escalation schedule).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for malformed configuration files or CLI arguments.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace drbqo

#endif  // DRBQO_ERRORS_HPP_
