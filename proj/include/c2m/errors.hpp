// Copyright 2026 The c2mcollab Authors
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

#ifndef C2M_ERRORS_HPP
#define C2M_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace c2m {

// Bad generator or suite configuration.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard tripped (coalition enumeration, brute-force search space,
// simplex tableau memory).
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Instance file could not be decoded; message carries the location
// (byte offset for syntax errors, field path otherwise).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical breakdown inside the LP kernel (no acceptable pivot, or the
// final feasibility recheck failed).
struct SimplexError : std::runtime_error {
  explicit SimplexError(const std::string& what) : std::runtime_error(what) {}
};

// The profit-allocation LP has no feasible point at all (only possible
// when the grand-coalition profit is negative and profits must stay
// nonnegative). Carries a short diagnostic.
struct AllocationInfeasibleError : std::runtime_error {
  explicit AllocationInfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace c2m

#endif  // C2M_ERRORS_HPP
