// Copyright 2026 The dspp2 Authors
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

#ifndef DSPP_ERRORS_HPP_
#define DSPP_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dspp {

// Malformed or invalid user input (bad file, bad vertex id, bad graph).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search hit its configured budget. Never a silent answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural invariant failed; indicates a bug, not a bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotAcyclicError : public std::runtime_error {
 public:
  NotAcyclicError(const std::string& what, std::vector<std::uint32_t> cycle)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}

  // Cells along the offending cycle; a single cell for a loop.
  const std::vector<std::uint32_t>& cycle() const { return cycle_; }

 private:
  std::vector<std::uint32_t> cycle_;
};

}  // namespace dspp

#endif  // DSPP_ERRORS_HPP_
