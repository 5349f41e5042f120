// Copyright 2026 The domlab Authors
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

#ifndef DOMLAB_ERRORS_H_
#define DOMLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace domlab {

// Requested size exceeds what a representation can hold (vertex count,
// exhaustive enumeration range).
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Caller broke a structural precondition (a pair that should be an edge is
// not, a set that should dominate does not, ...). The message names the
// offending element.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace domlab

#endif  // DOMLAB_ERRORS_H_
