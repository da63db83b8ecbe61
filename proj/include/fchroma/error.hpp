// Copyright 2026 The fchroma Authors
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

namespace fchroma {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph construction, parse failures, unknown tokens.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A color was queried that the capacity map does not cover.
class CapacityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exhaustive oracle refused an instance larger than its configured limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// The solver contradicted its own invariants. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fchroma
