// Copyright 2026 The Authors.
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

namespace hypermat {

/// Base class for all library errors. Subclasses exist so callers can
/// distinguish usage errors (bad parameters, bad files) from verification
/// failures when mapping to process exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter / construction errors.
struct NotPrimePower : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct InvalidLineSet : Error { using Error::Error; };
struct BasepointLoop : Error { using Error::Error; };
struct BadRank : Error { using Error::Error; };
struct NoTriangle : Error { using Error::Error; };
struct NoPrimePower : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// Input document errors.
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

/// A consistency check failed while re-verifying a constructed object.
struct VerificationFailed : Error { using Error::Error; };

}  // namespace hypermat
