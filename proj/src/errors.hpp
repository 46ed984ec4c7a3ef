// Copyright 2026 The vqcompile Authors.
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

namespace vqc {

/// Base class for all recoverable errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A gate/target specification that cannot be realized (unknown kind,
/// non-unitary base, bad wire list, ...).
class InvalidSpecError : public Error {
 public:
  explicit InvalidSpecError(const std::string& what) : Error(what) {}
};

/// Operands whose dimensions are incompatible.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// |Tr(T^dag U)| fell below the singular threshold: the distance gradient
/// is undefined at such points and callers must fall back or re-seed.
class SingularOverlapError : public Error {
 public:
  explicit SingularOverlapError(const std::string& what) : Error(what) {}
};

}  // namespace vqc
