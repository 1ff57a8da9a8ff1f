// Copyright 2026 The globent Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace globent {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input could not be interpreted (malformed files, bad arguments, bad config).
/// The CLI maps this family to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownFixture : public InputError {
 public:
  using InputError::InputError;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class EmptySubset : public InputError {
 public:
  using InputError::InputError;
};

class FullSubset : public InputError {
 public:
  using InputError::InputError;
};

/// Numerical failure. The CLI maps this family to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ZeroState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NormalizationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NormalizationFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateGround : public NumericalError {
 public:
  DegenerateGround(const std::string& what, double gap)
      : NumericalError(what), gap_(gap) {}
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

}  // namespace globent
