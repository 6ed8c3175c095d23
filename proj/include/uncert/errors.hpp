// Copyright 2026 The uncert authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace uncert {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Shape or block-structure mismatch between operands.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Argument outside its mathematical domain (alpha range, m > M, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Numerical breakdown: eigensolver failure, cross-route disagreement.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// rho fails the Phi-density requirement of the operation.
class PhiDensityError : public Error {
  public:
    using Error::Error;
};

/// No nonnegative block-trace solution for the density constraints.
class FeasibilityError : public Error {
  public:
    using Error::Error;
};

/// Invalid campaign/CLI configuration.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Serialized input does not match the expected schema.
class SchemaError : public Error {
  public:
    using Error::Error;
};

} // namespace uncert
