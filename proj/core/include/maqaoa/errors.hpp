// Copyright 2026 The maqaoa Authors

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

namespace maqaoa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands live on different qubit counts or vector lengths disagree.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Requested problem size is outside the supported range.
class InvalidSizeError : public Error {
  public:
    using Error::Error;
};

/// A scalar argument is outside its admissible domain.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Gates, parameters and layout do not describe the same circuit.
class LayoutError : public Error {
  public:
    using Error::Error;
};

/// Instance is unusable for the requested operation (e.g. empty Hamiltonian).
class InvalidInstanceError : public Error {
  public:
    using Error::Error;
};

/// Exact simulation or brute force refused because of the qubit guard.
class GuardError : public Error {
  public:
    using Error::Error;
};

/// Approximation ratio requested for an instance with e_max == e_min.
class UndefinedRatioError : public Error {
  public:
    using Error::Error;
};

/// Optimizer met a NaN or infinite gradient component.
class NonFiniteGradientError : public Error {
  public:
    using Error::Error;
};

/// Malformed JSON document or text rendering.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace maqaoa
