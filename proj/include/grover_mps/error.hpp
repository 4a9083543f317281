// Copyright 2026 The grover-mps Authors
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

#ifndef GROVER_MPS_ERROR_HPP
#define GROVER_MPS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grover {

enum class ErrorKind {
    InvalidInput,
    InvalidGate,
    NumericalFailure,
    CapacityExceeded,
    Io,
};

const char *to_string(ErrorKind kind);

/// Base class for every error raised by the library. The kind is carried
/// separately so callers (the bench harness, the python bindings) can map
/// it without catching each subclass.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class InvalidInput : public Error {
  public:
    explicit InvalidInput(const std::string &message) : Error(ErrorKind::InvalidInput, message) {}
};

class InvalidGate : public Error {
  public:
    explicit InvalidGate(const std::string &message) : Error(ErrorKind::InvalidGate, message) {}
};

class NumericalFailure : public Error {
  public:
    explicit NumericalFailure(const std::string &message) : Error(ErrorKind::NumericalFailure, message) {}
};

class CapacityExceeded : public Error {
  public:
    explicit CapacityExceeded(const std::string &message) : Error(ErrorKind::CapacityExceeded, message) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string &message) : Error(ErrorKind::Io, message) {}
};

}  // namespace grover

#endif
