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

#include "grover_mps/error.hpp"

namespace grover {

const char *to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput:
        return "InvalidInput";
    case ErrorKind::InvalidGate:
        return "InvalidGate";
    case ErrorKind::NumericalFailure:
        return "NumericalFailure";
    case ErrorKind::CapacityExceeded:
        return "CapacityExceeded";
    case ErrorKind::Io:
        return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace grover
