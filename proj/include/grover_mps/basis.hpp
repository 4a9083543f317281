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

#ifndef GROVER_MPS_BASIS_HPP
#define GROVER_MPS_BASIS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace grover {

/// Qubit q is character q of a bitstring and bit (n-1-q) of the basis index:
/// qubit 0 is the most significant bit.
std::uint64_t basis_index(std::string_view bits, int n);

std::string basis_string(std::uint64_t index, int n);

/// Measurement histogram, ordered by bitstring so iteration is deterministic.
using Histogram = std::map<std::string, std::uint64_t>;

}  // namespace grover

#endif
