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

#include "grover_mps/basis.hpp"

#include "grover_mps/error.hpp"

namespace grover {

std::uint64_t basis_index(std::string_view bits, int n) {
    if (n < 1 || n > 64) throw InvalidInput("basis_index: qubit count must lie in [1, 64]");
    if (bits.size() != static_cast<std::size_t>(n)) {
        throw InvalidInput("bitstring '" + std::string(bits) + "' has length " + std::to_string(bits.size()) +
                           ", expected " + std::to_string(n));
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidInput("bitstring '" + std::string(bits) + "' contains a non-binary character");
        index = (index << 1) | std::uint64_t(c == '1');
    }
    return index;
}

std::string basis_string(std::uint64_t index, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((index >> (n - 1 - q)) & 1u) out[static_cast<std::size_t>(q)] = '1';
    }
    return out;
}

}  // namespace grover
