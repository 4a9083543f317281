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

#ifndef GROVER_MPS_RNG_HPP
#define GROVER_MPS_RNG_HPP

#include <cstdint>
#include <random>

namespace grover {

/// All sampling draws come from mt19937_64, whose output sequence is fixed by
/// the standard, so results are reproducible across toolchains.
using Rng = std::mt19937_64;

/// Independent stream seed for (seed, stream) via a splitmix64 finalizer.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits. std::uniform_real_distribution
/// is implementation-defined, so it is avoided here.
inline double uniform01(Rng &rng) { return double(rng() >> 11) * 0x1.0p-53; }

}  // namespace grover

#endif
