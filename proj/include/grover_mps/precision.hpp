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

#ifndef GROVER_MPS_PRECISION_HPP
#define GROVER_MPS_PRECISION_HPP

#include <complex>
#include <concepts>
#include <limits>
#include <string_view>

namespace grover {

enum class Precision { Single, Double };

/// Real component types a simulation may run in. Every numeric object is
/// templated on exactly one of these, so mixing precisions inside one run is
/// rejected by the compiler.
template <typename T>
concept Real = std::same_as<T, float> || std::same_as<T, double>;

template <Real T>
using Complex = std::complex<T>;

template <Real T>
constexpr Precision precision_of() {
    return std::same_as<T, float> ? Precision::Single : Precision::Double;
}

/// Unit roundoff u = 2^-p (half the machine epsilon).
template <Real T>
constexpr T unit_roundoff() {
    return std::numeric_limits<T>::epsilon() / 2;
}

inline double unit_roundoff(Precision p) {
    return p == Precision::Single ? unit_roundoff<float>() : unit_roundoff<double>();
}

/// Default relative singular-value cutoff: discards only values that are
/// indistinguishable from rounding noise.
template <Real T>
constexpr T default_rel_cutoff() {
    return std::same_as<T, float> ? T(1e-6) : T(1e-12);
}

inline double default_rel_cutoff(Precision p) {
    return p == Precision::Single ? default_rel_cutoff<float>() : default_rel_cutoff<double>();
}

constexpr std::string_view to_string(Precision p) { return p == Precision::Single ? "f32" : "f64"; }

}  // namespace grover

#endif
