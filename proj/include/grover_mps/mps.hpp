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

#ifndef GROVER_MPS_MPS_HPP
#define GROVER_MPS_MPS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "grover_mps/basis.hpp"
#include "grover_mps/complex_matrix.hpp"
#include "grover_mps/statevector.hpp"
#include "grover_mps/svd.hpp"

namespace grover::mps {

inline constexpr std::size_t kDefaultChiMax = 64;
inline constexpr int kMaxDenseQubits = 20;

/// Rank-3 site tensor A[l][p][r], stored row-major with p of dimension 2.
template <Real T>
struct SiteTensor {
    std::size_t left = 1;
    std::size_t right = 1;
    numeric::tracked_vector<Complex<T>> data;

    SiteTensor() = default;
    SiteTensor(std::size_t l, std::size_t r) : left(l), right(r), data(l * 2 * r) {}

    Complex<T> &at(std::size_t l, int p, std::size_t r) noexcept { return data[(l * 2 + std::size_t(p)) * right + r]; }
    const Complex<T> &at(std::size_t l, int p, std::size_t r) const noexcept {
        return data[(l * 2 + std::size_t(p)) * right + r];
    }
};

/// Diagonal matrix product operator. Core i stores, for each physical value p,
/// a left × right matrix D_i[p]; the operator's diagonal entry for basis state
/// b is D_0[b_0] · D_1[b_1] ⋯ D_{n-1}[b_{n-1}].
template <Real T>
class DiagonalMpo {
  public:
    struct Core {
        std::size_t left = 1;
        std::size_t right = 1;
        std::vector<Complex<T>> data;  // [p][a][b]

        Complex<T> &at(int p, std::size_t a, std::size_t b) { return data[(std::size_t(p) * left + a) * right + b]; }
        const Complex<T> &at(int p, std::size_t a, std::size_t b) const {
            return data[(std::size_t(p) * left + a) * right + b];
        }
    };

    /// I − 2|m⟩⟨m| with bond dimension 2.
    static DiagonalMpo phase_flip(std::string_view marked);
    /// 2|0…0⟩⟨0…0| − I with bond dimension 2.
    static DiagonalMpo zero_reflection(int n);

    int num_sites() const noexcept { return static_cast<int>(cores_.size()); }
    const Core &core(int i) const { return cores_.at(static_cast<std::size_t>(i)); }
    /// Diagonal entry ⟨b|D|b⟩ by direct contraction.
    Complex<T> value_at(std::string_view basis) const;

  private:
    static DiagonalMpo projector_sum(std::string_view bits, T identity_coeff, T projector_coeff);
    std::vector<Core> cores_;
};

/// Open-boundary matrix product state. Qubit q lives on site q; site 0 carries
/// the most significant bit, matching the statevector convention.
template <Real T>
class MpsState {
  public:
    /// Product state |0…0⟩, center at site 0.
    static MpsState zero(int n, std::size_t chi_max = kDefaultChiMax, double rel_cutoff = default_rel_cutoff<T>());

    /// Wraps arbitrary site tensors (no canonical center). Bond dimensions must
    /// chain and the boundary bonds must be 1.
    static MpsState from_sites(std::vector<SiteTensor<T>> sites, std::size_t chi_max = kDefaultChiMax,
                               double rel_cutoff = default_rel_cutoff<T>());

    int num_qubits() const noexcept { return static_cast<int>(sites_.size()); }
    static constexpr Precision precision() noexcept { return precision_of<T>(); }
    std::size_t chi_max() const noexcept { return chi_max_; }
    double rel_cutoff() const noexcept { return rel_cutoff_; }
    std::optional<int> canonical_center() const noexcept { return center_; }
    const SiteTensor<T> &site(int i) const { return sites_.at(static_cast<std::size_t>(i)); }

    /// Weight dropped because a bond exceeded chi_max (sum of per-truncation
    /// discarded fractions).
    double cumulative_discarded_weight() const noexcept { return discarded_weight_; }
    /// Weight dropped as numerical noise below rel_cutoff · s_0.
    double cumulative_cutoff_weight() const noexcept { return cutoff_weight_; }

    /// When set, every truncating update restores unit norm at the center.
    void set_renormalize(bool on) noexcept { renormalize_ = on; }
    bool renormalize() const noexcept { return renormalize_; }
    std::uint64_t renormalization_count() const noexcept { return renorm_count_; }
    /// Largest |1 − factor| applied by renormalization so far.
    double max_renormalization_shift() const noexcept { return max_renorm_shift_; }

    /// Internal bond dimensions, n − 1 entries.
    std::vector<std::size_t> bond_dims() const;
    std::size_t max_bond_dim() const;
    /// Complex entries currently held by the site tensors.
    std::size_t entry_count() const;

    void apply_single_qubit(const numeric::ComplexMatrix<T> &gate, int site);
    /// 4×4 gate on (site, site + 1), site as the high bit. Leaves the center
    /// at site + 1.
    void apply_two_qubit(const numeric::ComplexMatrix<T> &gate, int site);
    /// Two-qubit gate on arbitrary distinct qubits via a SWAP chain.
    void apply_two_qubit(const numeric::ComplexMatrix<T> &gate, int q0, int q1);
    /// Multiplies by a diagonal MPO, then runs a right-to-left canonicalizing
    /// sweep followed by a left-to-right truncating sweep. Center ends at n − 1.
    void apply_diagonal_mpo(const DiagonalMpo<T> &mpo);

    /// Exact gauge move, no truncation.
    void canonicalize(int center);

    Complex<T> amplitude_of(std::string_view basis) const;
    /// ⟨ψ|ψ⟩ contracted left to right.
    double norm_squared() const;
    /// ⟨ψ|ψ⟩ contracted right to left.
    double norm_squared_reverse() const;
    /// Probability that the leading qubits read `prefix`, normalized by ⟨ψ|ψ⟩.
    double prefix_probability(std::string_view prefix) const;

    /// Perfect sampling from exact conditional marginals. Works on a copy
    /// canonicalized at site 0 when this state is not already.
    Histogram sample(std::uint64_t shots, std::uint64_t seed) const;

    sv::StateVector<T> to_statevector(int max_qubits = kMaxDenseQubits) const;

  private:
    MpsState() = default;

    void check_site(int site) const;
    void left_orthonormalize(std::size_t i, bool truncate);
    void right_orthonormalize(std::size_t i);
    void absorb_truncation(const numeric::Truncation<T> &t);
    void renormalize_center();

    std::vector<SiteTensor<T>> sites_;
    std::size_t chi_max_ = kDefaultChiMax;
    double rel_cutoff_ = 0;
    std::optional<int> center_;
    double discarded_weight_ = 0;
    double cutoff_weight_ = 0;
    bool renormalize_ = false;
    std::uint64_t renorm_count_ = 0;
    double max_renorm_shift_ = 0;
};

}  // namespace grover::mps

#endif
