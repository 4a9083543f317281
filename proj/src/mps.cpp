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

#include "grover_mps/mps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "grover_mps/gates.hpp"
#include "grover_mps/rng.hpp"

namespace grover::mps {

using numeric::ComplexMatrix;
using numeric::tracked_vector;

// ---------------------------------------------------------------------------
// DiagonalMpo

template <Real T>
DiagonalMpo<T> DiagonalMpo<T>::projector_sum(std::string_view bits, T identity_coeff, T projector_coeff) {
    const int n = static_cast<int>(bits.size());
    basis_index(bits, n);  // validates characters
    DiagonalMpo out;
    out.cores_.resize(bits.size());
    auto proj = [&](int i, int p) { return T(bits[std::size_t(i)] - '0' == p ? 1 : 0); };
    if (n == 1) {
        auto &c = out.cores_[0];
        c.data.assign(2, Complex<T>(0));
        for (int p = 0; p < 2; ++p) c.at(p, 0, 0) = identity_coeff + projector_coeff * proj(0, p);
        return out;
    }
    for (int i = 0; i < n; ++i) {
        auto &c = out.cores_[std::size_t(i)];
        c.left = i == 0 ? 1 : 2;
        c.right = i == n - 1 ? 1 : 2;
        c.data.assign(2 * c.left * c.right, Complex<T>(0));
        for (int p = 0; p < 2; ++p) {
            if (i == 0) {
                c.at(p, 0, 0) = identity_coeff;
                c.at(p, 0, 1) = projector_coeff * proj(i, p);
            } else if (i == n - 1) {
                c.at(p, 0, 0) = T(1);
                c.at(p, 1, 0) = proj(i, p);
            } else {
                c.at(p, 0, 0) = T(1);
                c.at(p, 1, 1) = proj(i, p);
            }
        }
    }
    return out;
}

template <Real T>
DiagonalMpo<T> DiagonalMpo<T>::phase_flip(std::string_view marked) {
    if (marked.empty()) throw InvalidInput("phase_flip: empty bitstring");
    return projector_sum(marked, T(1), T(-2));
}

template <Real T>
DiagonalMpo<T> DiagonalMpo<T>::zero_reflection(int n) {
    if (n < 1) throw InvalidInput("zero_reflection: qubit count must be >= 1");
    return projector_sum(std::string(std::size_t(n), '0'), T(-1), T(2));
}

template <Real T>
Complex<T> DiagonalMpo<T>::value_at(std::string_view basis) const {
    basis_index(basis, num_sites());
    std::vector<Complex<T>> v{Complex<T>(1)};
    for (int i = 0; i < num_sites(); ++i) {
        const auto &c = cores_[std::size_t(i)];
        const int p = basis[std::size_t(i)] - '0';
        std::vector<Complex<T>> next(c.right, Complex<T>(0));
        for (std::size_t a = 0; a < c.left; ++a)
            for (std::size_t b = 0; b < c.right; ++b) next[b] += v[a] * c.at(p, a, b);
        v.swap(next);
    }
    return v[0];
}

// ---------------------------------------------------------------------------
// MpsState: construction and bookkeeping

template <Real T>
MpsState<T> MpsState<T>::zero(int n, std::size_t chi_max, double rel_cutoff) {
    if (n < 1) throw InvalidInput("mps: qubit count must be >= 1");
    if (chi_max < 1) throw InvalidInput("mps: chi_max must be >= 1");
    if (!(rel_cutoff >= 0.0 && rel_cutoff < 1.0)) throw InvalidInput("mps: rel_cutoff must lie in [0, 1)");
    MpsState psi;
    psi.sites_.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        SiteTensor<T> a(1, 1);
        a.at(0, 0, 0) = T(1);
        psi.sites_.push_back(std::move(a));
    }
    psi.chi_max_ = chi_max;
    psi.rel_cutoff_ = rel_cutoff;
    psi.center_ = 0;
    return psi;
}

template <Real T>
MpsState<T> MpsState<T>::from_sites(std::vector<SiteTensor<T>> sites, std::size_t chi_max, double rel_cutoff) {
    if (sites.empty()) throw InvalidInput("mps: need at least one site");
    if (chi_max < 1) throw InvalidInput("mps: chi_max must be >= 1");
    if (!(rel_cutoff >= 0.0 && rel_cutoff < 1.0)) throw InvalidInput("mps: rel_cutoff must lie in [0, 1)");
    if (sites.front().left != 1 || sites.back().right != 1) throw InvalidInput("mps: boundary bonds must be 1");
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const auto &a = sites[i];
        if (a.data.size() != a.left * 2 * a.right) throw InvalidInput("mps: site tensor size does not match its dims");
        if (i + 1 < sites.size() && a.right != sites[i + 1].left) {
            throw InvalidInput("mps: bond mismatch between sites " + std::to_string(i) + " and " + std::to_string(i + 1));
        }
        if (a.left > chi_max || a.right > chi_max) throw InvalidInput("mps: bond dimension exceeds chi_max");
    }
    MpsState psi;
    psi.sites_ = std::move(sites);
    psi.chi_max_ = chi_max;
    psi.rel_cutoff_ = rel_cutoff;
    psi.center_ = std::nullopt;
    return psi;
}

template <Real T>
std::vector<std::size_t> MpsState<T>::bond_dims() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < sites_.size(); ++i) out.push_back(sites_[i].right);
    return out;
}

template <Real T>
std::size_t MpsState<T>::max_bond_dim() const {
    std::size_t m = 1;
    for (const auto &a : sites_) m = std::max(m, a.right);
    return m;
}

template <Real T>
std::size_t MpsState<T>::entry_count() const {
    std::size_t total = 0;
    for (const auto &a : sites_) total += a.data.size();
    return total;
}

template <Real T>
void MpsState<T>::check_site(int site) const {
    if (site < 0 || site >= num_qubits()) {
        throw InvalidInput("site " + std::to_string(site) + " out of range for " + std::to_string(num_qubits()) +
                           " sites");
    }
}

template <Real T>
void MpsState<T>::absorb_truncation(const numeric::Truncation<T> &t) {
    discarded_weight_ += t.capped_weight;
    cutoff_weight_ += t.discarded_weight - t.capped_weight;
}

template <Real T>
void MpsState<T>::renormalize_center() {
    if (!renormalize_ || !center_) return;
    auto &a = sites_[std::size_t(*center_)];
    double norm2 = 0;
    for (const auto &z : a.data) norm2 += double(std::norm(z));
    const double norm = std::sqrt(norm2);
    if (!(norm > 0)) return;
    const T scale = T(1.0 / norm);
    for (auto &z : a.data) z *= scale;
    ++renorm_count_;
    max_renorm_shift_ = std::max(max_renorm_shift_, std::abs(1.0 - norm));
}

// ---------------------------------------------------------------------------
// Gauge moves

// Site i (i < n-1) becomes left-isometric; S·V† moves into site i+1.
template <Real T>
void MpsState<T>::left_orthonormalize(std::size_t i, bool truncate) {
    auto &a = sites_[i];
    auto &b = sites_[i + 1];
    const std::size_t l = a.left, r = a.right;
    ComplexMatrix<T> m(l * 2, r, std::move(a.data));
    auto full = numeric::svd(m);
    numeric::SvdResult<T> kept;
    if (truncate) {
        auto t = numeric::truncate_spectrum(full, chi_max_, rel_cutoff_);
        absorb_truncation(t);
        kept = std::move(t.kept);
    } else {
        kept = std::move(full);
    }
    const std::size_t chi = kept.s.size();
    ComplexMatrix<T> sv = std::move(kept.vdag);
    for (std::size_t k = 0; k < chi; ++k)
        for (std::size_t j = 0; j < r; ++j) sv(k, j) *= kept.s[k];
    ComplexMatrix<T> next = numeric::matmul(sv, ComplexMatrix<T>(r, 2 * b.right, std::move(b.data)));

    a.right = chi;
    a.data = std::move(kept.u).release();
    b.left = chi;
    b.data = std::move(next).release();
}

// Site i (i > 0) becomes right-isometric; U·S moves into site i-1.
template <Real T>
void MpsState<T>::right_orthonormalize(std::size_t i) {
    auto &a = sites_[i];
    auto &prev = sites_[i - 1];
    const std::size_t l = a.left, r = a.right;
    auto full = numeric::svd(ComplexMatrix<T>(l, 2 * r, std::move(a.data)));
    const std::size_t chi = full.s.size();
    ComplexMatrix<T> us = std::move(full.u);
    for (std::size_t row = 0; row < l; ++row)
        for (std::size_t k = 0; k < chi; ++k) us(row, k) *= full.s[k];
    ComplexMatrix<T> merged = numeric::matmul(ComplexMatrix<T>(prev.left * 2, l, std::move(prev.data)), us);

    a.left = chi;
    a.data = std::move(full.vdag).release();
    prev.right = chi;
    prev.data = std::move(merged).release();
}

template <Real T>
void MpsState<T>::canonicalize(int center) {
    check_site(center);
    const auto c = std::size_t(center);
    if (center_) {
        for (auto i = std::size_t(*center_); i < c; ++i) left_orthonormalize(i, false);
        for (auto i = std::size_t(*center_); i > c; --i) right_orthonormalize(i);
    } else {
        for (std::size_t i = 0; i < c; ++i) left_orthonormalize(i, false);
        for (std::size_t i = sites_.size() - 1; i > c; --i) right_orthonormalize(i);
    }
    center_ = center;
}

// ---------------------------------------------------------------------------
// Gates

template <Real T>
void MpsState<T>::apply_single_qubit(const ComplexMatrix<T> &gate, int site) {
    check_site(site);
    if (gate.rows() != 2 || gate.cols() != 2) throw InvalidGate("single-qubit gate must be 2x2");
    if (!gate.is_unitary()) throw InvalidGate("single-qubit gate is not unitary");
    auto &a = sites_[std::size_t(site)];
    for (std::size_t l = 0; l < a.left; ++l) {
        for (std::size_t r = 0; r < a.right; ++r) {
            const Complex<T> x0 = a.at(l, 0, r);
            const Complex<T> x1 = a.at(l, 1, r);
            a.at(l, 0, r) = gate(0, 0) * x0 + gate(0, 1) * x1;
            a.at(l, 1, r) = gate(1, 0) * x0 + gate(1, 1) * x1;
        }
    }
}

template <Real T>
void MpsState<T>::apply_two_qubit(const ComplexMatrix<T> &gate, int site) {
    check_site(site);
    check_site(site + 1);
    if (gate.rows() != 4 || gate.cols() != 4) throw InvalidGate("two-qubit gate must be 4x4");
    if (!gate.is_unitary()) throw InvalidGate("two-qubit gate is not unitary");
    canonicalize(site);

    auto &a = sites_[std::size_t(site)];
    auto &b = sites_[std::size_t(site) + 1];
    const std::size_t l = a.left, k = a.right, r = b.right;
    // theta[(l,p)][(q,r)]
    ComplexMatrix<T> theta =
        numeric::matmul(ComplexMatrix<T>(l * 2, k, std::move(a.data)), ComplexMatrix<T>(k, 2 * r, std::move(b.data)));
    ComplexMatrix<T> out(l * 2, 2 * r);
    for (std::size_t li = 0; li < l; ++li) {
        for (std::size_t ri = 0; ri < r; ++ri) {
            Complex<T> in[4];
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) in[p * 2 + q] = theta(li * 2 + std::size_t(p), std::size_t(q) * r + ri);
            for (int row = 0; row < 4; ++row) {
                Complex<T> acc = 0;
                for (int col = 0; col < 4; ++col) acc += gate(std::size_t(row), std::size_t(col)) * in[col];
                out(li * 2 + std::size_t(row / 2), std::size_t(row % 2) * r + ri) = acc;
            }
        }
    }

    auto t = numeric::truncate_spectrum(numeric::svd(out), chi_max_, rel_cutoff_);
    absorb_truncation(t);
    const std::size_t chi = t.kept.s.size();
    ComplexMatrix<T> sv = std::move(t.kept.vdag);
    for (std::size_t i = 0; i < chi; ++i)
        for (std::size_t j = 0; j < 2 * r; ++j) sv(i, j) *= t.kept.s[i];
    a.right = chi;
    a.data = std::move(t.kept.u).release();
    b.left = chi;
    b.data = std::move(sv).release();
    center_ = site + 1;
    renormalize_center();
}

template <Real T>
void MpsState<T>::apply_two_qubit(const ComplexMatrix<T> &gate, int q0, int q1) {
    check_site(q0);
    check_site(q1);
    if (q0 == q1) throw InvalidInput("two-qubit gate needs distinct qubits");
    const int lo = std::min(q0, q1);
    const int hi = std::max(q0, q1);
    const auto swap = gates::swap<T>();
    // Bring hi down to lo + 1, apply, then move it back.
    for (int s = hi - 1; s > lo; --s) apply_two_qubit(swap, s);
    apply_two_qubit(q0 < q1 ? gate : gates::reverse_qubits(gate), lo);
    for (int s = lo + 1; s < hi; ++s) apply_two_qubit(swap, s);
}

template <Real T>
void MpsState<T>::apply_diagonal_mpo(const DiagonalMpo<T> &mpo) {
    if (mpo.num_sites() != num_qubits()) {
        throw InvalidInput("diagonal MPO has " + std::to_string(mpo.num_sites()) + " sites, state has " +
                           std::to_string(num_qubits()));
    }
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const auto &a = sites_[i];
        const auto &c = mpo.core(int(i));
        SiteTensor<T> out(a.left * c.left, a.right * c.right);
        for (std::size_t l = 0; l < a.left; ++l)
            for (std::size_t x = 0; x < c.left; ++x)
                for (int p = 0; p < 2; ++p)
                    for (std::size_t r = 0; r < a.right; ++r)
                        for (std::size_t y = 0; y < c.right; ++y) {
                            out.at(l * c.left + x, p, r * c.right + y) = c.at(p, x, y) * a.at(l, p, r);
                        }
        sites_[i] = std::move(out);
    }
    const std::size_t n = sites_.size();
    for (std::size_t i = n - 1; i > 0; --i) right_orthonormalize(i);
    for (std::size_t i = 0; i + 1 < n; ++i) left_orthonormalize(i, true);
    center_ = int(n) - 1;
    renormalize_center();
}

// ---------------------------------------------------------------------------
// Contractions

template <Real T>
Complex<T> MpsState<T>::amplitude_of(std::string_view basis) const {
    basis_index(basis, num_qubits());
    std::vector<Complex<T>> v{Complex<T>(1)};
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const auto &a = sites_[i];
        const int p = basis[i] - '0';
        std::vector<Complex<T>> next(a.right, Complex<T>(0));
        for (std::size_t l = 0; l < a.left; ++l)
            for (std::size_t r = 0; r < a.right; ++r) next[r] += v[l] * a.at(l, p, r);
        v.swap(next);
    }
    return v[0];
}

namespace {

// E'[r][r'] = Σ_{l,l',p∈ps} conj(A[l][p][r]) E[l][l'] A[l'][p][r'].
template <Real T>
std::vector<Complex<T>> extend_left(const std::vector<Complex<T>> &env, const SiteTensor<T> &a, int p_lo, int p_hi) {
    const std::size_t l = a.left, r = a.right;
    std::vector<Complex<T>> out(r * r, Complex<T>(0));
    std::vector<Complex<T>> tmp(l * r);
    for (int p = p_lo; p <= p_hi; ++p) {
        // tmp[l][r'] = Σ_l' E[l][l'] A[l'][p][r']
        std::fill(tmp.begin(), tmp.end(), Complex<T>(0));
        for (std::size_t x = 0; x < l; ++x)
            for (std::size_t y = 0; y < l; ++y) {
                const Complex<T> e = env[x * l + y];
                for (std::size_t rr = 0; rr < r; ++rr) tmp[x * r + rr] += e * a.at(y, p, rr);
            }
        for (std::size_t x = 0; x < l; ++x)
            for (std::size_t ri = 0; ri < r; ++ri) {
                const Complex<T> c = std::conj(a.at(x, p, ri));
                for (std::size_t rr = 0; rr < r; ++rr) out[ri * r + rr] += c * tmp[x * r + rr];
            }
    }
    return out;
}

}  // namespace

template <Real T>
double MpsState<T>::norm_squared() const {
    std::vector<Complex<T>> env{Complex<T>(1)};
    for (const auto &a : sites_) env = extend_left(env, a, 0, 1);
    return double(env[0].real());
}

template <Real T>
double MpsState<T>::norm_squared_reverse() const {
    // F'[l][l'] = Σ_{p,r,r'} A[l][p][r] F[r][r'] conj(A[l'][p][r'])
    std::vector<Complex<T>> env{Complex<T>(1)};
    for (auto it = sites_.rbegin(); it != sites_.rend(); ++it) {
        const auto &a = *it;
        const std::size_t l = a.left, r = a.right;
        std::vector<Complex<T>> out(l * l, Complex<T>(0));
        std::vector<Complex<T>> tmp(l * r);
        for (int p = 0; p < 2; ++p) {
            std::fill(tmp.begin(), tmp.end(), Complex<T>(0));
            for (std::size_t x = 0; x < l; ++x)
                for (std::size_t ri = 0; ri < r; ++ri) {
                    const Complex<T> v = a.at(x, p, ri);
                    for (std::size_t rr = 0; rr < r; ++rr) tmp[x * r + rr] += v * env[ri * r + rr];
                }
            for (std::size_t x = 0; x < l; ++x)
                for (std::size_t y = 0; y < l; ++y) {
                    Complex<T> acc = 0;
                    for (std::size_t rr = 0; rr < r; ++rr) acc += tmp[x * r + rr] * std::conj(a.at(y, p, rr));
                    out[x * l + y] += acc;
                }
        }
        env.swap(out);
    }
    return double(env[0].real());
}

template <Real T>
double MpsState<T>::prefix_probability(std::string_view prefix) const {
    if (prefix.size() > sites_.size()) throw InvalidInput("prefix longer than the chain");
    for (char c : prefix)
        if (c != '0' && c != '1') throw InvalidInput("prefix contains a non-binary character");
    std::vector<Complex<T>> env{Complex<T>(1)};
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        if (i < prefix.size()) {
            const int p = prefix[i] - '0';
            env = extend_left(env, sites_[i], p, p);
        } else {
            env = extend_left(env, sites_[i], 0, 1);
        }
    }
    return double(env[0].real()) / norm_squared();
}

template <Real T>
Histogram MpsState<T>::sample(std::uint64_t shots, std::uint64_t seed) const {
    if (shots < 1) throw InvalidInput("sample: shots must be >= 1");
    if (center_ != 0) {
        MpsState copy = *this;
        copy.canonicalize(0);
        return copy.sample(shots, seed);
    }
    Rng rng(seed);
    Histogram out;
    std::string bits(sites_.size(), '0');
    std::vector<Complex<T>> v, w[2];
    for (std::uint64_t s = 0; s < shots; ++s) {
        v.assign(1, Complex<T>(1));
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            const auto &a = sites_[i];
            double weight[2] = {0, 0};
            for (int p = 0; p < 2; ++p) {
                w[p].assign(a.right, Complex<T>(0));
                for (std::size_t l = 0; l < a.left; ++l)
                    for (std::size_t r = 0; r < a.right; ++r) w[p][r] += v[l] * a.at(l, p, r);
                for (const auto &z : w[p]) weight[p] += double(std::norm(z));
            }
            const double total = weight[0] + weight[1];
            if (!(total > 0)) throw NumericalFailure("sample: conditional marginal vanished");
            const int p = uniform01(rng) * total < weight[0] ? 0 : 1;
            bits[i] = char('0' + p);
            const T scale = T(1.0 / std::sqrt(weight[p]));
            v.swap(w[p]);
            for (auto &z : v) z *= scale;
        }
        ++out[bits];
    }
    return out;
}

template <Real T>
sv::StateVector<T> MpsState<T>::to_statevector(int max_qubits) const {
    if (num_qubits() > max_qubits) {
        throw CapacityExceeded("mps_to_statevector: " + std::to_string(num_qubits()) + " qubits exceeds the guard of " +
                               std::to_string(max_qubits));
    }
    // Row-major (prefixes × bond) accumulator.
    ComplexMatrix<T> acc(1, 1);
    acc(0, 0) = T(1);
    for (const auto &a : sites_) {
        ComplexMatrix<T> site(a.left, 2 * a.right);
        std::copy(a.data.begin(), a.data.end(), site.entries().begin());
        ComplexMatrix<T> next = numeric::matmul(acc, site);
        const std::size_t rows = next.rows() * 2;
        acc = ComplexMatrix<T>(rows, a.right, std::move(next).release());
    }
    return sv::StateVector<T>::from_amplitudes(std::move(acc).release());
}

template class DiagonalMpo<float>;
template class DiagonalMpo<double>;
template class MpsState<float>;
template class MpsState<double>;

}  // namespace grover::mps
