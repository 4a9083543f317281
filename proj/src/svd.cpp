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

#include "grover_mps/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <type_traits>

namespace grover::numeric {
namespace {

// Column-major scratch matrix; columns are contiguous so the Jacobi rotations
// stream through memory.
template <Real T>
struct Columns {
    std::size_t rows = 0;
    std::size_t cols = 0;
    tracked_vector<Complex<T>> data;

    Columns(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Complex<T> *col(std::size_t j) { return data.data() + j * rows; }
    const Complex<T> *col(std::size_t j) const { return data.data() + j * rows; }
};

// Reductions and rotation angles use a wider accumulator; entries and the
// rotations themselves stay in T.
template <Real T>
using Wide = std::conditional_t<std::is_same_v<T, float>, double, long double>;

template <Real T>
Wide<T> squared_norm(const Complex<T> *x, std::size_t len) {
    Wide<T> acc = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const Wide<T> re = x[i].real();
        const Wide<T> im = x[i].imag();
        acc += re * re + im * im;
    }
    return acc;
}

template <Real T>
std::complex<Wide<T>> inner(const Complex<T> *x, const Complex<T> *y, std::size_t len) {
    Wide<T> re = 0;
    Wide<T> im = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const Wide<T> xr = x[i].real(), xi = x[i].imag();
        const Wide<T> yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

// x <- c·x − s·φ̄·y ; y <- s·x + c·φ̄·y, where φ = g/|g|.
template <Real T>
void rotate(Complex<T> *x, Complex<T> *y, std::size_t len, T c, T s, Complex<T> phase_conj) {
    for (std::size_t i = 0; i < len; ++i) {
        const Complex<T> xi = x[i];
        const Complex<T> yi = phase_conj * y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

// Fills the zero columns of u (flagged in `filled` = false) with an
// orthonormal completion of the filled ones.
template <Real T>
void complete_basis(Columns<T> &u, std::vector<bool> &filled) {
    const std::size_t m = u.rows;
    std::vector<Complex<T>> candidate(m);
    std::vector<Complex<T>> best(m);
    for (std::size_t j = 0; j < u.cols; ++j) {
        if (filled[j]) continue;
        T best_norm = -1;
        for (std::size_t e = 0; e < m; ++e) {
            std::fill(candidate.begin(), candidate.end(), Complex<T>(0));
            candidate[e] = T(1);
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < u.cols; ++k) {
                    if (!filled[k]) continue;
                    const Complex<T> proj(inner(u.col(k), candidate.data(), m));
                    for (std::size_t i = 0; i < m; ++i) candidate[i] -= proj * u.col(k)[i];
                }
            }
            const T norm = T(std::sqrt(squared_norm(candidate.data(), m)));
            if (norm > best_norm) {
                best_norm = norm;
                best = candidate;
            }
        }
        for (std::size_t i = 0; i < m; ++i) u.col(j)[i] = best[i] / best_norm;
        filled[j] = true;
    }
}

// Tall case (rows >= cols) of the one-sided Jacobi iteration.
template <Real T>
SvdResult<T> jacobi_tall(const ComplexMatrix<T> &a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Columns<T> w(m, n);
    Columns<T> v(n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w.col(j)[i] = a(i, j);
    for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = T(1);

    const Wide<T> tol = std::numeric_limits<T>::epsilon();
    bool converged = n < 2;
    // Columns with norm <= eps * (largest column norm) are numerically zero:
    // rotating against them cannot reach relative orthogonality once their
    // entries go subnormal, so they are left alone and reported as sigma = 0.
    Wide<T> negligible = 0;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
        bool rotated = false;
        Wide<T> max_sq = 0;
        for (std::size_t j = 0; j < n; ++j) max_sq = std::max(max_sq, squared_norm(w.col(j), m));
        negligible = tol * tol * max_sq;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                using W = Wide<T>;
                const W alpha = squared_norm(w.col(p), m);
                const W beta = squared_norm(w.col(q), m);
                if (alpha <= negligible || beta <= negligible) continue;
                const std::complex<W> g = inner(w.col(p), w.col(q), m);
                const W gabs = std::abs(g);
                if (gabs <= tol * std::sqrt(alpha) * std::sqrt(beta)) continue;
                rotated = true;
                const W zeta = (beta - alpha) / (W(2) * gabs);
                const W t = std::copysign(W(1), zeta) / (std::abs(zeta) + std::sqrt(W(1) + zeta * zeta));
                const W cw = W(1) / std::sqrt(W(1) + t * t);
                const T c = T(cw);
                const T s = T(cw * t);
                const Complex<T> phase_conj(T(g.real() / gabs), T(-g.imag() / gabs));
                rotate(w.col(p), w.col(q), m, c, s, phase_conj);
                rotate(v.col(p), v.col(q), n, c, s, phase_conj);
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw NumericalFailure("svd: one-sided Jacobi did not converge within " +
                               std::to_string(kMaxJacobiSweeps) + " sweeps (" + std::to_string(m) + "x" +
                               std::to_string(n) + ")");
    }

    std::vector<T> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Wide<T> sq = squared_norm(w.col(j), m);
        sigma[j] = sq <= negligible ? T(0) : T(std::sqrt(sq));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    Columns<T> u(m, n);
    std::vector<bool> filled(n, false);
    SvdResult<T> out{ComplexMatrix<T>(m, n), std::vector<T>(n), ComplexMatrix<T>(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.s[k] = sigma[j];
        if (sigma[j] > T(0)) {
            for (std::size_t i = 0; i < m; ++i) u.col(k)[i] = w.col(j)[i] / sigma[j];
            filled[k] = true;
        }
        for (std::size_t i = 0; i < n; ++i) out.vdag(k, i) = std::conj(v.col(j)[i]);
    }
    complete_basis(u, filled);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < m; ++i) out.u(i, k) = u.col(k)[i];
    return out;
}

}  // namespace

template <Real T>
ComplexMatrix<T> SvdResult<T>::reconstruct() const {
    ComplexMatrix<T> scaled = u;
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t k = 0; k < s.size(); ++k) scaled(i, k) *= s[k];
    return matmul(scaled, vdag);
}

template <Real T>
SvdResult<T> svd(const ComplexMatrix<T> &a) {
    if (a.rows() == 0 || a.cols() == 0) throw InvalidInput("svd: matrix must be at least 1x1");
    if (!a.all_finite()) throw InvalidInput("svd: matrix has non-finite entries");
    if (a.rows() >= a.cols()) return jacobi_tall(a);
    // Wide: A† = U' S V'†  =>  A = V' S U'†.
    SvdResult<T> t = jacobi_tall(a.adjoint());
    return SvdResult<T>{t.vdag.adjoint(), std::move(t.s), t.u.adjoint()};
}

template <Real T>
Truncation<T> truncate_spectrum(const SvdResult<T> &in, std::size_t chi_max, double rel_cutoff) {
    if (chi_max < 1) throw InvalidInput("truncate_spectrum: chi_max must be >= 1");
    if (!(rel_cutoff >= 0.0 && rel_cutoff < 1.0)) throw InvalidInput("truncate_spectrum: rel_cutoff must lie in [0, 1)");
    const auto &s = in.s;
    if (s.empty()) throw InvalidInput("truncate_spectrum: empty spectrum");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] >= T(0))) throw InvalidInput("truncate_spectrum: singular values must be non-negative");
        if (i > 0 && s[i] > s[i - 1]) throw InvalidInput("truncate_spectrum: singular values must be sorted non-increasing");
    }
    if (in.u.cols() != s.size() || in.vdag.rows() != s.size()) {
        throw InvalidInput("truncate_spectrum: factor shapes do not match the spectrum");
    }

    Truncation<T> out;
    std::size_t above = 0;
    double total = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        total += double(s[i]) * double(s[i]);
        if (double(s[i]) > rel_cutoff * double(s[0])) ++above;
    }
    std::size_t chi = std::max<std::size_t>(1, std::min(chi_max, above));
    if (s[0] == T(0)) {
        out.degenerate_spectrum = true;
        chi = 1;
    } else {
        double dropped = 0;
        double capped = 0;
        for (std::size_t i = chi; i < s.size(); ++i) {
            const double w = double(s[i]) * double(s[i]);
            dropped += w;
            if (i < above) capped += w;
        }
        out.discarded_weight = dropped / total;
        out.capped_weight = capped / total;
    }

    const std::size_t m = in.u.rows();
    const std::size_t n = in.vdag.cols();
    out.kept.u = ComplexMatrix<T>(m, chi);
    out.kept.vdag = ComplexMatrix<T>(chi, n);
    out.kept.s.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(chi));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < chi; ++k) out.kept.u(i, k) = in.u(i, k);
    for (std::size_t k = 0; k < chi; ++k)
        for (std::size_t j = 0; j < n; ++j) out.kept.vdag(k, j) = in.vdag(k, j);
    return out;
}

template struct SvdResult<float>;
template struct SvdResult<double>;
template SvdResult<float> svd(const ComplexMatrix<float> &);
template SvdResult<double> svd(const ComplexMatrix<double> &);
template Truncation<float> truncate_spectrum(const SvdResult<float> &, std::size_t, double);
template Truncation<double> truncate_spectrum(const SvdResult<double> &, std::size_t, double);

}  // namespace grover::numeric
