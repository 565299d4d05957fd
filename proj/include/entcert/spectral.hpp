// Copyright 2026 The entcert Authors
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

#pragma once

// Dense Hermitian kernel for the small matrices that appear in few-qubit
// entanglement calculations (dimension <= 64): cyclic complex Jacobi
// eigensolver plus the spectral functionals built on it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entcert/error.hpp"

namespace entcert {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxMatrixDim = 64;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;
/// Eigenvalues below this are treated as exact zeros by the PSD functionals.
inline constexpr double kZeroEigenvalue = 1e-14;
inline constexpr double kJacobiOffTolerance = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
        if (entries_.size() != dim_ * dim_) {
            fail(Errc::BadDims, "matrix of dimension " + std::to_string(dim_) + " needs " +
                                    std::to_string(dim_ * dim_) + " entries, got " +
                                    std::to_string(entries_.size()));
        }
        for (const auto& z : entries_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                fail(Errc::DomainError, "matrix entries must be finite");
            }
        }
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> values) {
        ComplexMatrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const Complex> entries() const noexcept { return entries_; }

    Complex& operator()(std::size_t row, std::size_t col) noexcept { return entries_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] ComplexMatrix adjoint() const {
        ComplexMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    [[nodiscard]] ComplexMatrix conjugate() const {
        ComplexMatrix out(*this);
        for (auto& z : out.entries_) z = std::conj(z);
        return out;
    }

    [[nodiscard]] Complex trace() const noexcept {
        Complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    [[nodiscard]] double frobenius_norm() const noexcept {
        double acc = 0.0;
        for (const auto& z : entries_) acc += std::norm(z);
        return std::sqrt(acc);
    }

    /// max_{ij} |m_ij - conj(m_ji)|
    [[nodiscard]] double hermiticity_defect() const noexcept {
        double worst = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return worst;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.dim_ != b.dim_) fail(Errc::BadDims, "matrix product dimension mismatch");
        const std::size_t n = a.dim_;
        ComplexMatrix out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        if (a.dim_ != b.dim_) fail(Errc::BadDims, "matrix sum dimension mismatch");
        for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
        return a;
    }

    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        if (a.dim_ != b.dim_) fail(Errc::BadDims, "matrix difference dimension mismatch");
        for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
        return a;
    }

    friend ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
        for (auto& z : a.entries_) z *= scale;
        return a;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// max_{ij} |a_ij - b_ij|
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) fail(Errc::BadDims, "max_abs_diff dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

/// Eigenvalues sorted descending; column j of `eigenvectors` belongs to eigenvalues[j].
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

namespace detail {

inline void require_hermitian(const ComplexMatrix& m) {
    if (m.dim() == 0) fail(Errc::BadDims, "empty matrix");
    if (m.dim() > kMaxMatrixDim) {
        fail(Errc::BadDims, "dimension " + std::to_string(m.dim()) + " exceeds " + std::to_string(kMaxMatrixDim));
    }
    const double defect = m.hermiticity_defect();
    if (defect > kHermitianTolerance) {
        fail(Errc::NonHermitian, "max |m - m^dagger| = " + std::to_string(defect));
    }
}

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
}

// Applies the unitary W (acting on coordinates p, q) as A <- W^dagger A W and
// V <- V W, where W = diag(1, conj(phase)) * [[c, s], [-s, c]].
inline void apply_rotation(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, double c, double s,
                           Complex phase) {
    const std::size_t n = a.dim();
    const Complex phase_conj = std::conj(phase);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * phase_conj * akq;
        a(k, q) = s * akp + c * phase_conj * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * phase_conj * vkq;
        v(k, q) = s * vkp + c * phase_conj * vkq;
    }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for Hermitian matrices. The input is symmetrized
/// as (m + m^dagger)/2 first; iteration stops once the off-diagonal Frobenius
/// norm drops below 1e-14 relative to the matrix norm.
inline EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
    detail::require_hermitian(m);
    const std::size_t n = m.dim();

    ComplexMatrix a = Complex{0.5} * (m + m.adjoint());
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = kJacobiOffTolerance * a.frobenius_norm();

    bool converged = false;
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Late sweeps: drop elements that no longer perturb the diagonal.
                if (sweep > 3 && std::abs(app) + 100.0 * mag == std::abs(app) &&
                    std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 0.0;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                detail::apply_rotation(a, v, p, q, c, s, apq / mag);
            }
        }
    }
    if (!converged && detail::off_diagonal_norm(a) > threshold) {
        fail(Errc::NoConvergence, "Jacobi iteration exceeded " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        out.eigenvalues[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, col) = v(row, order[col]);
    }
    return out;
}

/// Eigenvalues of a Hermitian PSD matrix, descending, with round-off below
/// zero clamped away. Values under kZeroEigenvalue become exact zeros.
inline std::vector<double> clamp_psd_spectrum(std::vector<double> eigenvalues) {
    for (double& lambda : eigenvalues) {
        if (lambda < -kNegativeEigenvalueTolerance) {
            fail(Errc::NegativeEigenvalue, "eigenvalue " + std::to_string(lambda) + " below -1e-10");
        }
        if (lambda < kZeroEigenvalue) lambda = 0.0;
    }
    return eigenvalues;
}

inline std::vector<double> psd_spectrum(const ComplexMatrix& m) {
    return clamp_psd_spectrum(eig_hermitian(m).eigenvalues);
}

/// sum_i lambda_i^q over a PSD spectrum; zero eigenvalues contribute nothing (0^0 := 0).
inline double power_trace_of_spectrum(std::span<const double> spectrum, double q) {
    if (!(q >= 0.0) || !std::isfinite(q)) fail(Errc::DomainError, "power must be finite and >= 0");
    double acc = 0.0;
    for (double lambda : spectrum)
        if (lambda > 0.0) acc += std::pow(lambda, q);
    return acc;
}

/// tr m^q for Hermitian PSD m.
inline double matrix_power_trace(const ComplexMatrix& m, double q) {
    const auto spectrum = psd_spectrum(m);
    return power_trace_of_spectrum(spectrum, q);
}

inline ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    auto decomposition = eig_hermitian(m);
    const auto spectrum = clamp_psd_spectrum(decomposition.eigenvalues);
    const auto& vecs = decomposition.eigenvectors;
    const std::size_t n = m.dim();
    ComplexMatrix root(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = std::sqrt(spectrum[k]);
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = w * vecs(i, k);
            for (std::size_t j = 0; j < n; ++j) root(i, j) += vik * std::conj(vecs(j, k));
        }
    }
    return root;
}

}  // namespace entcert
