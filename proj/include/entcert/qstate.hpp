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

// Quantum-state data model. Computational-basis index convention: for
// subsystems A_1..A_n with dimensions d_1..d_n, the index of |b_1 ... b_n>
// is sum_i b_i * (d_{i+1} * ... * d_n), i.e. A_1 is the most significant
// digit. Subsystem indices in this API are 0-based (A_1 is index 0).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entcert/error.hpp"
#include "entcert/rng.hpp"
#include "entcert/spectral.hpp"

namespace entcert {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kSchmidtNormTolerance = 1e-10;
inline constexpr std::size_t kMaxQubits = 6;

using Dims = std::vector<std::size_t>;

/// Product of the subsystem dimensions; every factor must be >= 2 and the
/// total must fit the spectral kernel.
inline std::size_t total_dimension(std::span<const std::size_t> dims) {
    if (dims.empty()) fail(Errc::BadDims, "at least one subsystem is required");
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d < 2) fail(Errc::BadDims, "subsystem dimensions must be >= 2");
        total *= d;
        if (total > kMaxMatrixDim) {
            fail(Errc::BadDims, "total dimension exceeds " + std::to_string(kMaxMatrixDim));
        }
    }
    return total;
}

namespace detail {

inline std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
    return strides;
}

// Offsets into the full index space for every composite index over `subset`
// (first listed subsystem most significant).
inline std::vector<std::size_t> subset_offsets(std::span<const std::size_t> dims,
                                               std::span<const std::size_t> strides,
                                               std::span<const std::size_t> subset) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t sub : subset) {
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * dims[sub]);
        for (std::size_t base : offsets)
            for (std::size_t digit = 0; digit < dims[sub]; ++digit) next.push_back(base + digit * strides[sub]);
        offsets = std::move(next);
    }
    return offsets;
}

inline std::vector<std::size_t> complement_of(std::size_t n, std::span<const std::size_t> keep) {
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n) fail(Errc::BadIndex, "subsystem index " + std::to_string(k) + " out of range");
        if (kept[k]) fail(Errc::BadIndex, "subsystem index " + std::to_string(k) + " repeated");
        kept[k] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (!kept[i]) rest.push_back(i);
    return rest;
}

}  // namespace detail

/// Normalized amplitude vector over a tensor product of subsystems.
class PureState {
public:
    PureState(Dims dims, std::vector<Complex> amplitudes) : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
        validate_shape();
        const double norm_sq = squared_norm(amplitudes_);
        if (std::abs(norm_sq - 1.0) > kNormTolerance) {
            fail(Errc::NotNormalized, "sum |a_i|^2 = " + std::to_string(norm_sq));
        }
    }

    /// Rescales a nonzero vector to unit norm.
    static PureState normalized(Dims dims, std::vector<Complex> amplitudes) {
        const double norm = std::sqrt(squared_norm(amplitudes));
        if (!(norm > 0.0) || !std::isfinite(norm)) fail(Errc::NotNormalized, "cannot normalize a zero vector");
        for (auto& a : amplitudes) a /= norm;
        return PureState(std::move(dims), std::move(amplitudes));
    }

    [[nodiscard]] const Dims& dims() const noexcept { return dims_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] std::size_t num_subsystems() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] bool all_qubits() const noexcept {
        return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 2; });
    }

private:
    static double squared_norm(std::span<const Complex> amplitudes) {
        double acc = 0.0;
        for (const auto& a : amplitudes) acc += std::norm(a);
        return acc;
    }

    void validate_shape() const {
        const std::size_t total = total_dimension(dims_);
        if (amplitudes_.size() != total) {
            fail(Errc::BadDims, "expected " + std::to_string(total) + " amplitudes, got " +
                                    std::to_string(amplitudes_.size()));
        }
        for (const auto& a : amplitudes_)
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) fail(Errc::DomainError, "non-finite amplitude");
    }

    Dims dims_;
    std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, PSD operator with subsystem metadata.
class DensityMatrix {
public:
    /// Validates hermiticity (1e-10), unit trace (1e-10) and eigenvalues >= -1e-10.
    DensityMatrix(Dims dims, ComplexMatrix matrix) : dims_(std::move(dims)), matrix_(std::move(matrix)) {
        if (total_dimension(dims_) != matrix_.dim()) fail(Errc::BadDims, "dims do not match matrix dimension");
        if (matrix_.hermiticity_defect() > kHermitianTolerance) fail(Errc::NonHermitian, "density matrix");
        const Complex tr = matrix_.trace();
        if (std::abs(tr - Complex{1.0}) > kTraceTolerance) fail(Errc::NotNormalized, "trace differs from 1");
        (void)psd_spectrum(matrix_);
    }

    static DensityMatrix from_pure(const PureState& psi) {
        const std::size_t n = psi.dim();
        const auto amps = psi.amplitudes();
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = amps[i] * std::conj(amps[j]);
        return DensityMatrix(Trusted{}, psi.dims(), std::move(m));
    }

    /// Reduced state on `keep` (result ordered as listed).
    [[nodiscard]] DensityMatrix partial_trace(std::span<const std::size_t> keep) const {
        if (keep.empty()) fail(Errc::BadIndex, "keep set must be nonempty");
        const auto traced = detail::complement_of(dims_.size(), keep);
        const auto strides = detail::strides_of(dims_);
        const auto keep_off = detail::subset_offsets(dims_, strides, keep);
        const auto trace_off = detail::subset_offsets(dims_, strides, traced);
        ComplexMatrix out(keep_off.size());
        for (std::size_t a = 0; a < keep_off.size(); ++a)
            for (std::size_t b = 0; b < keep_off.size(); ++b) {
                Complex acc = 0.0;
                for (std::size_t t : trace_off) acc += matrix_(keep_off[a] + t, keep_off[b] + t);
                out(a, b) = acc;
            }
        return DensityMatrix(Trusted{}, select(keep), std::move(out));
    }

    /// Reduced state of a pure state, computed as M M^dagger without forming |psi><psi|.
    static DensityMatrix reduced(const PureState& psi, std::span<const std::size_t> keep) {
        if (keep.empty()) fail(Errc::BadIndex, "keep set must be nonempty");
        const auto& dims = psi.dims();
        const auto traced = detail::complement_of(dims.size(), keep);
        const auto strides = detail::strides_of(dims);
        const auto keep_off = detail::subset_offsets(dims, strides, keep);
        const auto trace_off = detail::subset_offsets(dims, strides, traced);
        const auto amps = psi.amplitudes();
        ComplexMatrix out(keep_off.size());
        for (std::size_t a = 0; a < keep_off.size(); ++a)
            for (std::size_t b = a; b < keep_off.size(); ++b) {
                Complex acc = 0.0;
                for (std::size_t t : trace_off) acc += amps[keep_off[a] + t] * std::conj(amps[keep_off[b] + t]);
                out(a, b) = acc;
                out(b, a) = std::conj(acc);
            }
        Dims kept_dims;
        for (std::size_t k : keep) kept_dims.push_back(dims[k]);
        return DensityMatrix(Trusted{}, std::move(kept_dims), std::move(out));
    }

    [[nodiscard]] const Dims& dims() const noexcept { return dims_; }
    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t num_subsystems() const noexcept { return dims_.size(); }
    [[nodiscard]] bool is_two_qubit() const noexcept { return dims_.size() == 2 && dims_[0] == 2 && dims_[1] == 2; }

    /// Clamped eigenvalues, descending.
    [[nodiscard]] std::vector<double> spectrum() const { return psd_spectrum(matrix_); }

    /// tr rho^2 straight from the entries.
    [[nodiscard]] double purity() const noexcept {
        double acc = 0.0;
        for (const auto& z : matrix_.entries()) acc += std::norm(z);
        return acc;
    }

private:
    struct Trusted {};
    DensityMatrix(Trusted, Dims dims, ComplexMatrix matrix) : dims_(std::move(dims)), matrix_(std::move(matrix)) {}

    [[nodiscard]] Dims select(std::span<const std::size_t> keep) const {
        Dims out;
        for (std::size_t k : keep) out.push_back(dims_[k]);
        return out;
    }

    Dims dims_;
    ComplexMatrix matrix_;
};

inline DensityMatrix to_density(const PureState& psi) { return DensityMatrix::from_pure(psi); }

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
    return rho.partial_trace(keep);
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
    return rho.partial_trace(std::span<const std::size_t>(keep.begin(), keep.size()));
}

inline DensityMatrix reduced_density(const PureState& psi, std::span<const std::size_t> keep) {
    return DensityMatrix::reduced(psi, keep);
}

inline DensityMatrix reduced_density(const PureState& psi, std::initializer_list<std::size_t> keep) {
    return DensityMatrix::reduced(psi, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// Ordered split of subsystems into a left and a right block.
struct Bipartition {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;

    /// Left = {0..m-1}, right = {m..n-1}.
    static Bipartition first(std::size_t m, std::size_t n) {
        Bipartition part;
        for (std::size_t i = 0; i < n; ++i) (i < m ? part.left : part.right).push_back(i);
        return part;
    }

    void validate(std::size_t n) const {
        if (left.empty() || right.empty()) fail(Errc::BadPartition, "both blocks must be nonempty");
        std::vector<bool> seen(n, false);
        for (const auto* block : {&left, &right})
            for (std::size_t i : *block) {
                if (i >= n) fail(Errc::BadPartition, "subsystem index " + std::to_string(i) + " out of range");
                if (seen[i]) fail(Errc::BadPartition, "blocks must be disjoint");
                seen[i] = true;
            }
    }

    [[nodiscard]] bool covers(std::size_t n) const noexcept { return left.size() + right.size() == n; }
};

/// Three-qubit generalized Schmidt form
///   l0|000> + l1 e^{i theta}|100> + l2|110> + l3|101> + l4|111>,
/// laid out so that C(rho_{A1A2}) = 2 l0 l2 and C(rho_{A1A3}) = 2 l0 l3.
inline PureState schmidt_state(const std::array<double, 5>& lambdas, double theta) {
    double norm_sq = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0) || !std::isfinite(l)) fail(Errc::DomainError, "Schmidt coefficients must be >= 0");
        norm_sq += l * l;
    }
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) fail(Errc::DomainError, "theta must lie in [0, pi]");
    if (std::abs(norm_sq - 1.0) > kSchmidtNormTolerance) {
        fail(Errc::NotNormalized, "sum lambda_i^2 = " + std::to_string(norm_sq));
    }
    std::vector<Complex> amps(8);
    amps[0b000] = lambdas[0];
    amps[0b100] = std::polar(lambdas[1], theta);
    amps[0b110] = lambdas[2];
    amps[0b101] = lambdas[3];
    amps[0b111] = lambdas[4];
    return PureState::normalized(Dims(3, 2), std::move(amps));
}

inline void require_arity(std::size_t n, std::size_t lo) {
    if (n < lo || n > kMaxQubits) {
        fail(Errc::BadArity, "qubit count " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                                 std::to_string(kMaxQubits) + "]");
    }
}

/// (|10...0> + |01...0> + ... + |0...01>)/sqrt(n)
inline PureState w_state(std::size_t n) {
    require_arity(n, 2);
    std::vector<Complex> amps(std::size_t{1} << n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) amps[std::size_t{1} << (n - 1 - i)] = a;
    return PureState::normalized(Dims(n, 2), std::move(amps));
}

/// (|0...0> + |1...1>)/sqrt(2)
inline PureState ghz_state(std::size_t n) {
    require_arity(n, 2);
    std::vector<Complex> amps(std::size_t{1} << n);
    amps.front() = std::numbers::sqrt2 / 2.0;
    amps.back() = std::numbers::sqrt2 / 2.0;
    return PureState::normalized(Dims(n, 2), std::move(amps));
}

/// Haar-random n-qubit pure state: i.i.d. standard complex Gaussian amplitudes
/// (real part drawn before imaginary part, in basis order), then normalized.
inline PureState haar_random_pure(std::size_t n_qubits, std::uint64_t seed) {
    require_arity(n_qubits, 1);
    Rng rng(seed);
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (auto& a : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Complex{re, im};
    }
    return PureState::normalized(Dims(n_qubits, 2), std::move(amps));
}

}  // namespace entcert
