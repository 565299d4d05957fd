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

// Entanglement measures on their closed-form domains: pure bipartite states of
// any dimension and two-qubit mixed states.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string_view>
#include <vector>

#include "entcert/entropy.hpp"
#include "entcert/error.hpp"
#include "entcert/qstate.hpp"
#include "entcert/spectral.hpp"

namespace entcert {

inline constexpr double kDomainClamp = 1e-12;
inline constexpr double kRankCutoff = 1e-13;

enum class Method { PureBipartite, Wootters2Qubit, FOfCSquared };

constexpr std::string_view to_string(Method method) {
    switch (method) {
        case Method::PureBipartite: return "pure_bipartite";
        case Method::Wootters2Qubit: return "wootters_2qubit";
        case Method::FOfCSquared: return "f_of_c_squared";
    }
    return "unknown";
}

struct MeasureValue {
    double value = 0.0;
    Method method = Method::PureBipartite;
};

namespace detail {

inline void require_full_partition(const PureState& psi, const Bipartition& part) {
    part.validate(psi.num_subsystems());
    if (!part.covers(psi.num_subsystems())) {
        fail(Errc::BadPartition, "partition of a pure state must cover every subsystem");
    }
}

inline void require_two_qubit(const DensityMatrix& rho) {
    if (!rho.is_two_qubit()) fail(Errc::BadDims, "expected a two-qubit density matrix");
}

// Clamps x into [0, 1] when it lies within the tolerance band.
inline double clamp_unit(double x, const char* what) {
    if (!std::isfinite(x) || x < -kDomainClamp || x > 1.0 + kDomainClamp) {
        fail(Errc::DomainError, std::string(what) + " argument outside [0, 1]");
    }
    return std::clamp(x, 0.0, 1.0);
}

// Eigenvalues ((1 + u)/2, (1 - u)/2) with u = sqrt(1 - x), the small one
// formed without cancellation.
inline std::array<double, 2> qubit_marginal_spectrum(double x) {
    const double u = std::sqrt(1.0 - x);
    const double small = x / (2.0 * (1.0 + u));
    return {1.0 - small, small};
}

}  // namespace detail

/// C^2 = 2 (1 - tr rho_L^2) for a pure state across `part`.
inline double concurrence_squared_pure(const PureState& psi, const Bipartition& part) {
    detail::require_full_partition(psi, part);
    const auto rho = reduced_density(psi, part.left);
    return std::max(0.0, 2.0 * (1.0 - rho.purity()));
}

inline MeasureValue concurrence_pure(const PureState& psi, const Bipartition& part) {
    return {std::sqrt(concurrence_squared_pure(psi, part)), Method::PureBipartite};
}

/// Wootters concurrence max(l1 - l2 - l3 - l4, 0). The l_i are the singular
/// values of tau = V^T (sy x sy) V, where rho = V V^dagger with V built from
/// the eigenvectors of rho scaled by sqrt(p). They are read off the spectrum
/// of the Hermitian dilation [[0, tau], [tau^dagger, 0]].
inline MeasureValue concurrence_2q(const DensityMatrix& rho) {
    detail::require_two_qubit(rho);
    const auto eig = eig_hermitian(rho.matrix());
    std::vector<std::array<Complex, 4>> columns;
    for (std::size_t k = 0; k < 4; ++k) {
        if (eig.eigenvalues[k] <= kRankCutoff) continue;
        const double w = std::sqrt(eig.eigenvalues[k]);
        std::array<Complex, 4> v{};
        for (std::size_t i = 0; i < 4; ++i) v[i] = w * eig.eigenvectors(i, k);
        columns.push_back(v);
    }
    const std::size_t rank = columns.size();
    if (rank == 0) fail(Errc::DomainError, "zero density matrix");

    // (sy x sy) v = (-v3, v2, v1, -v0)
    auto flip = [](const std::array<Complex, 4>& v) {
        return std::array<Complex, 4>{-v[3], v[2], v[1], -v[0]};
    };
    ComplexMatrix dilation(2 * rank);
    for (std::size_t a = 0; a < rank; ++a) {
        const auto flipped = flip(columns[a]);
        for (std::size_t b = 0; b < rank; ++b) {
            Complex tau = 0.0;
            for (std::size_t i = 0; i < 4; ++i) tau += columns[b][i] * flipped[i];
            dilation(a, rank + b) = tau;
            dilation(rank + b, a) = std::conj(tau);
        }
    }
    const auto values = eig_hermitian(dilation).eigenvalues;
    std::array<double, 4> lambda{};
    for (std::size_t i = 0; i < rank; ++i) lambda[i] = std::max(0.0, values[i]);
    return {std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]), Method::Wootters2Qubit};
}

/// h(p) = -p log2 p - (1-p) log2 (1-p).
inline double binary_entropy(double p) {
    p = detail::clamp_unit(p, "binary entropy");
    const double probabilities[2] = {p, 1.0 - p};
    return detail::shannon_bits(probabilities);
}

/// f(x) = h((1 + sqrt(1 - x)) / 2).
inline double wootters_f(double x) {
    x = detail::clamp_unit(x, "wootters_f");
    const auto spectrum = detail::qubit_marginal_spectrum(x);
    return detail::shannon_bits(spectrum);
}

/// Mixed two-qubit envelope on which E_{q,s} = f_{q,s}(C^2) is used.
inline bool unified_f_valid_domain(const UnifiedParams& p) noexcept {
    return p.q >= 1.0 - kDomainClamp && p.s >= 0.0 && p.s <= 1.0 + kDomainClamp && p.q * p.s <= 3.0 + kDomainClamp;
}

/// f_{q,s}(x) = [((1 + u)^q + (1 - u)^q)^s - 2^{qs}] / [(1 - q) s 2^{qs}], u = sqrt(1 - x),
/// i.e. S_{q,s} of the qubit spectrum ((1 + u)/2, (1 - u)/2).
inline double unified_f(double x, const UnifiedParams& p) {
    x = detail::clamp_unit(x, "unified_f");
    const auto spectrum = detail::qubit_marginal_spectrum(x);
    return unified_entropy(spectrum, p);
}

/// Entanglement of formation of a pure state: S(rho_L).
inline MeasureValue eof(const PureState& psi, const Bipartition& part) {
    detail::require_full_partition(psi, part);
    return {von_neumann(reduced_density(psi, part.left)), Method::PureBipartite};
}

/// Entanglement of formation of a two-qubit state: f(C^2).
inline MeasureValue eof(const DensityMatrix& rho) {
    if (!rho.is_two_qubit()) fail(Errc::UnsupportedDomain, "mixed-state EoF is closed-form only for two qubits");
    const double c = concurrence_2q(rho).value;
    return {wootters_f(c * c), Method::FOfCSquared};
}

/// Unified-(q,s) entanglement of a pure state: S_{q,s}(rho_L).
inline MeasureValue unified_ent(const PureState& psi, const Bipartition& part, const UnifiedParams& p) {
    detail::require_full_partition(psi, part);
    return {unified_entropy(reduced_density(psi, part.left), p), Method::PureBipartite};
}

/// Unified-(q,s) entanglement of a two-qubit state: f_{q,s}(C^2).
inline MeasureValue unified_ent(const DensityMatrix& rho, const UnifiedParams& p) {
    p.validate();
    if (!rho.is_two_qubit()) fail(Errc::UnsupportedDomain, "mixed-state E_{q,s} is closed-form only for two qubits");
    if (!unified_f_valid_domain(p)) {
        fail(Errc::UnsupportedDomain, "(q, s) outside q >= 1, 0 <= s <= 1, qs <= 3 for mixed states");
    }
    const double c = concurrence_2q(rho).value;
    return {unified_f(c * c, p), Method::FOfCSquared};
}

/// Concurrence of the two-qubit marginal on subsystems (i, j) of a pure state.
inline double pair_concurrence(const PureState& psi, std::size_t i, std::size_t j) {
    return concurrence_2q(reduced_density(psi, {i, j})).value;
}

}  // namespace entcert
