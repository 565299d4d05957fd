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

// Unified-(q,s) entropy S_{q,s}(rho) = [(tr rho^q)^s - 1] / [(1-q) s] with its
// von Neumann (q -> 1) and Renyi (s -> 0) limits. Logarithms are base 2.

#include <cmath>
#include <numbers>
#include <span>
#include <string>

#include "entcert/error.hpp"
#include "entcert/qstate.hpp"
#include "entcert/spectral.hpp"

namespace entcert {

inline constexpr double kLimitThreshold = 1e-9;
inline constexpr double kEntropyFloor = 1e-12;

struct UnifiedParams {
    double q = 1.0;
    double s = 1.0;

    UnifiedParams() = default;
    UnifiedParams(double q_, double s_) : q(q_), s(s_) { validate(); }

    void validate() const {
        if (!std::isfinite(q) || !std::isfinite(s)) fail(Errc::DomainError, "q and s must be finite");
        if (q < 0.0) fail(Errc::DomainError, "q must be >= 0");
        if (s < 0.0) fail(Errc::DomainError, "s must be >= 0");
    }

    [[nodiscard]] bool is_von_neumann() const noexcept { return std::abs(q - 1.0) < kLimitThreshold; }
    [[nodiscard]] bool is_renyi() const noexcept { return s < kLimitThreshold; }
    [[nodiscard]] bool is_tsallis() const noexcept { return std::abs(s - 1.0) < kLimitThreshold; }
};

namespace detail {

inline double clamp_entropy(double value) {
    if (value < 0.0 && value >= -kEntropyFloor) return 0.0;
    return value;
}

inline double shannon_bits(std::span<const double> probabilities) {
    double acc = 0.0;
    for (double p : probabilities)
        if (p > 0.0) acc -= p * std::log2(p);
    return acc;
}

}  // namespace detail

/// S_{q,s} of a probability vector (eigenvalues of a density matrix).
inline double unified_entropy(std::span<const double> spectrum, const UnifiedParams& p) {
    p.validate();
    if (p.is_von_neumann()) return detail::clamp_entropy(detail::shannon_bits(spectrum));
    const double trace_q = power_trace_of_spectrum(spectrum, p.q);
    if (!(trace_q > 0.0)) fail(Errc::DomainError, "tr rho^q vanished");
    const double log_trace = std::log(trace_q);
    if (p.is_renyi()) return detail::clamp_entropy(log_trace / std::numbers::ln2 / (1.0 - p.q));
    return detail::clamp_entropy(std::expm1(p.s * log_trace) / ((1.0 - p.q) * p.s));
}

inline double unified_entropy(const DensityMatrix& rho, const UnifiedParams& p) {
    const auto spectrum = rho.spectrum();
    return unified_entropy(spectrum, p);
}

inline double von_neumann(const DensityMatrix& rho) { return unified_entropy(rho, UnifiedParams(1.0, 1.0)); }

inline double renyi(const DensityMatrix& rho, double q) { return unified_entropy(rho, UnifiedParams(q, 0.0)); }

inline double tsallis(const DensityMatrix& rho, double q) { return unified_entropy(rho, UnifiedParams(q, 1.0)); }

}  // namespace entcert
