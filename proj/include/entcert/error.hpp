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

#include <stdexcept>
#include <string>
#include <string_view>

namespace entcert {

enum class Errc {
    NonHermitian,
    NoConvergence,
    NegativeEigenvalue,
    NotNormalized,
    BadIndex,
    BadArity,
    BadPartition,
    BadDims,
    DomainError,
    UnsupportedDomain,
    NotSorted,
    PreconditionFailed,
    NoRoot,
    DegenerateValue,
    BadSpec,
    BadGrid,
    ParseError,
    IoError,
};

constexpr std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::NonHermitian: return "NonHermitian";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::NegativeEigenvalue: return "NegativeEigenvalue";
        case Errc::NotNormalized: return "NotNormalized";
        case Errc::BadIndex: return "BadIndex";
        case Errc::BadArity: return "BadArity";
        case Errc::BadPartition: return "BadPartition";
        case Errc::BadDims: return "BadDims";
        case Errc::DomainError: return "DomainError";
        case Errc::UnsupportedDomain: return "UnsupportedDomain";
        case Errc::NotSorted: return "NotSorted";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::NoRoot: return "NoRoot";
        case Errc::DegenerateValue: return "DegenerateValue";
        case Errc::BadSpec: return "BadSpec";
        case Errc::BadGrid: return "BadGrid";
        case Errc::ParseError: return "ParseError";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library. The code identifies the failure class;
/// what() carries a human-readable diagnostic prefixed by the code name.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace entcert
