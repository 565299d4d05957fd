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

// JSON state files: {"dims":[2,2,2],"amplitudes":[[re,im],...]} with
// amplitudes in computational-basis order. Writers emit 17 significant digits,
// so a write/read round trip reproduces every amplitude exactly.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "entcert/error.hpp"
#include "entcert/qstate.hpp"

namespace entcert {

namespace detail {

inline std::string format_g17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

}  // namespace detail

inline std::string state_to_json(const PureState& psi) {
    std::string out = "{\"dims\":[";
    const auto& dims = psi.dims();
    for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
    out += "],\"amplitudes\":[";
    const auto amps = psi.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out += i ? ",[" : "[";
        out += detail::format_g17(amps[i].real()) + "," + detail::format_g17(amps[i].imag()) + "]";
    }
    out += "]}\n";
    return out;
}

inline PureState state_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("state file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("amplitudes")) {
        fail(Errc::ParseError, "state file needs \"dims\" and \"amplitudes\"");
    }
    const auto& dims_json = doc["dims"];
    const auto& amps_json = doc["amplitudes"];
    if (!dims_json.is_array() || !amps_json.is_array()) fail(Errc::ParseError, "\"dims\" and \"amplitudes\" must be arrays");
    Dims dims;
    for (const auto& d : dims_json) {
        if (!d.is_number_unsigned()) fail(Errc::ParseError, "dims must be positive integers");
        dims.push_back(d.get<std::size_t>());
    }
    std::vector<Complex> amps;
    for (const auto& a : amps_json) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            fail(Errc::ParseError, "each amplitude must be a [re, im] pair");
        }
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return PureState(std::move(dims), std::move(amps));
}

inline PureState load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return state_from_json(buffer.str());
}

inline void save_state(const PureState& psi, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::IoError, "cannot write " + path.string());
    out << state_to_json(psi);
    if (!out) fail(Errc::IoError, "write failed for " + path.string());
}

}  // namespace entcert
