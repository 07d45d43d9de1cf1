// Copyright 2026 The ssrc-bqc Authors
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

#include "ssrcbqc/json_io.hpp"

#include <json.hpp>

namespace ssrcbqc {

using nlohmann::json;

namespace {

json complex_json(Complex c) {
    return json{{"re", c.real()}, {"im", c.imag()}};
}

json complex_list(const std::vector<Complex> &v) {
    json out = json::array();
    for (const auto &c : v) {
        out.push_back(complex_json(c));
    }
    return out;
}

template <typename F>
auto guarded(std::string_view what, F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + ": malformed JSON: " + e.what());
    }
}

Complex parse_complex(const json &j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

std::vector<Complex> parse_complex_list(const json &j) {
    std::vector<Complex> out;
    for (const auto &c : j) {
        out.push_back(parse_complex(c));
    }
    return out;
}

}  // namespace

std::string to_json(const ModeVector &mode) {
    return json{{"dim", mode.dim()}, {"coeffs", complex_list(mode.coeffs())}}.dump();
}

std::string to_json(const FockState &state) {
    json terms = json::array();
    for (const auto &[occ, amp] : state.terms()) {
        std::vector<int> o(occ.begin(), occ.end());
        terms.push_back(json{{"occ", o}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    json nd = nullptr;
    if (auto n = state.number_definite()) {
        nd = *n;
    }
    return json{{"n_modes", state.n_modes()}, {"number_definite", nd}, {"terms", terms}}.dump();
}

std::string to_json(const SSRCState &state) {
    return json{{"N", state.photons()}, {"c", complex_list(state.coeffs())}}.dump();
}

std::string to_json(const QubitState &state) {
    return json{{"N", state.qubits()}, {"amps", complex_list(state.amps())}}.dump();
}

ModeVector mode_from_json(std::string_view text) {
    return guarded("ModeVector", [&] {
        const json j = json::parse(text);
        auto coeffs = parse_complex_list(j.at("coeffs"));
        if (j.at("dim").get<int>() != static_cast<int>(coeffs.size())) {
            throw Error(ErrorCode::DimensionMismatch, "ModeVector JSON: dim disagrees with coeffs length");
        }
        return ModeVector(std::move(coeffs));
    });
}

FockState fock_from_json(std::string_view text) {
    return guarded("FockState", [&] {
        const json j = json::parse(text);
        const int n_modes = j.at("n_modes").get<int>();
        FockState state(n_modes);
        for (const auto &t : j.at("terms")) {
            const auto o = t.at("occ").get<std::vector<int>>();
            Occupation occ;
            for (int n : o) {
                if (n < 0 || n > 255) {
                    throw Error(ErrorCode::InvalidArgument, "FockState JSON: occupation out of range");
                }
                occ.push_back(static_cast<std::uint8_t>(n));
            }
            state.add(occ, parse_complex(t));
        }
        const auto &nd = j.at("number_definite");
        if (!nd.is_null()) {
            const int n = nd.get<int>();
            if (state.number_definite() != n && !state.is_zero()) {
                throw Error(ErrorCode::InvalidArgument, "FockState JSON: number_definite disagrees with terms");
            }
        }
        return state;
    });
}

SSRCState ssrc_from_json(std::string_view text) {
    return guarded("SSRCState", [&] {
        const json j = json::parse(text);
        auto c = parse_complex_list(j.at("c"));
        if (j.at("N").get<int>() + 1 != static_cast<int>(c.size())) {
            throw Error(ErrorCode::DimensionMismatch, "SSRCState JSON: expected N+1 coefficients");
        }
        return SSRCState(std::move(c));
    });
}

QubitState qubits_from_json(std::string_view text) {
    return guarded("QubitState", [&] {
        const json j = json::parse(text);
        return QubitState(j.at("N").get<int>(), parse_complex_list(j.at("amps")));
    });
}

}  // namespace ssrcbqc
