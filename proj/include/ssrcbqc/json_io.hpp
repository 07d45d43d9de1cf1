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

#pragma once

// JSON wire forms. Complex numbers are {"re": x, "im": y}.
//
//   ModeVector  {"dim": M, "coeffs": [c, ...]}
//   FockState   {"n_modes": M, "number_definite": N | null,
//                "terms": [{"occ": [..], "re": x, "im": y}, ...]}
//               (terms sorted lexicographically by occ)
//   SSRCState   {"N": N, "c": [c, ...]}
//   QubitState  {"N": n, "amps": [c, ...]}   (site 1 = most significant bit)

#include <string>
#include <string_view>

#include "ssrcbqc/bqc.hpp"
#include "ssrcbqc/fock_space.hpp"
#include "ssrcbqc/mode_algebra.hpp"
#include "ssrcbqc/ssrc.hpp"

namespace ssrcbqc {

std::string to_json(const ModeVector &mode);
std::string to_json(const FockState &state);
std::string to_json(const SSRCState &state);
std::string to_json(const QubitState &state);

ModeVector mode_from_json(std::string_view text);
FockState fock_from_json(std::string_view text);
SSRCState ssrc_from_json(std::string_view text);
QubitState qubits_from_json(std::string_view text);

}  // namespace ssrcbqc
