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

#include <optional>
#include <vector>

#include "ssrcbqc/bqc.hpp"
#include "ssrcbqc/error.hpp"
#include "ssrcbqc/fock_space.hpp"
#include "ssrcbqc/mode_algebra.hpp"

namespace ssrcbqc {

/// Per-site dual-rail amplitude r (cos theta |0> + e^{i phi} sin theta |1>).
struct SiteParams {
    double theta = 0;
    double phi = 0;
    double r = 0;
};

struct ExtractionResult {
    /// Renormalized projected state; the zero vector when probability is 0.
    QubitState qubits;
    /// Squared norm of the projected Fock state.
    double probability = 0;
    /// Filled when the input was a single-mode Fock state.
    std::optional<std::vector<SiteParams>> site_params;
};

/// Keeps the terms with exactly one photon per site and maps them onto the
/// dual-rail computational basis.
ExtractionResult project_bqc(const FockState &state, const SiteLayout &layout);

/// The same survivor filter, staying in Fock space.
FockState project_fock(const FockState &state, const SiteLayout &layout);

/// Closed-form projection of |N>_q: per site
///     r_k = sqrt(|q_k(0)|^2 + |q_k(1)|^2),
///     theta_k = atan2(|q_k(1)|, |q_k(0)|),
///     phi_k = arg q_k(1) - arg q_k(0).
std::vector<SiteParams> extraction_params(const ModeVector &q, const SiteLayout &layout);

/// Success probability of projecting |N>_q: N! prod_k r_k^2.
double extraction_probability(std::span<const SiteParams> params);

/// prod_k (cos theta_k |0> + e^{i phi_k} sin theta_k |1>), unnormalized by r.
QubitState product_state(std::span<const SiteParams> params);

/// |N>_q with q = (q1 + w)/sqrt2, then exp(4i eta Jz^2) in the (q1, w)
/// layer, then projection. q1 and w take the balanced site decomposition.
ExtractionResult kerr_then_project(int photons, double eta, int cap = kDefaultPhotonCap);

/// Runs project_bqc and, when `mode` is given, attaches its site parameters.
ExtractionResult extract_fock_in_mode(const ModeVector &mode, int photons, int cap = kDefaultPhotonCap);

}  // namespace ssrcbqc
