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

#include "ssrcbqc/encodings.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ssrcbqc/fock_space.hpp"

namespace ssrcbqc {

namespace {

void require_alpha(int photons, Complex alpha, const char *where) {
    if (photons < 1) {
        throw Error(ErrorCode::InvalidArgument, std::string(where) + ": need N >= 1");
    }
    // Tolerate rounding at the boundary |alpha|^2 = N.
    if (std::norm(alpha) > photons * (1 + 1e-12)) {
        throw Error(ErrorCode::InvalidArgument, std::string(where) + ": need |alpha|^2 <= N");
    }
}

}  // namespace

std::pair<ModeVector, ModeVector> plus_minus_modes(int photons, Complex alpha) {
    require_alpha(photons, alpha, "plus_minus_modes");
    const double n = photons;
    const double ref = std::sqrt(std::max(0.0, 1.0 - std::norm(alpha) / n));
    const Complex sys = alpha / std::sqrt(n);
    return {ModeVector({sys, ref}), ModeVector({-sys, ref})};
}

Complex fock_overlap(int photons, Complex alpha) {
    require_alpha(photons, alpha, "fock_overlap");
    return std::pow(1.0 - 2.0 * std::norm(alpha) / photons, photons);
}

Complex fock_overlap_numeric(int photons, Complex alpha, int cap) {
    const auto [plus, minus] = plus_minus_modes(photons, alpha);
    return inner(fock_in_mode(plus, photons, cap), fock_in_mode(minus, photons, cap));
}

double cat_normalization(int photons, Complex alpha, int sign) {
    if (sign != 1 && sign != -1) {
        throw Error(ErrorCode::InvalidArgument, "cat_normalization: sign must be +1 or -1");
    }
    return 2.0 * (1.0 + sign * fock_overlap(photons, alpha).real());
}

ExtractionResult cat_to_bqc(int photons, int sign, int cap) {
    if (photons < 2) {
        throw Error(ErrorCode::InvalidArgument, "cat_to_bqc: need N >= 2");
    }
    if (sign != 1 && sign != -1) {
        throw Error(ErrorCode::InvalidArgument, "cat_to_bqc: sign must be +1 or -1");
    }
    if (photons > cap) {
        throw Error(ErrorCode::ResourceCap, "cat_to_bqc: N = " + std::to_string(photons) +
                                                " exceeds the photon cap " + std::to_string(cap));
    }
    const Complex alpha = std::sqrt(photons / 2.0);
    const auto [plus, minus] = plus_minus_modes(photons, alpha);
    if (std::abs(mode_overlap(plus, minus)) > 1e-12) {
        throw Error(ErrorCode::NotOrthogonal, "cat_to_bqc: b+ and b- are not orthogonal");
    }

    // Isometry b+ -> sum_i b_i(0)/sqrt(N), b- -> sum_i b_i(1)/sqrt(N).
    const SiteLayout layout(photons);
    std::vector<Complex> p(static_cast<size_t>(layout.n_modes()), 0.0);
    std::vector<Complex> m(static_cast<size_t>(layout.n_modes()), 0.0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(photons));
    for (int site = 1; site <= photons; ++site) {
        p[static_cast<size_t>(layout.mode_index(site, 0))] = amp;
        m[static_cast<size_t>(layout.mode_index(site, 1))] = amp;
    }
    FockState noon = fock_in_mode(ModeVector(std::move(p)), photons, cap);
    FockState other = fock_in_mode(ModeVector(std::move(m)), photons, cap);
    other *= static_cast<double>(sign);
    noon += other;
    noon *= 1.0 / std::numbers::sqrt2;
    return project_bqc(noon, layout);
}

}  // namespace ssrcbqc
