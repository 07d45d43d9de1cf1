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

#include "ssrcbqc/extraction.hpp"

#include <cmath>
#include <string>

#include "ssrcbqc/ssrc.hpp"

namespace ssrcbqc {

namespace {

void require_layout(const FockState &state, const SiteLayout &layout) {
    if (state.n_modes() != layout.n_modes()) {
        throw Error(ErrorCode::DimensionMismatch, "project_bqc: state has " + std::to_string(state.n_modes()) +
                                                      " modes, layout needs " + std::to_string(layout.n_modes()));
    }
    const auto n = state.number_definite();
    if (!state.is_zero() && (!n || *n != layout.sites)) {
        throw Error(ErrorCode::InvalidArgument, "project_bqc: state must hold exactly N = " +
                                                    std::to_string(layout.sites) + " photons");
    }
}

// Basis index of a one-photon-per-site occupation, or -1 if it is filtered.
long long survivor_index(const Occupation &occ, const SiteLayout &layout) {
    long long x = 0;
    for (int site = 1; site <= layout.sites; ++site) {
        const int n0 = occ[static_cast<size_t>(layout.mode_index(site, 0))];
        const int n1 = occ[static_cast<size_t>(layout.mode_index(site, 1))];
        if (n0 + n1 != 1) {
            return -1;
        }
        x = (x << 1) | n1;
    }
    return x;
}

}  // namespace

FockState project_fock(const FockState &state, const SiteLayout &layout) {
    require_layout(state, layout);
    FockState out(state.n_modes());
    for (const auto &[occ, amp] : state.terms()) {
        if (survivor_index(occ, layout) >= 0) {
            out.add(occ, amp);
        }
    }
    return out;
}

ExtractionResult project_bqc(const FockState &state, const SiteLayout &layout) {
    require_layout(state, layout);
    QubitState qubits = QubitState::zero_vector(layout.sites);
    double probability = 0;
    for (const auto &[occ, amp] : state.terms()) {
        const long long x = survivor_index(occ, layout);
        if (x < 0) {
            continue;
        }
        qubits.amps()[static_cast<size_t>(x)] = amp;
        probability += std::norm(amp);
    }
    if (probability > 0) {
        const double scale = 1.0 / std::sqrt(probability);
        for (auto &a : qubits.amps()) {
            a *= scale;
        }
    }
    return {std::move(qubits), probability, std::nullopt};
}

std::vector<SiteParams> extraction_params(const ModeVector &q, const SiteLayout &layout) {
    if (q.dim() != layout.n_modes()) {
        throw Error(ErrorCode::DimensionMismatch, "extraction_params: mode dimension differs from 2N");
    }
    if (std::abs(q.norm() - 1.0) > 1e-9) {
        throw Error(ErrorCode::NotNormalized, "extraction_params: mode must have unit norm");
    }
    std::vector<SiteParams> out;
    out.reserve(static_cast<size_t>(layout.sites));
    for (int site = 1; site <= layout.sites; ++site) {
        const Complex a0 = q[layout.mode_index(site, 0)];
        const Complex a1 = q[layout.mode_index(site, 1)];
        SiteParams p;
        p.r = std::hypot(std::abs(a0), std::abs(a1));
        if (p.r > 0) {
            p.theta = std::atan2(std::abs(a1), std::abs(a0));
            p.phi = std::arg(a1) - std::arg(a0);
        }
        out.push_back(p);
    }
    return out;
}

double extraction_probability(std::span<const SiteParams> params) {
    double log_p = std::lgamma(static_cast<double>(params.size()) + 1.0);
    for (const auto &p : params) {
        if (p.r == 0) {
            return 0.0;
        }
        log_p += 2 * std::log(p.r);
    }
    return std::exp(log_p);
}

QubitState product_state(std::span<const SiteParams> params) {
    const int n = static_cast<int>(params.size());
    QubitState out = QubitState::zero_vector(n);
    for (size_t x = 0; x < out.size(); ++x) {
        Complex a = 1.0;
        for (int site = 1; site <= n; ++site) {
            const auto &p = params[static_cast<size_t>(site - 1)];
            const bool bit = (x >> (n - site)) & 1;
            a *= bit ? std::polar(std::sin(p.theta), p.phi) : Complex(std::cos(p.theta));
        }
        out.amps()[x] = a;
    }
    return out;
}

ExtractionResult extract_fock_in_mode(const ModeVector &mode, int photons, int cap) {
    const SiteLayout layout(photons);
    auto result = project_bqc(fock_in_mode(mode, photons, cap), layout);
    result.site_params = extraction_params(mode, layout);
    return result;
}

ExtractionResult kerr_then_project(int photons, double eta, int cap) {
    if (photons < 2) {
        throw Error(ErrorCode::InvalidArgument, "kerr_then_project: need N >= 2");
    }
    if (photons > cap) {
        throw Error(ErrorCode::ResourceCap, "kerr_then_project: N = " + std::to_string(photons) +
                                                " exceeds the photon cap " + std::to_string(cap));
    }
    const int dim = 2 * photons;
    const auto split = balanced_decomposition(ModeVector::basis(dim, 0), ModeVector::basis(dim, 1), photons);
    const ModeVector q1 = split.to_site_coordinates(ModeVector::basis(dim, 0));
    const ModeVector w = split.to_site_coordinates(ModeVector::basis(dim, 1));

    // |N> in (q1 + w)/sqrt2 over the (A = q1, R = w) pair.
    std::vector<Complex> c(static_cast<size_t>(photons) + 1);
    for (int n = 0; n <= photons; ++n) {
        const double log_binom = std::lgamma(photons + 1.0) - std::lgamma(n + 1.0) - std::lgamma(photons - n + 1.0);
        c[static_cast<size_t>(n)] = std::exp(0.5 * log_binom - 0.5 * photons * std::log(2.0));
    }
    const SSRCState rotated(std::move(c));
    const SSRCState kerred = apply_gate(rotated, {GateKind::Kerr, Axis::Z, eta});
    return project_bqc(ssrc_to_fock(kerred, q1, w, cap), SiteLayout(photons));
}

}  // namespace ssrcbqc
