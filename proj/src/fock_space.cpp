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

#include "ssrcbqc/fock_space.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace ssrcbqc {

namespace {

void require_modes(const FockState &s, const ModeVector &mode, const char *where) {
    if (s.n_modes() != mode.dim()) {
        throw Error(ErrorCode::DimensionMismatch, std::string(where) + ": state has " +
                                                      std::to_string(s.n_modes()) + " modes, mode vector has " +
                                                      std::to_string(mode.dim()));
    }
}

std::optional<int> shifted(std::optional<int> sector, int delta) {
    if (!sector) {
        return std::nullopt;
    }
    int n = *sector + delta;
    return n < 0 ? std::nullopt : std::optional<int>(n);
}

}  // namespace

int occupation_total(const Occupation &occ) {
    return std::accumulate(occ.begin(), occ.end(), 0);
}

FockState with_sector(FockState s, std::optional<int> sector) {
    if (s.terms_.empty()) {
        s.sector_ = sector;
        s.mixed_ = false;
    }
    return s;
}

FockState::FockState(int n_modes) : n_modes_(n_modes) {
    if (n_modes < 1) {
        throw Error(ErrorCode::InvalidArgument, "FockState: need at least one mode");
    }
}

FockState FockState::vacuum(int n_modes) {
    FockState s(n_modes);
    s.add(Occupation(static_cast<size_t>(n_modes), 0), 1.0);
    return s;
}

FockState FockState::basis_ket(Occupation occ, Complex amplitude) {
    FockState s(static_cast<int>(occ.size()));
    s.add(occ, amplitude);
    return s;
}

Complex FockState::amplitude(const Occupation &occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

void FockState::add(const Occupation &occ, Complex amplitude) {
    if (static_cast<int>(occ.size()) != n_modes_) {
        throw Error(ErrorCode::DimensionMismatch, "FockState::add: occupation length differs from mode count");
    }
    const int total = occupation_total(occ);
    if (terms_.empty() && !mixed_) {
        sector_ = total;
    } else if (!sector_ || *sector_ != total) {
        mixed_ = true;
    }
    terms_[occ] += amplitude;
}

double FockState::norm_squared() const {
    double s = 0;
    for (const auto &[occ, amp] : terms_) {
        s += std::norm(amp);
    }
    return s;
}

double FockState::norm() const {
    return std::sqrt(norm_squared());
}

FockState FockState::normalized() const {
    double n = norm();
    if (n < 1e-300) {
        throw Error(ErrorCode::NotNormalized, "FockState::normalized: zero state");
    }
    FockState out = *this;
    out *= 1.0 / n;
    return out;
}

FockState &FockState::prune(double threshold) {
    std::erase_if(terms_, [threshold](const auto &kv) { return std::abs(kv.second) < threshold; });
    return *this;
}

FockState &FockState::operator+=(const FockState &other) {
    if (other.n_modes_ != n_modes_) {
        throw Error(ErrorCode::DimensionMismatch, "FockState::operator+=: mode counts differ");
    }
    for (const auto &[occ, amp] : other.terms_) {
        add(occ, amp);
    }
    return prune();
}

FockState &FockState::operator-=(const FockState &other) {
    if (other.n_modes_ != n_modes_) {
        throw Error(ErrorCode::DimensionMismatch, "FockState::operator-=: mode counts differ");
    }
    for (const auto &[occ, amp] : other.terms_) {
        add(occ, -amp);
    }
    return prune();
}

FockState &FockState::operator*=(Complex scale) {
    for (auto &[occ, amp] : terms_) {
        amp *= scale;
    }
    return prune();
}

FockState operator+(FockState a, const FockState &b) {
    a += b;
    return a;
}

FockState operator-(FockState a, const FockState &b) {
    a -= b;
    return a;
}

FockState operator*(Complex scale, FockState s) {
    s *= scale;
    return s;
}

FockState create(const FockState &state, const ModeVector &mode) {
    require_modes(state, mode, "create");
    FockState out(state.n_modes());
    for (const auto &[occ, amp] : state.terms()) {
        Occupation next = occ;
        for (int k = 0; k < mode.dim(); ++k) {
            const Complex qk = mode.coeffs()[static_cast<size_t>(k)];
            if (qk == 0.0) {
                continue;
            }
            auto &n = next[static_cast<size_t>(k)];
            if (n == 255) {
                throw Error(ErrorCode::ResourceCap, "create: occupation overflow");
            }
            ++n;
            out.add(next, amp * qk * std::sqrt(static_cast<double>(n)));
            --n;
        }
    }
    out.prune();
    return with_sector(std::move(out), shifted(state.number_definite(), +1));
}

FockState annihilate(const FockState &state, const ModeVector &mode) {
    require_modes(state, mode, "annihilate");
    FockState out(state.n_modes());
    for (const auto &[occ, amp] : state.terms()) {
        Occupation next = occ;
        for (int k = 0; k < mode.dim(); ++k) {
            const Complex qk = mode.coeffs()[static_cast<size_t>(k)];
            auto &n = next[static_cast<size_t>(k)];
            if (qk == 0.0 || n == 0) {
                continue;
            }
            const double factor = std::sqrt(static_cast<double>(n));
            --n;
            out.add(next, amp * std::conj(qk) * factor);
            ++n;
        }
    }
    out.prune();
    return with_sector(std::move(out), shifted(state.number_definite(), -1));
}

FockState fock_in_mode(const ModeVector &mode, int photons, int cap) {
    if (photons < 0) {
        throw Error(ErrorCode::InvalidArgument, "fock_in_mode: photon number must be non-negative");
    }
    if (std::abs(mode.norm() - 1.0) > 1e-9) {
        throw Error(ErrorCode::NotNormalized, "fock_in_mode: mode must have unit norm");
    }
    std::vector<int> support;
    for (int k = 0; k < mode.dim(); ++k) {
        if (mode.coeffs()[static_cast<size_t>(k)] != 0.0) {
            support.push_back(k);
        }
    }
    if (photons > cap && support.size() > 2) {
        throw Error(ErrorCode::ResourceCap, "fock_in_mode: N = " + std::to_string(photons) +
                                                " exceeds the photon cap " + std::to_string(cap));
    }

    // (sum_k q_k b_k^dagger)^N / sqrt(N!) |0> expands over compositions n of N
    // with amplitude sqrt(N! / prod n_k!) prod q_k^{n_k}. Compositions are
    // visited in lexicographic order so inserts land at the end of the map.
    FockState out(mode.dim());
    Occupation occ(static_cast<size_t>(mode.dim()), 0);
    const double log_nfact = std::lgamma(photons + 1.0);
    auto recurse = [&](auto &&self, size_t slot, int remaining, double log_denominator, Complex product) -> void {
        const int k = support[slot];
        if (slot + 1 == support.size()) {
            occ[static_cast<size_t>(k)] = static_cast<std::uint8_t>(remaining);
            const double mag = std::exp(0.5 * (log_nfact - log_denominator - std::lgamma(remaining + 1.0)));
            const Complex amp = mag * product * std::pow(mode.coeffs()[static_cast<size_t>(k)], remaining);
            out.add(occ, amp);
            occ[static_cast<size_t>(k)] = 0;
            return;
        }
        Complex power = 1.0;
        for (int n = 0; n <= remaining; ++n) {
            occ[static_cast<size_t>(k)] = static_cast<std::uint8_t>(n);
            self(self, slot + 1, remaining - n, log_denominator + std::lgamma(n + 1.0), product * power);
            power *= mode.coeffs()[static_cast<size_t>(k)];
        }
        occ[static_cast<size_t>(k)] = 0;
    };
    if (photons > 255) {
        throw Error(ErrorCode::ResourceCap, "fock_in_mode: occupation overflow");
    }
    recurse(recurse, 0, photons, 0.0, 1.0);
    out.prune();
    return with_sector(std::move(out), photons);
}

Complex inner(const FockState &a, const FockState &b) {
    if (a.n_modes() != b.n_modes()) {
        throw Error(ErrorCode::DimensionMismatch, "inner: mode counts differ");
    }
    const auto &small = a.terms().size() <= b.terms().size() ? a.terms() : b.terms();
    const auto &large = a.terms().size() <= b.terms().size() ? b.terms() : a.terms();
    const bool a_is_small = &small == &a.terms();
    Complex s = 0;
    for (const auto &[occ, amp] : small) {
        auto it = large.find(occ);
        if (it == large.end()) {
            continue;
        }
        s += a_is_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return s;
}

FockState transform_modes(const FockState &state, const Eigen::MatrixXcd &unitary) {
    const int m = state.n_modes();
    if (unitary.rows() != m || unitary.cols() != m) {
        throw Error(ErrorCode::DimensionMismatch, "transform_modes: unitary size differs from mode count");
    }
    if (!(unitary.adjoint() * unitary).isIdentity(1e-10)) {
        throw Error(ErrorCode::InvalidArgument, "transform_modes: matrix is not unitary");
    }
    std::vector<ModeVector> columns;
    columns.reserve(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) {
        std::vector<Complex> v(static_cast<size_t>(m));
        for (int r = 0; r < m; ++r) {
            v[static_cast<size_t>(r)] = unitary(r, c);
        }
        columns.emplace_back(std::move(v));
    }

    FockState out(m);
    for (const auto &[occ, amp] : state.terms()) {
        FockState image = FockState::vacuum(m);
        double log_fact = 0;
        for (int k = 0; k < m; ++k) {
            for (int n = 0; n < occ[static_cast<size_t>(k)]; ++n) {
                image = create(image, columns[static_cast<size_t>(k)]);
            }
            log_fact += std::lgamma(occ[static_cast<size_t>(k)] + 1.0);
        }
        image *= amp * std::exp(-0.5 * log_fact);
        out += image;
    }
    return with_sector(std::move(out), state.number_definite());
}

}  // namespace ssrcbqc
