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

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ssrcbqc/error.hpp"
#include "ssrcbqc/mode_algebra.hpp"

namespace ssrcbqc {

/// Occupation numbers, one per ambient mode. Ordered lexicographically.
using Occupation = std::vector<std::uint8_t>;

int occupation_total(const Occupation &occ);

/// Sparse superposition of multimode Fock basis kets.
///
/// Amplitudes below kPruneThreshold are dropped after every operator
/// application. The empty term map is the zero vector, which annihilation and
/// projection can legitimately produce.
class FockState {
   public:
    static constexpr double kPruneThreshold = 1e-12;

    /// The zero vector on n_modes modes.
    explicit FockState(int n_modes);

    static FockState vacuum(int n_modes);
    static FockState basis_ket(Occupation occ, Complex amplitude = 1.0);

    int n_modes() const noexcept {
        return n_modes_;
    }
    /// Total photon number shared by every term, if there is one.
    std::optional<int> number_definite() const noexcept {
        return mixed_ ? std::nullopt : sector_;
    }
    const std::map<Occupation, Complex> &terms() const noexcept {
        return terms_;
    }
    bool is_zero() const noexcept {
        return terms_.empty();
    }

    Complex amplitude(const Occupation &occ) const;

    /// Accumulates amplitude onto a basis ket.
    void add(const Occupation &occ, Complex amplitude);

    double norm_squared() const;
    double norm() const;
    FockState normalized() const;
    FockState &prune(double threshold = kPruneThreshold);

    FockState &operator+=(const FockState &other);
    FockState &operator-=(const FockState &other);
    FockState &operator*=(Complex scale);

   private:
    friend FockState with_sector(FockState s, std::optional<int> sector);

    int n_modes_;
    std::map<Occupation, Complex> terms_;
    std::optional<int> sector_;
    bool mixed_ = false;
};

FockState operator+(FockState a, const FockState &b);
FockState operator-(FockState a, const FockState &b);
FockState operator*(Complex scale, FockState s);

/// a_mode^dagger |state>.
FockState create(const FockState &state, const ModeVector &mode);

/// a_mode |state>. The vacuum maps to the zero vector.
FockState annihilate(const FockState &state, const ModeVector &mode);

/// |N>_mode = (a_mode^dagger)^N / sqrt(N!) |vacuum>.
///
/// Throws ResourceCap when N exceeds `cap` and the mode spreads over more than
/// two ambient modes.
FockState fock_in_mode(const ModeVector &mode, int photons, int cap = kDefaultPhotonCap);

/// <a|b>.
Complex inner(const FockState &a, const FockState &b);

/// Passive linear transformation b_m^dagger -> sum_k U(k, m) b_k^dagger,
/// applied term by term.
FockState transform_modes(const FockState &state, const Eigen::MatrixXcd &unitary);

}  // namespace ssrcbqc
