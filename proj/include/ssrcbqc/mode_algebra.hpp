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
#include <span>
#include <vector>

#include "ssrcbqc/error.hpp"

namespace ssrcbqc {

/// A collective bosonic mode, given by its coefficients over an ordered
/// orthonormal basis of field modes.
///
/// The coefficients are those of the creation operator:
///     a_q^dagger = sum_k q_k b_k^dagger,
/// so the annihilation operator carries the conjugates, and
/// [a_q, a_w^dagger] = sum_k conj(q_k) w_k.
class ModeVector {
   public:
    explicit ModeVector(std::vector<Complex> coeffs);

    /// Canonical basis vector e_index of the given dimension.
    static ModeVector basis(int dim, int index);

    int dim() const noexcept {
        return static_cast<int>(coeffs_.size());
    }
    const std::vector<Complex> &coeffs() const noexcept {
        return coeffs_;
    }
    Complex operator[](int k) const {
        return coeffs_.at(static_cast<size_t>(k));
    }

    double norm() const;
    ModeVector normalized() const;

    /// Same mode with the global phase fixed: the first coefficient of
    /// magnitude above 1e-10 is made real positive.
    ModeVector phase_canonical() const;

    ModeVector &operator+=(const ModeVector &other);
    ModeVector &operator-=(const ModeVector &other);
    ModeVector &operator*=(Complex scale);

   private:
    std::vector<Complex> coeffs_;
};

ModeVector operator+(ModeVector a, const ModeVector &b);
ModeVector operator-(ModeVector a, const ModeVector &b);
ModeVector operator*(Complex scale, ModeVector v);

/// sum_k conj(q_k) w_k, the commutator [a_q, a_w^dagger].
Complex mode_overlap(const ModeVector &q, const ModeVector &w);

/// Largest |v_k - w_k| after both are brought to the canonical phase.
double mode_distance_up_to_phase(const ModeVector &v, const ModeVector &w);

/// Extends mutually orthonormal vectors to a full orthonormal basis of C^dim.
/// Candidates are canonical basis vectors in index order; a candidate whose
/// residual norm after projection falls below 1e-10 is skipped.
std::vector<ModeVector> orthonormal_complete(std::span<const ModeVector> partial, int dim);

/// Dual-rail site bookkeeping: site i in 1..N with internal state p in {0,1}
/// lives on ambient mode 2(i-1)+p.
struct SiteLayout {
    int sites = 0;

    explicit SiteLayout(int n);

    int n_modes() const noexcept {
        return 2 * sites;
    }
    int mode_index(int site, int p) const;
};

/// A unitary change of basis in which two orthonormal modes q and w take the
/// balanced form over 2N site modes:
///     a_q = sum_i (b_i(0) + b_i(1)) / sqrt(2N),
///     a_w = sum_i (b_i(0) - b_i(1)) / sqrt(2N).
struct BalancedDecomposition {
    int photons = 0;
    /// Columns are ambient-coordinate vectors. Column m < 2N is the site mode
    /// with index m in SiteLayout order; the remaining columns complete the
    /// basis when the ambient space is larger than 2N.
    Eigen::MatrixXcd basis;

    ModeVector site_mode(int site, int p) const;

    /// Coefficients of v over the 2N site modes. Fails if v has weight
    /// outside their span.
    ModeVector to_site_coordinates(const ModeVector &v) const;
};

BalancedDecomposition balanced_decomposition(const ModeVector &q, const ModeVector &w, int photons);

}  // namespace ssrcbqc
