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
#include "ssrcbqc/mode_algebra.hpp"

namespace ssrcbqc {

/// Dense statevector of an N-qubit dual-rail register. Basis index x has
/// site 1 as its most significant bit.
class QubitState {
   public:
    /// |0...0>.
    explicit QubitState(int qubits);
    QubitState(int qubits, std::vector<Complex> amps);

    static QubitState zero_vector(int qubits);

    int qubits() const noexcept {
        return qubits_;
    }
    size_t size() const noexcept {
        return amps_.size();
    }
    const std::vector<Complex> &amps() const noexcept {
        return amps_;
    }
    std::vector<Complex> &amps() noexcept {
        return amps_;
    }
    Complex operator[](size_t x) const {
        return amps_.at(x);
    }

    double norm() const;
    bool is_zero() const;

    /// Bit position of a 1-based site inside a basis index.
    int bit_of(int site) const;

   private:
    int qubits_;
    std::vector<Complex> amps_;
};

/// Max |a_x - b_x| after rotating b's global phase onto a's at the
/// largest-magnitude amplitude of a.
double max_diff_up_to_phase(const QubitState &a, const QubitState &b);

using Mat2 = Eigen::Matrix2cd;

struct LocalGate {
    int site = 1;
    Mat2 matrix = Mat2::Identity();
};

QubitState apply_local(const QubitState &state, const LocalGate &gate);

enum class PauliAxis { X, Y, Z };

/// exp(i * angle * sigma_axis / 2) on each listed site, i.e. exp(i angle J_axis)
/// with J = sum of sigma/2 over the sites.
QubitState collective_op(const QubitState &state, PauliAxis axis, double angle, std::span<const int> sites);

Mat2 pauli_rotation(PauliAxis axis, double angle);

/// Von Neumann entropy (bits) of the reduced state of `subsystem`.
double entanglement_entropy(const QubitState &state, std::span<const int> subsystem);

/// Schmidt coefficients (descending) across subsystem | rest.
Eigen::VectorXd schmidt_coefficients(const QubitState &state, std::span<const int> subsystem);

/// Reduced density matrix of one site.
Mat2 site_density(const QubitState &state, int site);

struct ProductCheck {
    bool is_product = false;
    /// Per-site factor states, filled only when is_product.
    std::vector<Eigen::Vector2cd> factors;
};

/// Product iff every single-site reduced state has purity >= 1 - tol.
ProductCheck is_product(const QubitState &state, double tol);

/// Local-phase-invariant controlled phase between two sites:
///     arg A++ - arg A+- - arg A-+ + arg A--   (mod 2 pi, in [0, 2 pi)),
/// with amplitudes read in the per-site (+,-) basis and every other site
/// held at (+).
double controlled_phase_extract(const QubitState &state, int site_a = 1, int site_b = 2);

/// The mode whose projected Fock state equals `gates` applied to the
/// projection of |N>_{q1}: each gate acts on its site's (q_i(0), q_i(1)) pair.
ModeVector local_gate_to_mode(std::span<const LocalGate> gates, const ModeVector &q1, const SiteLayout &layout);

/// Smallest distance between two angles on the circle.
double circular_distance(double a, double b);

}  // namespace ssrcbqc
