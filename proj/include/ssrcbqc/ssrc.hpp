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
#include <vector>

#include "ssrcbqc/error.hpp"
#include "ssrcbqc/fock_space.hpp"
#include "ssrcbqc/mode_algebra.hpp"

namespace ssrcbqc {

/// Fixed-photon-number state of a system mode A and a quantized phase
/// reference R:
///     |psi> = sum_n c_n |n>_A |N-n>_R,   n = 0..N.
/// c[n] is the amplitude with n photons in A. Always normalized to 1e-9.
class SSRCState {
   public:
    explicit SSRCState(std::vector<Complex> c);

    /// Rescales c to unit norm first.
    static SSRCState normalize(std::vector<Complex> c);

    /// All N photons in A (c_N = 1) or all in R (c_0 = 1).
    static SSRCState all_in_a(int photons);
    static SSRCState all_in_r(int photons);

    int photons() const noexcept {
        return static_cast<int>(c_.size()) - 1;
    }
    const std::vector<Complex> &coeffs() const noexcept {
        return c_;
    }
    Complex operator[](int n) const {
        return c_.at(static_cast<size_t>(n));
    }

   private:
    std::vector<Complex> c_;
};

/// Jordan-Schwinger angular momentum on the fixed-N two-mode subspace, in the
/// basis |n>_A|N-n>_R with n ascending:
///     Jz = (n_A - n_R)/2,  Jx = (J+ + J-)/2,  Jy = (J+ - J-)/(2i),
/// with J+ = a_A^dagger a_R, so that [Jx, Jy] = i Jz.
struct AngularMomentumOps {
    int photons = 0;
    Eigen::MatrixXcd jx;
    Eigen::MatrixXcd jy;
    Eigen::MatrixXcd jz;

    const Eigen::MatrixXcd &axis(char name) const;
};

AngularMomentumOps jordan_schwinger(int photons);

/// Largest absolute entry of each su(2) residual matrix.
struct AlgebraResiduals {
    double hermiticity = 0;
    double commutator = 0;
    double casimir = 0;
    double unitarity = 0;
};

AlgebraResiduals algebra_residuals(int photons);

enum class Axis { X, Y, Z };
enum class GateKind { Rotation, Kerr };

/// Rotation: exp(i * parameter * J_axis).
/// Kerr:     exp(4i * parameter * J_axis^2).
struct GateSpec {
    GateKind kind = GateKind::Rotation;
    Axis axis = Axis::Z;
    double parameter = 0.0;
};

Eigen::MatrixXcd gate_unitary(int photons, const GateSpec &gate);

SSRCState apply_gate(const SSRCState &state, const GateSpec &gate);

/// Identifies A with mode q and R with mode w (which must be orthonormal):
///     sum_n c_n (a_q^dagger)^n (a_w^dagger)^(N-n) / sqrt(n!(N-n)!) |vacuum>.
FockState ssrc_to_fock(const SSRCState &state, const ModeVector &q, const ModeVector &w,
                       int cap = kDefaultPhotonCap);

/// exp(-i phi Jz) exp(-i theta Jy) applied to the lowest-weight ket (all
/// photons in R). This is the N-photon Fock state of the single mode
///     a_B^dagger = sin(theta/2) a_A^dagger - e^{i phi} cos(theta/2) a_R^dagger
/// up to a global phase.
SSRCState spin_coherent(int photons, double theta, double phi);

/// Creation coefficients (over A, R) of the mode B above.
ModeVector spin_coherent_mode(double theta, double phi);

/// Externalizes the reference: c_n become Fock amplitudes of a single mode.
std::vector<Complex> ssrc_to_cv(const SSRCState &state);
SSRCState cv_to_ssrc(std::vector<Complex> amplitudes);

/// Amplitude of |k>_{a(N)} |N-k>_{b(N)} in |N>_b, evaluated in log space:
///     sqrt(C(N,k)) (alpha/sqrt(N))^k (1 - |alpha|^2/N)^((N-k)/2).
Complex coherent_limit_exact(int photons, Complex alpha, int k);

/// Glauber coefficient e^{-|alpha|^2/2} alpha^k / sqrt(k!).
Complex poisson_amplitude(Complex alpha, int k);

/// One-body density matrix rho(i, j) = <a_j^dagger a_i> over (A, R).
Eigen::Matrix2cd one_body_density(const SSRCState &state);

/// Number of occupied natural modes: 1 exactly when the state is a Fock state
/// of a single collective mode.
int mode_rank(const SSRCState &state, double tol = 1e-10);

}  // namespace ssrcbqc
