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

#include "ssrcbqc/ssrc.hpp"

#include <algorithm>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace ssrcbqc {

namespace {

constexpr double kNormTol = 1e-9;

double sum_sq(const std::vector<Complex> &c) {
    double s = 0;
    for (const auto &x : c) {
        s += std::norm(x);
    }
    return s;
}

Eigen::VectorXcd to_eigen(const std::vector<Complex> &c) {
    return Eigen::Map<const Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size()));
}

std::vector<Complex> from_eigen(const Eigen::VectorXcd &v) {
    return {v.data(), v.data() + v.size()};
}

// Number of ambient modes touched by q or w.
int joint_support(const ModeVector &q, const ModeVector &w) {
    int n = 0;
    for (int k = 0; k < q.dim(); ++k) {
        n += (q[k] != 0.0 || w[k] != 0.0);
    }
    return n;
}

}  // namespace

SSRCState::SSRCState(std::vector<Complex> c) : c_(std::move(c)) {
    if (c_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "SSRCState: need N+1 >= 1 coefficients");
    }
    if (std::abs(sum_sq(c_) - 1.0) > kNormTol) {
        throw Error(ErrorCode::NotNormalized,
                    "SSRCState: coefficients are not normalized (sum |c|^2 = " + std::to_string(sum_sq(c_)) + ")");
    }
}

SSRCState SSRCState::normalize(std::vector<Complex> c) {
    const double n = std::sqrt(sum_sq(c));
    if (n < 1e-300) {
        throw Error(ErrorCode::NotNormalized, "SSRCState::normalize: zero vector");
    }
    for (auto &x : c) {
        x /= n;
    }
    return SSRCState(std::move(c));
}

SSRCState SSRCState::all_in_a(int photons) {
    if (photons < 0) {
        throw Error(ErrorCode::InvalidArgument, "SSRCState: negative photon number");
    }
    std::vector<Complex> c(static_cast<size_t>(photons) + 1, 0.0);
    c.back() = 1.0;
    return SSRCState(std::move(c));
}

SSRCState SSRCState::all_in_r(int photons) {
    if (photons < 0) {
        throw Error(ErrorCode::InvalidArgument, "SSRCState: negative photon number");
    }
    std::vector<Complex> c(static_cast<size_t>(photons) + 1, 0.0);
    c.front() = 1.0;
    return SSRCState(std::move(c));
}

const Eigen::MatrixXcd &AngularMomentumOps::axis(char name) const {
    switch (name) {
        case 'x':
            return jx;
        case 'y':
            return jy;
        case 'z':
            return jz;
        default:
            throw Error(ErrorCode::InvalidArgument, std::string("unknown axis '") + name + "'");
    }
}

AngularMomentumOps jordan_schwinger(int photons) {
    if (photons < 0) {
        throw Error(ErrorCode::InvalidArgument, "jordan_schwinger: negative photon number");
    }
    const int d = photons + 1;
    Eigen::MatrixXcd raise = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < photons; ++n) {
        raise(n + 1, n) = std::sqrt(static_cast<double>(n + 1) * static_cast<double>(photons - n));
    }
    AngularMomentumOps ops;
    ops.photons = photons;
    ops.jx = 0.5 * (raise + raise.adjoint());
    ops.jy = Complex(0.0, -0.5) * (raise - raise.adjoint());
    ops.jz = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        ops.jz(n, n) = 0.5 * (2.0 * n - photons);
    }
    return ops;
}

AlgebraResiduals algebra_residuals(int photons) {
    const auto ops = jordan_schwinger(photons);
    const Complex i(0.0, 1.0);
    auto maxabs = [](const Eigen::MatrixXcd &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); };
    auto comm = [](const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) -> Eigen::MatrixXcd {
        return a * b - b * a;
    };

    AlgebraResiduals r;
    for (const auto *j : {&ops.jx, &ops.jy, &ops.jz}) {
        r.hermiticity = std::max(r.hermiticity, maxabs(*j - j->adjoint()));
    }
    r.commutator = std::max({maxabs(comm(ops.jx, ops.jy) - i * ops.jz), maxabs(comm(ops.jy, ops.jz) - i * ops.jx),
                             maxabs(comm(ops.jz, ops.jx) - i * ops.jy)});
    const int d = photons + 1;
    const double j = 0.5 * photons;
    const Eigen::MatrixXcd casimir = ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz;
    r.casimir = maxabs(casimir - j * (j + 1) * Eigen::MatrixXcd::Identity(d, d));

    for (GateKind kind : {GateKind::Rotation, GateKind::Kerr}) {
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            const auto u = gate_unitary(photons, GateSpec{kind, axis, 0.37});
            r.unitarity = std::max(r.unitarity, maxabs(u * u.adjoint() - Eigen::MatrixXcd::Identity(d, d)));
        }
    }
    return r;
}

Eigen::MatrixXcd gate_unitary(int photons, const GateSpec &gate) {
    if (!std::isfinite(gate.parameter)) {
        throw Error(ErrorCode::InvalidArgument, "gate parameter must be finite");
    }
    const auto ops = jordan_schwinger(photons);
    const auto &gen = gate.axis == Axis::X ? ops.jx : gate.axis == Axis::Y ? ops.jy : ops.jz;

    // Phase acquired by an eigenvector of the generator with eigenvalue m.
    auto phase = [&](double m) {
        const double angle = gate.kind == GateKind::Rotation ? gate.parameter * m : 4.0 * gate.parameter * m * m;
        return std::polar(1.0, angle);
    };

    const int d = photons + 1;
    if (gate.axis == Axis::Z) {
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
        for (int n = 0; n < d; ++n) {
            u(n, n) = phase(gen(n, n).real());
        }
        return u;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gen);
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorCode::Undefined, "gate_unitary: eigendecomposition failed");
    }
    Eigen::VectorXcd phases(d);
    for (int n = 0; n < d; ++n) {
        phases(n) = phase(eig.eigenvalues()(n));
    }
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

SSRCState apply_gate(const SSRCState &state, const GateSpec &gate) {
    const Eigen::MatrixXcd u = gate_unitary(state.photons(), gate);
    return SSRCState(from_eigen(u * to_eigen(state.coeffs())));
}

FockState ssrc_to_fock(const SSRCState &state, const ModeVector &q, const ModeVector &w, int cap) {
    if (q.dim() != w.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "ssrc_to_fock: mode dimensions differ");
    }
    if (std::abs(q.norm() - 1.0) > kNormTol || std::abs(w.norm() - 1.0) > kNormTol) {
        throw Error(ErrorCode::NotNormalized, "ssrc_to_fock: modes must have unit norm");
    }
    if (std::abs(mode_overlap(q, w)) > kNormTol) {
        throw Error(ErrorCode::NotOrthogonal, "ssrc_to_fock: A and R modes are not orthogonal");
    }
    const int photons = state.photons();
    if (photons > cap && joint_support(q, w) > 2) {
        throw Error(ErrorCode::ResourceCap, "ssrc_to_fock: N = " + std::to_string(photons) +
                                                " exceeds the photon cap " + std::to_string(cap));
    }

    // ref_powers[j] = (a_w^dagger)^j |0> / sqrt(j!)
    std::vector<FockState> ref_powers;
    ref_powers.reserve(static_cast<size_t>(photons) + 1);
    ref_powers.push_back(FockState::vacuum(q.dim()));
    for (int j = 1; j <= photons; ++j) {
        auto next = create(ref_powers.back(), w);
        next *= 1.0 / std::sqrt(static_cast<double>(j));
        ref_powers.push_back(std::move(next));
    }

    FockState out(q.dim());
    for (int n = 0; n <= photons; ++n) {
        const Complex cn = state[n];
        if (std::abs(cn) < FockState::kPruneThreshold) {
            continue;
        }
        FockState term = ref_powers[static_cast<size_t>(photons - n)];
        for (int j = 1; j <= n; ++j) {
            term = create(term, q);
            term *= 1.0 / std::sqrt(static_cast<double>(j));
        }
        term *= cn;
        out += term;
    }
    return out;
}

SSRCState spin_coherent(int photons, double theta, double phi) {
    auto s = apply_gate(SSRCState::all_in_r(photons), {GateKind::Rotation, Axis::Y, -theta});
    return apply_gate(s, {GateKind::Rotation, Axis::Z, -phi});
}

ModeVector spin_coherent_mode(double theta, double phi) {
    return ModeVector({std::sin(theta / 2), -std::polar(1.0, phi) * std::cos(theta / 2)});
}

std::vector<Complex> ssrc_to_cv(const SSRCState &state) {
    return state.coeffs();
}

SSRCState cv_to_ssrc(std::vector<Complex> amplitudes) {
    return SSRCState(std::move(amplitudes));
}

Complex coherent_limit_exact(int photons, Complex alpha, int k) {
    const double a2 = std::norm(alpha);
    if (photons < 1 || !(a2 < photons)) {
        throw Error(ErrorCode::InvalidArgument, "coherent_limit_exact: need |alpha|^2 < N");
    }
    if (k < 0 || k > photons) {
        throw Error(ErrorCode::InvalidArgument, "coherent_limit_exact: k must lie in [0, N]");
    }
    if (a2 == 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    const double n = photons;
    const double log_mag = 0.5 * (std::lgamma(n + 1) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1)) +
                           k * (std::log(std::abs(alpha)) - 0.5 * std::log(n)) +
                           0.5 * (n - k) * std::log1p(-a2 / n);
    return std::polar(std::exp(log_mag), k * std::arg(alpha));
}

Complex poisson_amplitude(Complex alpha, int k) {
    if (k < 0) {
        throw Error(ErrorCode::InvalidArgument, "poisson_amplitude: k must be non-negative");
    }
    if (alpha == 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    const double log_mag = -0.5 * std::norm(alpha) + k * std::log(std::abs(alpha)) - 0.5 * std::lgamma(k + 1.0);
    return std::polar(std::exp(log_mag), k * std::arg(alpha));
}

Eigen::Matrix2cd one_body_density(const SSRCState &state) {
    const int photons = state.photons();
    double n_a = 0;
    Complex coherence = 0;  // <a_R^dagger a_A>
    for (int n = 0; n <= photons; ++n) {
        n_a += n * std::norm(state[n]);
        if (n > 0) {
            // a_R^dagger a_A |n>|N-n> = sqrt(n (N-n+1)) |n-1>|N-n+1>
            coherence += std::conj(state[n - 1]) * state[n] * std::sqrt(static_cast<double>(n) * (photons - n + 1));
        }
    }
    Eigen::Matrix2cd rho;
    rho << n_a, coherence, std::conj(coherence), photons - n_a;
    return rho;
}

int mode_rank(const SSRCState &state, double tol) {
    const auto rho = one_body_density(state);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(rho);
    const double scale = std::max(1, state.photons());
    int rank = 0;
    for (int i = 0; i < 2; ++i) {
        rank += eig.eigenvalues()(i) > tol * scale;
    }
    return rank;
}

}  // namespace ssrcbqc
