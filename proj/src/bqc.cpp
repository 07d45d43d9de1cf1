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

#include "ssrcbqc/bqc.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ssrcbqc {

namespace {

constexpr int kMaxQubits = 26;
constexpr double kSingularFloor = 1e-12;
constexpr double kUnitaryTol = 1e-10;

void require_site(const QubitState &s, int site, const char *where) {
    if (site < 1 || site > s.qubits()) {
        throw Error(ErrorCode::InvalidArgument, std::string(where) + ": site " + std::to_string(site) +
                                                    " outside 1.." + std::to_string(s.qubits()));
    }
}

void require_distinct(std::span<const int> sites, const char *where) {
    std::vector<int> sorted(sites.begin(), sites.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::InvalidArgument, std::string(where) + ": duplicate sites");
    }
}

void require_unitary(const Mat2 &m, const char *where) {
    if (!(m * m.adjoint()).isIdentity(kUnitaryTol)) {
        throw Error(ErrorCode::InvalidArgument, std::string(where) + ": gate is not unitary");
    }
}

}  // namespace

QubitState::QubitState(int qubits) : QubitState(zero_vector(qubits)) {
    amps_[0] = 1.0;
}

QubitState::QubitState(int qubits, std::vector<Complex> amps) : qubits_(qubits), amps_(std::move(amps)) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw Error(ErrorCode::InvalidArgument, "QubitState: qubit count must lie in 1.." + std::to_string(kMaxQubits));
    }
    if (amps_.size() != (size_t{1} << qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "QubitState: expected 2^N amplitudes");
    }
}

QubitState QubitState::zero_vector(int qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw Error(ErrorCode::InvalidArgument, "QubitState: qubit count must lie in 1.." + std::to_string(kMaxQubits));
    }
    return QubitState(qubits, std::vector<Complex>(size_t{1} << qubits, 0.0));
}

double QubitState::norm() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

bool QubitState::is_zero() const {
    return std::all_of(amps_.begin(), amps_.end(), [](Complex a) { return a == 0.0; });
}

int QubitState::bit_of(int site) const {
    require_site(*this, site, "QubitState::bit_of");
    return qubits_ - site;
}

double max_diff_up_to_phase(const QubitState &a, const QubitState &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "max_diff_up_to_phase: sizes differ");
    }
    size_t pivot = 0;
    for (size_t x = 1; x < a.size(); ++x) {
        if (std::abs(a[x]) > std::abs(a[pivot])) {
            pivot = x;
        }
    }
    Complex phase = 1.0;
    if (std::abs(a[pivot]) > 0 && std::abs(b[pivot]) > 0) {
        phase = (a[pivot] / std::abs(a[pivot])) / (b[pivot] / std::abs(b[pivot]));
    }
    double m = 0;
    for (size_t x = 0; x < a.size(); ++x) {
        m = std::max(m, std::abs(a[x] - phase * b[x]));
    }
    return m;
}

QubitState apply_local(const QubitState &state, const LocalGate &gate) {
    require_site(state, gate.site, "apply_local");
    require_unitary(gate.matrix, "apply_local");
    QubitState out = state;
    const size_t mask = size_t{1} << state.bit_of(gate.site);
    auto &v = out.amps();
    for (size_t x = 0; x < v.size(); ++x) {
        if (x & mask) {
            continue;
        }
        const Complex a0 = v[x];
        const Complex a1 = v[x | mask];
        v[x] = gate.matrix(0, 0) * a0 + gate.matrix(0, 1) * a1;
        v[x | mask] = gate.matrix(1, 0) * a0 + gate.matrix(1, 1) * a1;
    }
    return out;
}

Mat2 pauli_rotation(PauliAxis axis, double angle) {
    // exp(i a sigma / 2) = cos(a/2) I + i sin(a/2) sigma
    const Complex c = std::cos(angle / 2);
    const Complex is = Complex(0.0, std::sin(angle / 2));
    Mat2 m;
    switch (axis) {
        case PauliAxis::X:
            m << c, is, is, c;
            break;
        case PauliAxis::Y:
            m << c, is * Complex(0, -1), is * Complex(0, 1), c;
            break;
        case PauliAxis::Z:
            m << c + is, 0.0, 0.0, c - is;
            break;
    }
    return m;
}

QubitState collective_op(const QubitState &state, PauliAxis axis, double angle, std::span<const int> sites) {
    require_distinct(sites, "collective_op");
    const Mat2 u = pauli_rotation(axis, angle);
    QubitState out = state;
    for (int site : sites) {
        out = apply_local(out, {site, u});
    }
    return out;
}

namespace {

// Amplitudes reshaped as (subsystem index) x (rest index).
Eigen::MatrixXcd bipartite_matrix(const QubitState &state, std::span<const int> subsystem) {
    const int n = state.qubits();
    if (subsystem.empty() || static_cast<int>(subsystem.size()) >= n) {
        throw Error(ErrorCode::InvalidArgument, "bipartition must be a nonempty proper subset of sites");
    }
    require_distinct(subsystem, "bipartition");
    for (int s : subsystem) {
        require_site(state, s, "bipartition");
    }
    std::vector<int> rest;
    for (int s = 1; s <= n; ++s) {
        if (std::find(subsystem.begin(), subsystem.end(), s) == subsystem.end()) {
            rest.push_back(s);
        }
    }
    const Eigen::Index rows = Eigen::Index{1} << subsystem.size();
    const Eigen::Index cols = Eigen::Index{1} << rest.size();
    Eigen::MatrixXcd m(rows, cols);
    for (size_t x = 0; x < state.size(); ++x) {
        Eigen::Index r = 0;
        Eigen::Index c = 0;
        for (int s : subsystem) {
            r = (r << 1) | static_cast<Eigen::Index>((x >> state.bit_of(s)) & 1);
        }
        for (int s : rest) {
            c = (c << 1) | static_cast<Eigen::Index>((x >> state.bit_of(s)) & 1);
        }
        m(r, c) = state[x];
    }
    return m;
}

}  // namespace

Eigen::VectorXd schmidt_coefficients(const QubitState &state, std::span<const int> subsystem) {
    const Eigen::MatrixXcd m = bipartite_matrix(state, subsystem);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues();
}

double entanglement_entropy(const QubitState &state, std::span<const int> subsystem) {
    const Eigen::VectorXd s = schmidt_coefficients(state, subsystem);
    const double total = s.squaredNorm();
    if (total <= 0) {
        throw Error(ErrorCode::Undefined, "entanglement_entropy: zero state");
    }
    double h = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) < kSingularFloor) {
            continue;
        }
        const double p = s(i) * s(i) / total;
        h -= p * std::log2(p);
    }
    return std::max(h, 0.0);
}

Mat2 site_density(const QubitState &state, int site) {
    require_site(state, site, "site_density");
    const size_t mask = size_t{1} << state.bit_of(site);
    Mat2 rho = Mat2::Zero();
    for (size_t x = 0; x < state.size(); ++x) {
        if (x & mask) {
            continue;
        }
        const Complex a0 = state[x];
        const Complex a1 = state[x | mask];
        rho(0, 0) += std::norm(a0);
        rho(0, 1) += a0 * std::conj(a1);
        rho(1, 0) += a1 * std::conj(a0);
        rho(1, 1) += std::norm(a1);
    }
    return rho;
}

ProductCheck is_product(const QubitState &state, double tol) {
    ProductCheck out;
    const double n2 = state.norm() * state.norm();
    if (n2 <= 0) {
        return out;
    }
    std::vector<Eigen::Vector2cd> factors;
    for (int site = 1; site <= state.qubits(); ++site) {
        const Mat2 rho = site_density(state, site) / n2;
        const double purity = (rho * rho).trace().real();
        if (purity < 1.0 - tol) {
            return out;
        }
        Eigen::SelfAdjointEigenSolver<Mat2> eig(rho);
        Eigen::Vector2cd v = eig.eigenvectors().col(1);
        const int anchor = std::abs(v(0)) > 1e-10 ? 0 : 1;
        v *= std::conj(v(anchor)) / std::abs(v(anchor));
        factors.push_back(v);
    }
    out.is_product = true;
    out.factors = std::move(factors);
    return out;
}

double controlled_phase_extract(const QubitState &state, int site_a, int site_b) {
    if (state.qubits() < 2) {
        throw Error(ErrorCode::InvalidArgument, "controlled_phase_extract: need at least two qubits");
    }
    require_site(state, site_a, "controlled_phase_extract");
    require_site(state, site_b, "controlled_phase_extract");
    if (site_a == site_b) {
        throw Error(ErrorCode::InvalidArgument, "controlled_phase_extract: sites must differ");
    }
    const size_t mask_a = size_t{1} << state.bit_of(site_a);
    const size_t mask_b = size_t{1} << state.bit_of(site_b);

    // <s_a s_b + ... +|psi>, with <+|x> = 1/sqrt2 and <-|x> = (-1)^x/sqrt2.
    Complex amp[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (size_t x = 0; x < state.size(); ++x) {
        const bool xa = x & mask_a;
        const bool xb = x & mask_b;
        for (int sa = 0; sa < 2; ++sa) {
            for (int sb = 0; sb < 2; ++sb) {
                const bool negative = (sa && xa) != (sb && xb);
                amp[sa][sb] += negative ? -state[x] : state[x];
            }
        }
    }
    const double floor = 1e-12 * std::max(state.norm(), 1e-300) * std::sqrt(static_cast<double>(state.size()));
    for (auto &row : amp) {
        for (auto &a : row) {
            if (std::abs(a) < floor) {
                throw Error(ErrorCode::Undefined, "controlled_phase_extract: vanishing amplitude in the (+,-) basis");
            }
        }
    }
    const Complex cross = amp[0][0] * std::conj(amp[0][1]) * std::conj(amp[1][0]) * amp[1][1];
    double phi = std::arg(cross);
    if (phi < 0) {
        phi += 2 * std::numbers::pi;
    }
    return phi;
}

ModeVector local_gate_to_mode(std::span<const LocalGate> gates, const ModeVector &q1, const SiteLayout &layout) {
    if (q1.dim() != layout.n_modes()) {
        throw Error(ErrorCode::DimensionMismatch, "local_gate_to_mode: mode dimension differs from 2N");
    }
    std::vector<int> sites;
    for (const auto &g : gates) {
        sites.push_back(g.site);
    }
    require_distinct(sites, "local_gate_to_mode");
    std::vector<Complex> c = q1.coeffs();
    for (const auto &g : gates) {
        require_unitary(g.matrix, "local_gate_to_mode");
        const auto i0 = static_cast<size_t>(layout.mode_index(g.site, 0));
        const auto i1 = static_cast<size_t>(layout.mode_index(g.site, 1));
        const Complex a0 = c[i0];
        const Complex a1 = c[i1];
        c[i0] = g.matrix(0, 0) * a0 + g.matrix(0, 1) * a1;
        c[i1] = g.matrix(1, 0) * a0 + g.matrix(1, 1) * a1;
    }
    return ModeVector(std::move(c));
}

double circular_distance(double a, double b) {
    const double two_pi = 2 * std::numbers::pi;
    double d = std::fmod(std::abs(a - b), two_pi);
    return std::min(d, two_pi - d);
}

}  // namespace ssrcbqc
