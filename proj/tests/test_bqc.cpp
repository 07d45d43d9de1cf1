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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ssrcbqc/bqc.hpp"
#include "test_support.hpp"

using namespace ssrcbqc;

namespace {

const double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

QubitState random_qubits(oracle::Rng &rng, int n) {
    return QubitState(n, rng.unit(1 << n));
}

QubitState bell() {
    return QubitState(2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

QubitState ghz(int n, int sign) {
    std::vector<Complex> a(size_t{1} << n, 0.0);
    a.front() = kInvSqrt2;
    a.back() = sign * kInvSqrt2;
    return QubitState(n, a);
}

// Gate diagonal in the (+,-) basis.
Mat2 plus_minus_phase(double a, double b) {
    Mat2 h;
    h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    Mat2 d = Mat2::Zero();
    d(0, 0) = std::polar(1.0, a);
    d(1, 1) = std::polar(1.0, b);
    return h * d * h;
}

}  // namespace

TEST(QubitState, Construction) {
    const QubitState z(3);
    EXPECT_EQ(z.size(), 8u);
    EXPECT_EQ(z[0], Complex(1));
    EXPECT_EQ(z.bit_of(1), 2);
    EXPECT_EQ(z.bit_of(3), 0);
    EXPECT_TRUE(QubitState::zero_vector(2).is_zero());
    EXPECT_ERROR_CODE(QubitState(2, {1.0, 0.0}), ErrorCode::DimensionMismatch);
    EXPECT_ERROR_CODE(QubitState(0), ErrorCode::InvalidArgument);
}

TEST(ApplyLocal, Examples) {
    oracle::Rng rng(41);
    const auto psi = random_qubits(rng, 3);
    const auto same = apply_local(psi, LocalGate{2, Mat2::Identity()});
    EXPECT_LT(max_diff_up_to_phase(psi, same), 1e-15);

    Mat2 x;
    x << 0, 1, 1, 0;
    const auto flipped = apply_local(QubitState(3), LocalGate{1, x});
    EXPECT_EQ(flipped[0b100], Complex(1));

    for (int trial = 0; trial < 10; ++trial) {
        const Mat2 u = rng.unitary2();
        const int site = 1 + trial % 3;
        const auto back = apply_local(apply_local(psi, LocalGate{site, u}), LocalGate{site, u.adjoint()});
        for (size_t i = 0; i < psi.size(); ++i) {
            EXPECT_LT(std::abs(back[i] - psi[i]), 1e-12);
        }
    }
    EXPECT_ERROR_CODE(apply_local(psi, LocalGate{1, 2.0 * Mat2::Identity()}), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(apply_local(psi, LocalGate{4, Mat2::Identity()}), ErrorCode::InvalidArgument);
}

TEST(CollectiveOp, Examples) {
    oracle::Rng rng(42);
    const auto psi = random_qubits(rng, 3);
    const std::vector<int> all{1, 2, 3};
    EXPECT_LT(max_diff_up_to_phase(psi, collective_op(psi, PauliAxis::X, 0.0, all)), 1e-15);

    const QubitState s(2, {kInvSqrt2, 0.0, kInvSqrt2, 0.0});
    const std::vector<int> one{1};
    const auto out = collective_op(s, PauliAxis::Z, kPi, one);
    EXPECT_LT(max_diff_up_to_phase(QubitState(2, {kInvSqrt2, 0.0, -kInvSqrt2, 0.0}), out), 1e-15);

    for (auto axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
        const double angle = rng.uniform(-3, 3);
        const std::vector<int> site{2};
        const auto a = collective_op(psi, axis, angle, site);
        const auto b = apply_local(psi, LocalGate{2, pauli_rotation(axis, angle)});
        for (size_t i = 0; i < psi.size(); ++i) {
            EXPECT_LT(std::abs(a[i] - b[i]), 1e-12);
        }
    }
    const std::vector<int> dup{1, 1};
    EXPECT_ERROR_CODE(collective_op(psi, PauliAxis::X, 0.1, dup), ErrorCode::InvalidArgument);
}

TEST(Entropy, Examples) {
    const std::vector<int> first{1};
    oracle::Rng rng(43);
    const auto prod = apply_local(apply_local(QubitState(2), LocalGate{1, rng.unitary2()}), LocalGate{2, rng.unitary2()});
    EXPECT_NEAR(entanglement_entropy(prod, first), 0, 1e-10);
    EXPECT_NEAR(entanglement_entropy(bell(), first), 1, 1e-12);

    const std::vector<int> none;
    const std::vector<int> both{1, 2};
    EXPECT_ERROR_CODE(entanglement_entropy(bell(), none), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(entanglement_entropy(bell(), both), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(entanglement_entropy(QubitState::zero_vector(2), first), ErrorCode::Undefined);
}

TEST(Entropy, TwoQubitClosedForm) {
    oracle::Rng rng(44);
    const std::vector<int> first{1}, second{2};
    for (int trial = 0; trial < 30; ++trial) {
        const auto psi = random_qubits(rng, 2);
        const auto [p0, p1] = oracle::two_qubit_schmidt(psi[0], psi[1], psi[2], psi[3]);
        EXPECT_NEAR(entanglement_entropy(psi, first), oracle::binary_entropy(p0), 1e-10);
        EXPECT_NEAR(entanglement_entropy(psi, second), oracle::binary_entropy(p1), 1e-10);
        const auto sc = schmidt_coefficients(psi, first);
        EXPECT_NEAR(sc(0) * sc(0), p0, 1e-12);
    }
}

TEST(Entropy, InvariantUnderLocalUnitaries) {
    oracle::Rng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 4;
        auto psi = random_qubits(rng, n);
        const std::vector<int> part = n == 2 ? std::vector<int>{1} : std::vector<int>{1, n};
        const double before = entanglement_entropy(psi, part);
        for (int site = 1; site <= n; ++site) {
            psi = apply_local(psi, LocalGate{site, rng.unitary2()});
        }
        EXPECT_NEAR(entanglement_entropy(psi, part), before, 1e-10);
    }
}

TEST(Entropy, ComplementSymmetry) {
    oracle::Rng rng(46);
    const auto psi = random_qubits(rng, 4);
    const std::vector<int> a{1, 3}, b{2, 4};
    EXPECT_NEAR(entanglement_entropy(psi, a), entanglement_entropy(psi, b), 1e-10);
}

TEST(IsProduct, Examples) {
    EXPECT_TRUE(is_product(QubitState(3), 1e-10).is_product);
    EXPECT_FALSE(is_product(ghz(3, +1), 1e-10).is_product);

    oracle::Rng rng(47);
    auto psi = QubitState(3);
    std::vector<Mat2> gates;
    for (int site = 1; site <= 3; ++site) {
        gates.push_back(rng.unitary2());
        psi = apply_local(psi, LocalGate{site, gates.back()});
    }
    const auto check = is_product(psi, 1e-10);
    ASSERT_TRUE(check.is_product);
    ASSERT_EQ(check.factors.size(), 3u);
    // Rebuild the state from its factors.
    std::vector<Complex> rebuilt(8);
    for (size_t x = 0; x < 8; ++x) {
        Complex a = 1;
        for (int site = 1; site <= 3; ++site) {
            a *= check.factors[static_cast<size_t>(site - 1)]((x >> (3 - site)) & 1);
        }
        rebuilt[x] = a;
    }
    EXPECT_LT(max_diff_up_to_phase(psi, QubitState(3, rebuilt)), 1e-10);
}

TEST(ControlledPhase, Examples) {
    oracle::Rng rng(50);
    for (int trial = 0; trial < 10; ++trial) {
        const auto prod = apply_local(apply_local(QubitState(2), LocalGate{1, rng.unitary2()}), LocalGate{2, rng.unitary2()});
        EXPECT_LT(circular_distance(controlled_phase_extract(prod), 0), 1e-10);
    }

    for (int photons = 2; photons <= 6; ++photons) {
        for (double eta : {0.1, 0.3, 1.0}) {
            // Amplitudes over (++, +-, -+, --) directly in the (+,-) basis.
            const double n = photons;
            const Complex app = std::polar(1.0, eta * n * n);
            const Complex apm = std::polar(1.0, eta * (n - 2) * (n - 2));
            const Complex amm = std::polar(1.0, eta * (n - 4) * (n - 4));
            // Back to the computational basis: |+-> etc. expanded.
            std::vector<Complex> a(4);
            const Complex pm[2][2] = {{app, apm}, {apm, amm}};
            for (int x = 0; x < 4; ++x) {
                Complex s = 0;
                for (int sa = 0; sa < 2; ++sa) {
                    for (int sb = 0; sb < 2; ++sb) {
                        const double sign = ((sa && (x & 2)) != (sb && (x & 1))) ? -1 : 1;
                        s += sign * pm[sa][sb] / 2.0;
                    }
                }
                a[static_cast<size_t>(x)] = s / 2.0;
            }
            const double expected = std::fmod(8 * eta, 2 * kPi);
            EXPECT_LT(circular_distance(controlled_phase_extract(QubitState(2, a)), expected), 1e-12);
        }
    }

    // CZ on |++> gives phi = pi.
    const QubitState cz(2, {0.5, 0.5, 0.5, -0.5});
    EXPECT_NEAR(controlled_phase_extract(cz), kPi, 1e-12);
}

TEST(ControlledPhase, InvariantUnderPlusMinusPhases) {
    oracle::Rng rng(48);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 3;
        auto psi = random_qubits(rng, n);
        const double before = controlled_phase_extract(psi, 1, 2);
        for (int site = 1; site <= 2; ++site) {
            psi = apply_local(psi, LocalGate{site, plus_minus_phase(rng.uniform(0, 6), rng.uniform(0, 6))});
        }
        EXPECT_LT(circular_distance(controlled_phase_extract(psi, 1, 2), before), 1e-9);
    }
}

TEST(ControlledPhase, Errors) {
    // |+-> has no overlap with <++|.
    EXPECT_ERROR_CODE(controlled_phase_extract(QubitState(2, {0.5, -0.5, 0.5, -0.5})), ErrorCode::Undefined);
    EXPECT_ERROR_CODE(controlled_phase_extract(bell(), 1, 1), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(controlled_phase_extract(QubitState(1)), ErrorCode::InvalidArgument);
}

TEST(CircularDistance, Wraps) {
    EXPECT_NEAR(circular_distance(0.1, 2 * kPi - 0.1), 0.2, 1e-15);
    EXPECT_NEAR(circular_distance(-kPi, kPi), 0, 1e-15);
}

TEST(LocalGateToMode, Identity) {
    oracle::Rng rng(49);
    const SiteLayout layout(3);
    const ModeVector q1(rng.unit(6));
    const std::vector<LocalGate> gates{{1, Mat2::Identity()}, {2, Mat2::Identity()}, {3, Mat2::Identity()}};
    EXPECT_LT(mode_distance_up_to_phase(local_gate_to_mode(gates, q1, layout), q1), 1e-15);
    const std::vector<LocalGate> dup{{1, Mat2::Identity()}, {1, Mat2::Identity()}};
    EXPECT_ERROR_CODE(local_gate_to_mode(dup, q1, layout), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(local_gate_to_mode(gates, ModeVector(rng.unit(4)), layout), ErrorCode::DimensionMismatch);
}
