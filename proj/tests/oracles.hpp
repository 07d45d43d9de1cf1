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

// Brute-force reference computations shared by the tests. None of these call
// into the library's algorithms; they only use its value types for I/O.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "ssrcbqc/bqc.hpp"
#include "ssrcbqc/fock_space.hpp"
#include "ssrcbqc/mode_algebra.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Coeffs = std::vector<Complex>;
using Occ = std::vector<int>;
using Expansion = std::map<Occ, Complex>;

inline double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline Complex overlap(const Coeffs &q, const Coeffs &w) {
    Complex s = 0;
    for (size_t k = 0; k < q.size(); ++k) {
        s += std::conj(q[k]) * w[k];
    }
    return s;
}

// prod_j (sum_k slots[j][k] b_k^dagger) |0>, by enumerating every tuple of
// mode choices. b_{k1}^dagger ... b_{kN}^dagger |0> = sqrt(prod n!) |n>.
inline Expansion expand_product(const std::vector<Coeffs> &slots, int n_modes) {
    Expansion out;
    const int n = static_cast<int>(slots.size());
    std::vector<int> pick(static_cast<size_t>(n), 0);
    while (true) {
        Complex amp = 1;
        Occ occ(static_cast<size_t>(n_modes), 0);
        for (int j = 0; j < n; ++j) {
            amp *= slots[static_cast<size_t>(j)][static_cast<size_t>(pick[static_cast<size_t>(j)])];
            ++occ[static_cast<size_t>(pick[static_cast<size_t>(j)])];
        }
        if (amp != Complex(0)) {
            double w = 1;
            for (int m : occ) {
                w *= factorial(m);
            }
            out[occ] += amp * std::sqrt(w);
        }
        int j = 0;
        while (j < n && ++pick[static_cast<size_t>(j)] == n_modes) {
            pick[static_cast<size_t>(j)] = 0;
            ++j;
        }
        if (j == n) {
            break;
        }
    }
    if (n == 0) {
        out[Occ(static_cast<size_t>(n_modes), 0)] = 1;
    }
    return out;
}

// |N>_q = (a_q^dagger)^N |0> / sqrt(N!)
inline Expansion fock_in_mode(const Coeffs &q, int photons) {
    Expansion e = expand_product(std::vector<Coeffs>(static_cast<size_t>(photons), q), static_cast<int>(q.size()));
    for (auto &[occ, amp] : e) {
        amp /= std::sqrt(factorial(photons));
    }
    return e;
}

// sum_n c_n (a_q^dagger)^n (a_w^dagger)^(N-n) |0> / sqrt(n! (N-n)!)
inline Expansion ssrc_to_fock(const Coeffs &c, const Coeffs &q, const Coeffs &w) {
    const int photons = static_cast<int>(c.size()) - 1;
    Expansion total;
    for (int n = 0; n <= photons; ++n) {
        std::vector<Coeffs> slots(static_cast<size_t>(n), q);
        slots.insert(slots.end(), static_cast<size_t>(photons - n), w);
        const double norm = std::sqrt(factorial(n) * factorial(photons - n));
        for (const auto &[occ, amp] : expand_product(slots, static_cast<int>(q.size()))) {
            total[occ] += c[static_cast<size_t>(n)] * amp / norm;
        }
    }
    return total;
}

// Keep one photon per site (modes 2i, 2i+1 for site i+1); amplitude of qubit
// string x (site 1 = most significant bit) is the occupation of b_i(1).
// Not renormalized.
inline Coeffs project(const Expansion &e, int sites) {
    Coeffs amps(size_t{1} << sites, 0.0);
    for (const auto &[occ, amp] : e) {
        bool ok = true;
        size_t x = 0;
        for (int i = 0; i < sites && ok; ++i) {
            const int n0 = occ[static_cast<size_t>(2 * i)];
            const int n1 = occ[static_cast<size_t>(2 * i + 1)];
            ok = n0 + n1 == 1;
            x = (x << 1) | static_cast<size_t>(n1);
        }
        if (ok) {
            amps[x] += amp;
        }
    }
    return amps;
}

inline double norm_sq(const Coeffs &v) {
    double s = 0;
    for (const auto &c : v) {
        s += std::norm(c);
    }
    return s;
}

inline Occ to_occ(const ssrcbqc::Occupation &o) {
    return Occ(o.begin(), o.end());
}

// Largest amplitude difference between a library state and an expansion.
inline double max_diff(const ssrcbqc::FockState &s, const Expansion &e) {
    double d = 0;
    for (const auto &[occ, amp] : s.terms()) {
        const auto it = e.find(to_occ(occ));
        d = std::max(d, std::abs(amp - (it == e.end() ? Complex(0) : it->second)));
    }
    for (const auto &[occ, amp] : e) {
        ssrcbqc::Occupation o(occ.begin(), occ.end());
        d = std::max(d, std::abs(amp - s.amplitude(o)));
    }
    return d;
}

// Largest difference between two Fock states after aligning b's global phase.
inline double max_diff_up_to_phase(const ssrcbqc::FockState &a, const ssrcbqc::FockState &b) {
    Complex ab = 0;
    for (const auto &[occ, amp] : a.terms()) {
        ab += std::conj(b.amplitude(occ)) * amp;
    }
    const Complex phase = std::abs(ab) > 0 ? ab / std::abs(ab) : Complex(1);
    double d = 0;
    for (const auto &[occ, amp] : a.terms()) {
        d = std::max(d, std::abs(amp - phase * b.amplitude(occ)));
    }
    for (const auto &[occ, amp] : b.terms()) {
        d = std::max(d, std::abs(a.amplitude(occ) - phase * amp));
    }
    return d;
}

inline double max_diff_up_to_phase(const Coeffs &a, const Coeffs &b) {
    const Complex ab = overlap(b, a);
    const Complex phase = std::abs(ab) > 0 ? ab / std::abs(ab) : Complex(1);
    double d = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - phase * b[i]));
    }
    return d;
}

// Squared Schmidt coefficients of a normalized two-qubit state
// a00|00> + a01|01> + a10|10> + a11|11>.
inline std::pair<double, double> two_qubit_schmidt(Complex a00, Complex a01, Complex a10, Complex a11) {
    const double det = std::abs(a00 * a11 - a01 * a10);
    const double disc = std::sqrt(std::max(0.0, 1.0 - 4 * det * det));
    return {(1 + disc) / 2, (1 - disc) / 2};
}

inline double binary_entropy(double p) {
    double h = 0;
    for (double x : {p, 1 - p}) {
        if (x > 0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

struct Rng {
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    Complex gauss() {
        std::normal_distribution<double> n(0.0, 1.0);
        const double re = n(gen);
        const double im = n(gen);
        return {re, im};
    }

    Coeffs vec(int dim) {
        Coeffs v(static_cast<size_t>(dim));
        for (auto &c : v) {
            c = gauss();
        }
        return v;
    }

    Coeffs unit(int dim) {
        Coeffs v = vec(dim);
        const double n = std::sqrt(norm_sq(v));
        for (auto &c : v) {
            c /= n;
        }
        return v;
    }

    // A pair of orthonormal vectors (plain Gram-Schmidt).
    std::pair<Coeffs, Coeffs> orthonormal_pair(int dim) {
        Coeffs q = unit(dim);
        Coeffs w = vec(dim);
        const Complex proj = overlap(q, w);
        for (size_t k = 0; k < w.size(); ++k) {
            w[k] -= proj * q[k];
        }
        const double n = std::sqrt(norm_sq(w));
        for (auto &c : w) {
            c /= n;
        }
        return {q, w};
    }

    // Haar-ish 2x2 unitary from Euler angles and a global phase.
    Eigen::Matrix2cd unitary2() {
        const double a = uniform(0, 2 * std::numbers::pi), b = uniform(0, 2 * std::numbers::pi), c = uniform(0, 2 * std::numbers::pi);
        const double t = std::acos(std::sqrt(uniform(0, 1)));
        const Complex i(0, 1);
        Eigen::Matrix2cd u;
        u << std::exp(i * (a + b)) * std::cos(t), std::exp(i * (a + c)) * std::sin(t),
            -std::exp(i * (a - c)) * std::sin(t), std::exp(i * (a - b)) * std::cos(t);
        return u;
    }

    std::mt19937_64 gen;
};

}  // namespace oracle
