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

#include "ssrcbqc/mode_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ssrcbqc {

namespace {

constexpr double kOrthonormalTol = 1e-9;
constexpr double kDependentCandidate = 1e-10;
constexpr double kPhaseAnchor = 1e-10;

void require_same_dim(const ModeVector &a, const ModeVector &b, const char *where) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, std::string(where) + ": mode dimensions differ (" +
                                                      std::to_string(a.dim()) + " vs " +
                                                      std::to_string(b.dim()) + ")");
    }
}

// Subtracts the components of v along every vector in basis.
void project_out(std::vector<Complex> &v, const std::vector<ModeVector> &basis) {
    for (const auto &b : basis) {
        Complex c = 0;
        for (size_t k = 0; k < v.size(); ++k) {
            c += std::conj(b.coeffs()[k]) * v[k];
        }
        for (size_t k = 0; k < v.size(); ++k) {
            v[k] -= c * b.coeffs()[k];
        }
    }
}

double vec_norm(const std::vector<Complex> &v) {
    double s = 0;
    for (const auto &c : v) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

}  // namespace

ModeVector::ModeVector(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "ModeVector: dimension must be at least 1");
    }
    for (const auto &c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw Error(ErrorCode::InvalidArgument, "ModeVector: non-finite coefficient");
        }
    }
}

ModeVector ModeVector::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) {
        throw Error(ErrorCode::InvalidArgument, "ModeVector::basis: index out of range");
    }
    std::vector<Complex> c(static_cast<size_t>(dim), 0.0);
    c[static_cast<size_t>(index)] = 1.0;
    return ModeVector(std::move(c));
}

double ModeVector::norm() const {
    return vec_norm(coeffs_);
}

ModeVector ModeVector::normalized() const {
    double n = norm();
    if (n < 1e-300) {
        throw Error(ErrorCode::NotNormalized, "ModeVector::normalized: zero vector");
    }
    ModeVector out = *this;
    out *= 1.0 / n;
    return out;
}

ModeVector ModeVector::phase_canonical() const {
    ModeVector out = *this;
    for (const auto &c : coeffs_) {
        if (std::abs(c) > kPhaseAnchor) {
            out *= std::conj(c) / std::abs(c);
            break;
        }
    }
    return out;
}

ModeVector &ModeVector::operator+=(const ModeVector &other) {
    require_same_dim(*this, other, "ModeVector::operator+=");
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

ModeVector &ModeVector::operator-=(const ModeVector &other) {
    require_same_dim(*this, other, "ModeVector::operator-=");
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

ModeVector &ModeVector::operator*=(Complex scale) {
    for (auto &c : coeffs_) {
        c *= scale;
    }
    return *this;
}

ModeVector operator+(ModeVector a, const ModeVector &b) {
    a += b;
    return a;
}

ModeVector operator-(ModeVector a, const ModeVector &b) {
    a -= b;
    return a;
}

ModeVector operator*(Complex scale, ModeVector v) {
    v *= scale;
    return v;
}

Complex mode_overlap(const ModeVector &q, const ModeVector &w) {
    require_same_dim(q, w, "mode_overlap");
    Complex s = 0;
    for (int k = 0; k < q.dim(); ++k) {
        s += std::conj(q.coeffs()[k]) * w.coeffs()[k];
    }
    return s;
}

double mode_distance_up_to_phase(const ModeVector &v, const ModeVector &w) {
    require_same_dim(v, w, "mode_distance_up_to_phase");
    auto a = v.phase_canonical();
    auto b = w.phase_canonical();
    double m = 0;
    for (int k = 0; k < a.dim(); ++k) {
        m = std::max(m, std::abs(a.coeffs()[k] - b.coeffs()[k]));
    }
    return m;
}

std::vector<ModeVector> orthonormal_complete(std::span<const ModeVector> partial, int dim) {
    if (dim < 1) {
        throw Error(ErrorCode::InvalidArgument, "orthonormal_complete: dim must be at least 1");
    }
    if (static_cast<int>(partial.size()) > dim) {
        throw Error(ErrorCode::InvalidArgument, "orthonormal_complete: more vectors than dimensions");
    }
    for (size_t a = 0; a < partial.size(); ++a) {
        if (partial[a].dim() != dim) {
            throw Error(ErrorCode::DimensionMismatch, "orthonormal_complete: vector dimension differs from dim");
        }
        for (size_t b = a; b < partial.size(); ++b) {
            Complex expected = (a == b) ? 1.0 : 0.0;
            if (std::abs(mode_overlap(partial[a], partial[b]) - expected) > kOrthonormalTol) {
                throw a == b ? Error(ErrorCode::NotNormalized, "orthonormal_complete: input is not unit norm")
                             : Error(ErrorCode::NotOrthogonal, "orthonormal_complete: inputs are not orthogonal");
            }
        }
    }

    std::vector<ModeVector> out(partial.begin(), partial.end());
    for (int j = 0; j < dim && static_cast<int>(out.size()) < dim; ++j) {
        std::vector<Complex> v(static_cast<size_t>(dim), 0.0);
        v[static_cast<size_t>(j)] = 1.0;
        // Two passes: classical Gram-Schmidt loses orthogonality in one.
        project_out(v, out);
        project_out(v, out);
        double n = vec_norm(v);
        if (n < kDependentCandidate) {
            continue;
        }
        for (auto &c : v) {
            c /= n;
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

SiteLayout::SiteLayout(int n) : sites(n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "SiteLayout: need at least one site");
    }
}

int SiteLayout::mode_index(int site, int p) const {
    if (site < 1 || site > sites || (p != 0 && p != 1)) {
        throw Error(ErrorCode::InvalidArgument, "SiteLayout::mode_index: site or internal state out of range");
    }
    return 2 * (site - 1) + p;
}

ModeVector BalancedDecomposition::site_mode(int site, int p) const {
    int m = SiteLayout(photons).mode_index(site, p);
    std::vector<Complex> c(static_cast<size_t>(basis.rows()));
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
        c[static_cast<size_t>(r)] = basis(r, m);
    }
    return ModeVector(std::move(c));
}

ModeVector BalancedDecomposition::to_site_coordinates(const ModeVector &v) const {
    if (v.dim() != basis.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "to_site_coordinates: ambient dimension mismatch");
    }
    const int n_site = 2 * photons;
    Eigen::VectorXcd x(v.dim());
    for (int k = 0; k < v.dim(); ++k) {
        x(k) = v.coeffs()[k];
    }
    Eigen::VectorXcd c = basis.leftCols(n_site).adjoint() * x;
    Eigen::VectorXcd residual = x - basis.leftCols(n_site) * c;
    if (residual.norm() > kOrthonormalTol) {
        throw Error(ErrorCode::InvalidArgument, "to_site_coordinates: vector has weight outside the site modes");
    }
    return ModeVector(std::vector<Complex>(c.data(), c.data() + c.size()));
}

BalancedDecomposition balanced_decomposition(const ModeVector &q, const ModeVector &w, int photons) {
    require_same_dim(q, w, "balanced_decomposition");
    if (photons < 1) {
        throw Error(ErrorCode::InvalidArgument, "balanced_decomposition: photon number must be at least 1");
    }
    const int dim = q.dim();
    const int n_site = 2 * photons;
    if (dim < n_site) {
        throw Error(ErrorCode::DimensionMismatch, "balanced_decomposition: ambient dimension " +
                                                      std::to_string(dim) + " is smaller than 2N = " +
                                                      std::to_string(n_site));
    }
    if (std::abs(q.norm() - 1.0) > kOrthonormalTol || std::abs(w.norm() - 1.0) > kOrthonormalTol) {
        throw Error(ErrorCode::NotNormalized, "balanced_decomposition: modes must have unit norm");
    }
    if (std::abs(mode_overlap(q, w)) > kOrthonormalTol) {
        throw Error(ErrorCode::NotOrthogonal, "balanced_decomposition: modes are not orthogonal");
    }

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const ModeVector p = inv_sqrt2 * (q + w);
    const ModeVector k = inv_sqrt2 * (q - w);
    const ModeVector pk[2] = {p, k};
    const auto full = orthonormal_complete(pk, dim);

    // Internal state 0 draws on {p, full[2..N]}, internal state 1 on
    // {k, full[N+1..2N-1]}. A unitary mixer whose first column is uniform
    // makes each group's site modes sum to sqrt(N) times its seed.
    auto group = [&](int p_state, int j) -> const ModeVector & {
        if (j == 0) {
            return full[static_cast<size_t>(p_state)];
        }
        return full[static_cast<size_t>(p_state == 0 ? 1 + j : photons + j)];
    };

    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(photons));
    BalancedDecomposition out;
    out.photons = photons;
    out.basis = Eigen::MatrixXcd::Zero(dim, dim);
    const SiteLayout layout(photons);
    for (int i = 0; i < photons; ++i) {
        for (int p_state = 0; p_state < 2; ++p_state) {
            const int m = layout.mode_index(i + 1, p_state);
            for (int j = 0; j < photons; ++j) {
                const double angle = 2.0 * std::numbers::pi * static_cast<double>(i * j) / photons;
                Complex f = std::polar(1.0, angle);
                if ((2 * i * j) % photons == 0) {
                    f = ((2 * i * j / photons) % 2 == 0) ? 1.0 : -1.0;
                }
                f *= inv_sqrt_n;
                const auto &e = group(p_state, j);
                for (int r = 0; r < dim; ++r) {
                    out.basis(r, m) += f * e.coeffs()[static_cast<size_t>(r)];
                }
            }
        }
    }
    for (int extra = n_site; extra < dim; ++extra) {
        for (int r = 0; r < dim; ++r) {
            out.basis(r, extra) = full[static_cast<size_t>(extra)].coeffs()[static_cast<size_t>(r)];
        }
    }
    return out;
}

}  // namespace ssrcbqc
