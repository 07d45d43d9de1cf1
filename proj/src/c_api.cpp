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


#include "ssrcbqc/ssrcbqc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "ssrcbqc/bqc.hpp"
#include "ssrcbqc/encodings.hpp"
#include "ssrcbqc/error.hpp"
#include "ssrcbqc/extraction.hpp"
#include "ssrcbqc/fock_space.hpp"
#include "ssrcbqc/json_io.hpp"
#include "ssrcbqc/mode_algebra.hpp"
#include "ssrcbqc/ssrc.hpp"

struct ssrc_mode {
    ssrcbqc::ModeVector v;
};
struct ssrc_fock {
    ssrcbqc::FockState v;
};
struct ssrc_state {
    ssrcbqc::SSRCState v;
};
struct ssrc_qubits {
    ssrcbqc::QubitState v;
};

namespace {

using ssrcbqc::Complex;
using ssrcbqc::Error;

thread_local std::string g_last_error;

ssrc_status fail(ssrc_status code, std::string message) {
    g_last_error = std::move(message);
    return code;
}

// Runs f, translating exceptions into status codes.
template <typename F>
ssrc_status guard(F &&f) noexcept {
    try {
        g_last_error.clear();
        return f();
    } catch (const Error &e) {
        return fail(static_cast<ssrc_status>(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(SSRC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(SSRC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SSRC_ERR_INTERNAL, "unknown error");
    }
}

#define SSRC_REQUIRE(cond, msg)                                  \
    do {                                                         \
        if (!(cond)) return fail(SSRC_ERR_INVALID_ARGUMENT, msg); \
    } while (0)

Complex to_cpp(ssrc_complex c) {
    return {c.re, c.im};
}

ssrc_complex to_c(Complex c) {
    return {c.real(), c.imag()};
}

std::vector<Complex> to_vector(const ssrc_complex *p, size_t len) {
    std::vector<Complex> v(len);
    for (size_t i = 0; i < len; ++i) {
        v[i] = to_cpp(p[i]);
    }
    return v;
}

ssrc_status copy_out(const std::vector<Complex> &src, ssrc_complex *out, size_t len) {
    if (len < src.size()) {
        return fail(SSRC_ERR_BUFFER_TOO_SMALL,
                    "buffer holds " + std::to_string(len) + " entries, need " + std::to_string(src.size()));
    }
    for (size_t i = 0; i < src.size(); ++i) {
        out[i] = to_c(src[i]);
    }
    return SSRC_OK;
}

ssrc_status copy_string(const std::string &s, char **out) {
    char *buf = static_cast<char *>(std::malloc(s.size() + 1));
    if (buf == nullptr) {
        return fail(SSRC_ERR_INTERNAL, "out of memory");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return SSRC_OK;
}

int effective_cap(int cap) {
    return cap <= 0 ? ssrcbqc::kDefaultPhotonCap : cap;
}

ssrc_status emit_extraction(ssrcbqc::ExtractionResult r, double *probability, ssrc_qubits **out) {
    if (probability != nullptr) {
        *probability = r.probability;
    }
    *out = new ssrc_qubits{std::move(r.qubits)};
    return SSRC_OK;
}

}  // namespace

extern "C" {

const char *ssrc_version(void) {
    return "0.1.0";
}

const char *ssrc_status_name(ssrc_status status) {
    switch (status) {
        case SSRC_OK: return "ok";
        case SSRC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SSRC_ERR_DIMENSION: return "dimension mismatch";
        case SSRC_ERR_NOT_NORMALIZED: return "not normalized";
        case SSRC_ERR_NOT_ORTHOGONAL: return "not orthogonal";
        case SSRC_ERR_RESOURCE_CAP: return "resource cap exceeded";
        case SSRC_ERR_UNDEFINED: return "undefined";
        case SSRC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case SSRC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *ssrc_last_error(void) {
    return g_last_error.c_str();
}

void ssrc_string_free(char *s) {
    std::free(s);
}

int ssrc_default_cap(void) {
    return ssrcbqc::kDefaultPhotonCap;
}

// ---- modes ----

ssrc_status ssrc_mode_new(const ssrc_complex *coeffs, size_t dim, ssrc_mode **out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr && (coeffs != nullptr || dim == 0), "ssrc_mode_new: null pointer");
        *out = new ssrc_mode{ssrcbqc::ModeVector(to_vector(coeffs, dim))};
        return SSRC_OK;
    });
}

ssrc_status ssrc_mode_from_json(const char *json, ssrc_mode **out) {
    return guard([&] {
        SSRC_REQUIRE(json != nullptr && out != nullptr, "ssrc_mode_from_json: null pointer");
        *out = new ssrc_mode{ssrcbqc::mode_from_json(json)};
        return SSRC_OK;
    });
}

void ssrc_mode_free(ssrc_mode *mode) {
    delete mode;
}

size_t ssrc_mode_dim(const ssrc_mode *mode) {
    return mode == nullptr ? 0 : static_cast<size_t>(mode->v.dim());
}

ssrc_status ssrc_mode_coeffs(const ssrc_mode *mode, ssrc_complex *out, size_t len) {
    return guard([&] {
        SSRC_REQUIRE(mode != nullptr && out != nullptr, "ssrc_mode_coeffs: null pointer");
        return copy_out(mode->v.coeffs(), out, len);
    });
}

ssrc_status ssrc_mode_overlap(const ssrc_mode *q, const ssrc_mode *w, ssrc_complex *out) {
    return guard([&] {
        SSRC_REQUIRE(q != nullptr && w != nullptr && out != nullptr, "ssrc_mode_overlap: null pointer");
        *out = to_c(ssrcbqc::mode_overlap(q->v, w->v));
        return SSRC_OK;
    });
}

ssrc_status ssrc_mode_to_json(const ssrc_mode *mode, char **out) {
    return guard([&] {
        SSRC_REQUIRE(mode != nullptr && out != nullptr, "ssrc_mode_to_json: null pointer");
        return copy_string(ssrcbqc::to_json(mode->v), out);
    });
}

// ---- Fock states ----

ssrc_status ssrc_fock_vacuum(int n_modes, ssrc_fock **out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_fock_vacuum: null pointer");
        *out = new ssrc_fock{ssrcbqc::FockState::vacuum(n_modes)};
        return SSRC_OK;
    });
}

ssrc_status ssrc_fock_in_mode(const ssrc_mode *mode, int photons, int cap, ssrc_fock **out) {
    return guard([&] {
        SSRC_REQUIRE(mode != nullptr && out != nullptr, "ssrc_fock_in_mode: null pointer");
        *out = new ssrc_fock{ssrcbqc::fock_in_mode(mode->v, photons, effective_cap(cap))};
        return SSRC_OK;
    });
}

ssrc_status ssrc_fock_create(const ssrc_fock *state, const ssrc_mode *mode, ssrc_fock **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && mode != nullptr && out != nullptr, "ssrc_fock_create: null pointer");
        *out = new ssrc_fock{ssrcbqc::create(state->v, mode->v)};
        return SSRC_OK;
    });
}

ssrc_status ssrc_fock_annihilate(const ssrc_fock *state, const ssrc_mode *mode, ssrc_fock **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && mode != nullptr && out != nullptr, "ssrc_fock_annihilate: null pointer");
        *out = new ssrc_fock{ssrcbqc::annihilate(state->v, mode->v)};
        return SSRC_OK;
    });
}

ssrc_status ssrc_fock_inner(const ssrc_fock *a, const ssrc_fock *b, ssrc_complex *out) {
    return guard([&] {
        SSRC_REQUIRE(a != nullptr && b != nullptr && out != nullptr, "ssrc_fock_inner: null pointer");
        *out = to_c(ssrcbqc::inner(a->v, b->v));
        return SSRC_OK;
    });
}

size_t ssrc_fock_term_count(const ssrc_fock *state) {
    return state == nullptr ? 0 : state->v.terms().size();
}

int ssrc_fock_modes(const ssrc_fock *state) {
    return state == nullptr ? 0 : state->v.n_modes();
}

int ssrc_fock_number(const ssrc_fock *state) {
    if (state == nullptr) {
        return -1;
    }
    return state->v.number_definite().value_or(-1);
}

ssrc_status ssrc_fock_to_json(const ssrc_fock *state, char **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && out != nullptr, "ssrc_fock_to_json: null pointer");
        return copy_string(ssrcbqc::to_json(state->v), out);
    });
}

ssrc_status ssrc_fock_from_json(const char *json, ssrc_fock **out) {
    return guard([&] {
        SSRC_REQUIRE(json != nullptr && out != nullptr, "ssrc_fock_from_json: null pointer");
        *out = new ssrc_fock{ssrcbqc::fock_from_json(json)};
        return SSRC_OK;
    });
}

void ssrc_fock_free(ssrc_fock *state) {
    delete state;
}

// ---- two-mode states ----

ssrc_status ssrc_state_new(const ssrc_complex *c, size_t len, ssrc_state **out) {
    return guard([&] {
        SSRC_REQUIRE(c != nullptr && out != nullptr, "ssrc_state_new: null pointer");
        *out = new ssrc_state{ssrcbqc::SSRCState(to_vector(c, len))};
        return SSRC_OK;
    });
}

ssrc_status ssrc_state_spin_coherent(int photons, double theta, double phi, ssrc_state **out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_state_spin_coherent: null pointer");
        *out = new ssrc_state{ssrcbqc::spin_coherent(photons, theta, phi)};
        return SSRC_OK;
    });
}

ssrc_status ssrc_state_apply_gate(const ssrc_state *state, ssrc_gate_kind kind, ssrc_axis axis, double parameter,
                                  ssrc_state **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && out != nullptr, "ssrc_state_apply_gate: null pointer");
        SSRC_REQUIRE(kind == SSRC_GATE_ROTATION || kind == SSRC_GATE_KERR, "ssrc_state_apply_gate: bad gate kind");
        SSRC_REQUIRE(axis == SSRC_AXIS_X || axis == SSRC_AXIS_Y || axis == SSRC_AXIS_Z,
                     "ssrc_state_apply_gate: bad axis");
        const ssrcbqc::GateSpec gate{kind == SSRC_GATE_KERR ? ssrcbqc::GateKind::Kerr : ssrcbqc::GateKind::Rotation,
                                     axis == SSRC_AXIS_X   ? ssrcbqc::Axis::X
                                     : axis == SSRC_AXIS_Y ? ssrcbqc::Axis::Y
                                                           : ssrcbqc::Axis::Z,
                                     parameter};
        *out = new ssrc_state{ssrcbqc::apply_gate(state->v, gate)};
        return SSRC_OK;
    });
}

int ssrc_state_photons(const ssrc_state *state) {
    return state == nullptr ? -1 : state->v.photons();
}

ssrc_status ssrc_state_coeffs(const ssrc_state *state, ssrc_complex *out, size_t len) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && out != nullptr, "ssrc_state_coeffs: null pointer");
        return copy_out(state->v.coeffs(), out, len);
    });
}

ssrc_status ssrc_state_to_fock(const ssrc_state *state, const ssrc_mode *q, const ssrc_mode *w, int cap,
                               ssrc_fock **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && q != nullptr && w != nullptr && out != nullptr,
                     "ssrc_state_to_fock: null pointer");
        *out = new ssrc_fock{ssrcbqc::ssrc_to_fock(state->v, q->v, w->v, effective_cap(cap))};
        return SSRC_OK;
    });
}

ssrc_status ssrc_state_to_json(const ssrc_state *state, char **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && out != nullptr, "ssrc_state_to_json: null pointer");
        return copy_string(ssrcbqc::to_json(state->v), out);
    });
}

ssrc_status ssrc_state_from_json(const char *json, ssrc_state **out) {
    return guard([&] {
        SSRC_REQUIRE(json != nullptr && out != nullptr, "ssrc_state_from_json: null pointer");
        *out = new ssrc_state{ssrcbqc::ssrc_from_json(json)};
        return SSRC_OK;
    });
}

void ssrc_state_free(ssrc_state *state) {
    delete state;
}

ssrc_status ssrc_algebra_check(int photons, ssrc_algebra_report *out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_algebra_check: null pointer");
        const auto r = ssrcbqc::algebra_residuals(photons);
        *out = {r.hermiticity, r.commutator, r.casimir, r.unitarity};
        return SSRC_OK;
    });
}

ssrc_status ssrc_coherent_limit_exact(int photons, ssrc_complex alpha, int k, ssrc_complex *out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_coherent_limit_exact: null pointer");
        *out = to_c(ssrcbqc::coherent_limit_exact(photons, to_cpp(alpha), k));
        return SSRC_OK;
    });
}

ssrc_status ssrc_poisson_amplitude(ssrc_complex alpha, int k, ssrc_complex *out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_poisson_amplitude: null pointer");
        *out = to_c(ssrcbqc::poisson_amplitude(to_cpp(alpha), k));
        return SSRC_OK;
    });
}

// ---- extraction ----

ssrc_status ssrc_project_bqc(const ssrc_fock *state, int sites, double *probability, ssrc_qubits **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && out != nullptr, "ssrc_project_bqc: null pointer");
        return emit_extraction(ssrcbqc::project_bqc(state->v, ssrcbqc::SiteLayout(sites)), probability, out);
    });
}

ssrc_status ssrc_kerr_then_project(int photons, double eta, int cap, double *probability, ssrc_qubits **out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_kerr_then_project: null pointer");
        return emit_extraction(ssrcbqc::kerr_then_project(photons, eta, effective_cap(cap)), probability, out);
    });
}

// ---- qubits ----

ssrc_status ssrc_qubits_new(int qubits, const ssrc_complex *amps, size_t len, ssrc_qubits **out) {
    return guard([&] {
        SSRC_REQUIRE(amps != nullptr && out != nullptr, "ssrc_qubits_new: null pointer");
        *out = new ssrc_qubits{ssrcbqc::QubitState(qubits, to_vector(amps, len))};
        return SSRC_OK;
    });
}

int ssrc_qubits_count(const ssrc_qubits *state) {
    return state == nullptr ? 0 : state->v.qubits();
}

ssrc_status ssrc_qubits_amplitudes(const ssrc_qubits *state, ssrc_complex *out, size_t len) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && out != nullptr, "ssrc_qubits_amplitudes: null pointer");
        return copy_out(state->v.amps(), out, len);
    });
}

ssrc_status ssrc_qubits_apply_local(const ssrc_qubits *state, int site, const ssrc_complex matrix[4],
                                    ssrc_qubits **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && matrix != nullptr && out != nullptr, "ssrc_qubits_apply_local: null pointer");
        ssrcbqc::Mat2 m;
        m << to_cpp(matrix[0]), to_cpp(matrix[1]), to_cpp(matrix[2]), to_cpp(matrix[3]);
        *out = new ssrc_qubits{ssrcbqc::apply_local(state->v, ssrcbqc::LocalGate{site, m})};
        return SSRC_OK;
    });
}

ssrc_status ssrc_qubits_entropy(const ssrc_qubits *state, const int *sites, size_t n_sites, double *bits) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && bits != nullptr && (sites != nullptr || n_sites == 0),
                     "ssrc_qubits_entropy: null pointer");
        *bits = ssrcbqc::entanglement_entropy(state->v, std::span<const int>(sites, n_sites));
        return SSRC_OK;
    });
}

ssrc_status ssrc_qubits_is_product(const ssrc_qubits *state, double tol, int *result) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && result != nullptr, "ssrc_qubits_is_product: null pointer");
        *result = ssrcbqc::is_product(state->v, tol).is_product ? 1 : 0;
        return SSRC_OK;
    });
}

ssrc_status ssrc_qubits_controlled_phase(const ssrc_qubits *state, int site_a, int site_b, double *phi) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && phi != nullptr, "ssrc_qubits_controlled_phase: null pointer");
        *phi = ssrcbqc::controlled_phase_extract(state->v, site_a, site_b);
        return SSRC_OK;
    });
}

ssrc_status ssrc_qubits_to_json(const ssrc_qubits *state, char **out) {
    return guard([&] {
        SSRC_REQUIRE(state != nullptr && out != nullptr, "ssrc_qubits_to_json: null pointer");
        return copy_string(ssrcbqc::to_json(state->v), out);
    });
}

void ssrc_qubits_free(ssrc_qubits *state) {
    delete state;
}

// ---- cat encodings ----

ssrc_status ssrc_cat_overlap(int photons, ssrc_complex alpha, ssrc_complex *out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_cat_overlap: null pointer");
        *out = to_c(ssrcbqc::fock_overlap(photons, to_cpp(alpha)));
        return SSRC_OK;
    });
}

ssrc_status ssrc_cat_overlap_numeric(int photons, ssrc_complex alpha, int cap, ssrc_complex *out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_cat_overlap_numeric: null pointer");
        *out = to_c(ssrcbqc::fock_overlap_numeric(photons, to_cpp(alpha), effective_cap(cap)));
        return SSRC_OK;
    });
}

ssrc_status ssrc_cat_to_bqc(int photons, int sign, int cap, double *probability, ssrc_qubits **out) {
    return guard([&] {
        SSRC_REQUIRE(out != nullptr, "ssrc_cat_to_bqc: null pointer");
        return emit_extraction(ssrcbqc::cat_to_bqc(photons, sign, effective_cap(cap)), probability, out);
    });
}

}  // extern "C"
