/* Copyright 2026 The ssrc-bqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the ssrc-bqc simulator.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function (NULL is accepted). Functions that can fail return
 * an ssrc_status; on failure the output handle is left untouched and
 * ssrc_last_error() describes the problem for the calling thread.
 * Strings returned through char** are released with ssrc_string_free.
 */

#ifndef SSRCBQC_H
#define SSRCBQC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SSRCBQC_BUILDING_LIBRARY)
#    define SSRCBQC_API __declspec(dllexport)
#  else
#    define SSRCBQC_API __declspec(dllimport)
#  endif
#else
#  define SSRCBQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssrc_status {
    SSRC_OK = 0,
    SSRC_ERR_INVALID_ARGUMENT = 1,
    SSRC_ERR_DIMENSION = 2,
    SSRC_ERR_NOT_NORMALIZED = 3,
    SSRC_ERR_NOT_ORTHOGONAL = 4,
    SSRC_ERR_RESOURCE_CAP = 5,
    SSRC_ERR_UNDEFINED = 6,
    SSRC_ERR_BUFFER_TOO_SMALL = 7,
    SSRC_ERR_INTERNAL = 99
} ssrc_status;

typedef struct ssrc_complex {
    double re;
    double im;
} ssrc_complex;

typedef enum ssrc_axis { SSRC_AXIS_X = 0, SSRC_AXIS_Y = 1, SSRC_AXIS_Z = 2 } ssrc_axis;
typedef enum ssrc_gate_kind { SSRC_GATE_ROTATION = 0, SSRC_GATE_KERR = 1 } ssrc_gate_kind;

typedef struct ssrc_mode ssrc_mode;     /* collective mode vector */
typedef struct ssrc_fock ssrc_fock;     /* sparse multimode Fock state */
typedef struct ssrc_state ssrc_state;   /* two-mode fixed-N state (c_0..c_N) */
typedef struct ssrc_qubits ssrc_qubits; /* dense N-qubit statevector */

/* Maximum residuals of the Jordan-Schwinger checks at one photon number. */
typedef struct ssrc_algebra_report {
    double hermiticity;  /* max over Jx, Jy, Jz of |J - J^dagger| */
    double commutator;   /* max over cyclic [Ja, Jb] - i Jc */
    double casimir;      /* |J^2 - (N/2)(N/2+1) I| */
    double unitarity;    /* max over sample gates of |U U^dagger - I| */
} ssrc_algebra_report;

SSRCBQC_API const char *ssrc_version(void);
SSRCBQC_API const char *ssrc_status_name(ssrc_status status);
SSRCBQC_API const char *ssrc_last_error(void);
SSRCBQC_API void ssrc_string_free(char *s);

/* Photon cap used when the caller passes cap <= 0. */
SSRCBQC_API int ssrc_default_cap(void);

/* ---- modes ---- */
SSRCBQC_API ssrc_status ssrc_mode_new(const ssrc_complex *coeffs, size_t dim, ssrc_mode **out);
SSRCBQC_API ssrc_status ssrc_mode_from_json(const char *json, ssrc_mode **out);
SSRCBQC_API void ssrc_mode_free(ssrc_mode *mode);
SSRCBQC_API size_t ssrc_mode_dim(const ssrc_mode *mode);
SSRCBQC_API ssrc_status ssrc_mode_coeffs(const ssrc_mode *mode, ssrc_complex *out, size_t len);
SSRCBQC_API ssrc_status ssrc_mode_overlap(const ssrc_mode *q, const ssrc_mode *w, ssrc_complex *out);
SSRCBQC_API ssrc_status ssrc_mode_to_json(const ssrc_mode *mode, char **out);

/* ---- Fock states ---- */
SSRCBQC_API ssrc_status ssrc_fock_vacuum(int n_modes, ssrc_fock **out);
SSRCBQC_API ssrc_status ssrc_fock_in_mode(const ssrc_mode *mode, int photons, int cap, ssrc_fock **out);
SSRCBQC_API ssrc_status ssrc_fock_create(const ssrc_fock *state, const ssrc_mode *mode, ssrc_fock **out);
SSRCBQC_API ssrc_status ssrc_fock_annihilate(const ssrc_fock *state, const ssrc_mode *mode, ssrc_fock **out);
SSRCBQC_API ssrc_status ssrc_fock_inner(const ssrc_fock *a, const ssrc_fock *b, ssrc_complex *out);
SSRCBQC_API size_t ssrc_fock_term_count(const ssrc_fock *state);
SSRCBQC_API int ssrc_fock_modes(const ssrc_fock *state);
/* Total photon number, or -1 when the state mixes sectors. */
SSRCBQC_API int ssrc_fock_number(const ssrc_fock *state);
SSRCBQC_API ssrc_status ssrc_fock_to_json(const ssrc_fock *state, char **out);
SSRCBQC_API ssrc_status ssrc_fock_from_json(const char *json, ssrc_fock **out);
SSRCBQC_API void ssrc_fock_free(ssrc_fock *state);

/* ---- two-mode fixed-N states ---- */
SSRCBQC_API ssrc_status ssrc_state_new(const ssrc_complex *c, size_t len, ssrc_state **out);
SSRCBQC_API ssrc_status ssrc_state_spin_coherent(int photons, double theta, double phi, ssrc_state **out);
SSRCBQC_API ssrc_status ssrc_state_apply_gate(const ssrc_state *state, ssrc_gate_kind kind, ssrc_axis axis,
                                              double parameter, ssrc_state **out);
SSRCBQC_API int ssrc_state_photons(const ssrc_state *state);
SSRCBQC_API ssrc_status ssrc_state_coeffs(const ssrc_state *state, ssrc_complex *out, size_t len);
SSRCBQC_API ssrc_status ssrc_state_to_fock(const ssrc_state *state, const ssrc_mode *q, const ssrc_mode *w, int cap,
                                           ssrc_fock **out);
SSRCBQC_API ssrc_status ssrc_state_to_json(const ssrc_state *state, char **out);
SSRCBQC_API ssrc_status ssrc_state_from_json(const char *json, ssrc_state **out);
SSRCBQC_API void ssrc_state_free(ssrc_state *state);

SSRCBQC_API ssrc_status ssrc_algebra_check(int photons, ssrc_algebra_report *out);
SSRCBQC_API ssrc_status ssrc_coherent_limit_exact(int photons, ssrc_complex alpha, int k, ssrc_complex *out);
SSRCBQC_API ssrc_status ssrc_poisson_amplitude(ssrc_complex alpha, int k, ssrc_complex *out);

/* ---- extraction ---- */
SSRCBQC_API ssrc_status ssrc_project_bqc(const ssrc_fock *state, int sites, double *probability, ssrc_qubits **out);
SSRCBQC_API ssrc_status ssrc_kerr_then_project(int photons, double eta, int cap, double *probability,
                                               ssrc_qubits **out);

/* ---- qubit register ---- */
SSRCBQC_API ssrc_status ssrc_qubits_new(int qubits, const ssrc_complex *amps, size_t len, ssrc_qubits **out);
SSRCBQC_API int ssrc_qubits_count(const ssrc_qubits *state);
SSRCBQC_API ssrc_status ssrc_qubits_amplitudes(const ssrc_qubits *state, ssrc_complex *out, size_t len);
/* matrix is row-major 2x2. Sites are 1-based. */
SSRCBQC_API ssrc_status ssrc_qubits_apply_local(const ssrc_qubits *state, int site, const ssrc_complex matrix[4],
                                                ssrc_qubits **out);
SSRCBQC_API ssrc_status ssrc_qubits_entropy(const ssrc_qubits *state, const int *sites, size_t n_sites,
                                            double *bits);
SSRCBQC_API ssrc_status ssrc_qubits_is_product(const ssrc_qubits *state, double tol, int *result);
SSRCBQC_API ssrc_status ssrc_qubits_controlled_phase(const ssrc_qubits *state, int site_a, int site_b,
                                                     double *phi);
SSRCBQC_API ssrc_status ssrc_qubits_to_json(const ssrc_qubits *state, char **out);
SSRCBQC_API void ssrc_qubits_free(ssrc_qubits *state);

/* ---- cat encodings ---- */
SSRCBQC_API ssrc_status ssrc_cat_overlap(int photons, ssrc_complex alpha, ssrc_complex *out);
SSRCBQC_API ssrc_status ssrc_cat_overlap_numeric(int photons, ssrc_complex alpha, int cap, ssrc_complex *out);
SSRCBQC_API ssrc_status ssrc_cat_to_bqc(int photons, int sign, int cap, double *probability, ssrc_qubits **out);

#ifdef __cplusplus
}
#endif

#endif /* SSRCBQC_H */
