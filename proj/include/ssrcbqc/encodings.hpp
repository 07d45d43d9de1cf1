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

#include <utility>

#include "ssrcbqc/error.hpp"
#include "ssrcbqc/extraction.hpp"
#include "ssrcbqc/mode_algebra.hpp"

namespace ssrcbqc {

// Cat codes at fixed photon number. A coherent amplitude alpha becomes a Fock
// state |N> in one of two collective modes b+ / b- spanned by (a(N), b(N));
// the two are orthogonal exactly at |alpha|^2 = N/2.

struct CatSpec {
    int photons = 0;
    Complex alpha = 0.0;
    int sign = +1;
};

/// b+ and b- over the basis (a(N), b(N)), index 0 = a(N):
///     b+^dagger = sqrt(1 - |alpha|^2/N) b(N)^dagger + alpha/sqrt(N) a(N)^dagger
///     b-^dagger = sqrt(1 - |alpha|^2/N) b(N)^dagger - alpha/sqrt(N) a(N)^dagger
std::pair<ModeVector, ModeVector> plus_minus_modes(int photons, Complex alpha);

/// <N|_+ |N>_- = (1 - 2|alpha|^2/N)^N.
Complex fock_overlap(int photons, Complex alpha);

/// Same overlap computed as a Fock-space inner product.
Complex fock_overlap_numeric(int photons, Complex alpha, int cap = kDefaultPhotonCap);

/// Normalization 2(1 +/- Re <N|_+ |N>_-) of (|N>_+ +/- |N>_-).
double cat_normalization(int photons, Complex alpha, int sign);

/// (|N>_+ |0>_- +/- |0>_+ |N>_-)/sqrt2 at |alpha|^2 = N/2, with
/// b+ = sum_i b_i(0)/sqrt(N) and b- = sum_i b_i(1)/sqrt(N), projected onto
/// the N-qubit register. The result is (|0...0> +/- |1...1>)/sqrt2.
ExtractionResult cat_to_bqc(int photons, int sign, int cap = kDefaultPhotonCap);

}  // namespace ssrcbqc
