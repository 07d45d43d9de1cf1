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

#include <complex>
#include <stdexcept>
#include <string>

namespace ssrcbqc {

using Complex = std::complex<double>;

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
    InvalidArgument = 1,
    DimensionMismatch = 2,
    NotNormalized = 3,
    NotOrthogonal = 4,
    ResourceCap = 5,
    Undefined = 6,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {
    }
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Photon-number cap for full multimode Fock expansions.
inline constexpr int kDefaultPhotonCap = 8;

}  // namespace ssrcbqc
