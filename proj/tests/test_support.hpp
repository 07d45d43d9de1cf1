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

#include <gtest/gtest.h>

#include "ssrcbqc/error.hpp"

// Expects `stmt` to throw ssrcbqc::Error carrying `expected`.
#define EXPECT_ERROR_CODE(stmt, expected)                                                  \
    do {                                                                                   \
        try {                                                                              \
            stmt;                                                                          \
            ADD_FAILURE() << "no exception from: " #stmt;                                  \
        } catch (const ssrcbqc::Error &e_) {                                               \
            EXPECT_EQ(e_.code(), (expected)) << e_.what();                                 \
        }                                                                                  \
    } while (0)
