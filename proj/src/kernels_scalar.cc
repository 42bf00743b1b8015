// Copyright 2026 The qconv Authors
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

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>

#include "qconv/kernels.h"

namespace qconv::kernels::scalar {
namespace {

void xor_words(uint64_t *dst, const uint64_t *src, size_t n) {
    for (size_t i = 0; i < n; i++) {
        dst[i] ^= src[i];
    }
}

bool and_parity(const uint64_t *a, const uint64_t *b, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc ^= a[i] & b[i];
    }
    return std::popcount(acc) & 1;
}

bool symplectic_parity(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc ^= (ax[i] & bz[i]) ^ (az[i] & bx[i]);
    }
    return std::popcount(acc) & 1;
}

void clmul(const uint64_t *a, size_t na, const uint64_t *b, size_t nb, uint64_t *out) {
    std::memset(out, 0, (na + nb) * sizeof(uint64_t));
    for (size_t i = 0; i < na; i++) {
        uint64_t w = a[i];
        while (w) {
            int bit = std::countr_zero(w);
            w &= w - 1;
            // out[i + j ..] ^= b[j] << bit
            for (size_t j = 0; j < nb; j++) {
                out[i + j] ^= b[j] << bit;
                if (bit) {
                    out[i + j + 1] ^= b[j] >> (64 - bit);
                }
            }
        }
    }
}

void acs(
    const double *prev_metric,
    const uint32_t *branch_row,
    size_t num_prev,
    const double *branch,
    size_t num_targets,
    double eps,
    double *out_metric,
    uint32_t *out_arg) {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    for (size_t t = 0; t < num_targets; t++) {
        double best = kNegInf;
        uint32_t arg = UINT32_MAX;
        for (size_t p = 0; p < num_prev; p++) {
            double c = prev_metric[p] + branch[branch_row[p] * num_targets + t];
            if (c > best + eps) {
                best = c;
                arg = (uint32_t)p;
            }
        }
        out_metric[t] = best;
        out_arg[t] = arg;
    }
}

}  // namespace

const Table kTable{
    Isa::Scalar, xor_words, and_parity, symplectic_parity, clmul, acs,
};

}  // namespace qconv::kernels::scalar
