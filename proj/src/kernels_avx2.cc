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

// Compiled with -mavx2 -mpclmul. Nothing in here may run before the dispatcher
// has confirmed CPU support.

#include <immintrin.h>
#include <wmmintrin.h>

#include <bit>
#include <cstring>
#include <limits>

#include "qconv/kernels.h"

namespace qconv::kernels::avx2 {
namespace {

inline uint64_t fold(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i x = _mm_xor_si128(lo, hi);
    return (uint64_t)_mm_cvtsi128_si64(x) ^ (uint64_t)_mm_extract_epi64(x, 1);
}

void xor_words(uint64_t *dst, const uint64_t *src, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256((const __m256i *)(dst + i));
        __m256i s = _mm256_loadu_si256((const __m256i *)(src + i));
        _mm256_storeu_si256((__m256i *)(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; i++) {
        dst[i] ^= src[i];
    }
}

bool and_parity(const uint64_t *a, const uint64_t *b, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256((const __m256i *)(a + i));
        __m256i vb = _mm256_loadu_si256((const __m256i *)(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
    }
    uint64_t tail = fold(acc);
    for (; i < n; i++) {
        tail ^= a[i] & b[i];
    }
    return std::popcount(tail) & 1;
}

bool symplectic_parity(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t n) {
    __m256i acc = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i vax = _mm256_loadu_si256((const __m256i *)(ax + i));
        __m256i vaz = _mm256_loadu_si256((const __m256i *)(az + i));
        __m256i vbx = _mm256_loadu_si256((const __m256i *)(bx + i));
        __m256i vbz = _mm256_loadu_si256((const __m256i *)(bz + i));
        acc = _mm256_xor_si256(acc, _mm256_xor_si256(_mm256_and_si256(vax, vbz), _mm256_and_si256(vaz, vbx)));
    }
    uint64_t tail = fold(acc);
    for (; i < n; i++) {
        tail ^= (ax[i] & bz[i]) ^ (az[i] & bx[i]);
    }
    return std::popcount(tail) & 1;
}

void clmul(const uint64_t *a, size_t na, const uint64_t *b, size_t nb, uint64_t *out) {
    std::memset(out, 0, (na + nb) * sizeof(uint64_t));
    for (size_t i = 0; i < na; i++) {
        if (!a[i]) {
            continue;
        }
        __m128i va = _mm_cvtsi64_si128((long long)a[i]);
        for (size_t j = 0; j < nb; j++) {
            __m128i vb = _mm_cvtsi64_si128((long long)b[j]);
            __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
            out[i + j] ^= (uint64_t)_mm_cvtsi128_si64(p);
            out[i + j + 1] ^= (uint64_t)_mm_extract_epi64(p, 1);
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
    const __m256d veps = _mm256_set1_pd(eps);
    size_t t = 0;
    for (; t + 4 <= num_targets; t += 4) {
        __m256d best = _mm256_set1_pd(kNegInf);
        __m256i arg = _mm256_set1_epi64x((long long)UINT32_MAX);
        for (size_t p = 0; p < num_prev; p++) {
            __m256d c = _mm256_add_pd(
                _mm256_set1_pd(prev_metric[p]), _mm256_loadu_pd(branch + branch_row[p] * num_targets + t));
            __m256d better = _mm256_cmp_pd(c, _mm256_add_pd(best, veps), _CMP_GT_OQ);
            best = _mm256_blendv_pd(best, c, better);
            arg = _mm256_castpd_si256(_mm256_blendv_pd(
                _mm256_castsi256_pd(arg), _mm256_castsi256_pd(_mm256_set1_epi64x((long long)p)), better));
        }
        _mm256_storeu_pd(out_metric + t, best);
        alignas(32) uint64_t lanes[4];
        _mm256_store_si256((__m256i *)lanes, arg);
        for (int k = 0; k < 4; k++) {
            out_arg[t + k] = (uint32_t)lanes[k];
        }
    }
    for (; t < num_targets; t++) {
        double best = kNegInf;
        uint32_t a = UINT32_MAX;
        for (size_t p = 0; p < num_prev; p++) {
            double c = prev_metric[p] + branch[branch_row[p] * num_targets + t];
            if (c > best + eps) {
                best = c;
                a = (uint32_t)p;
            }
        }
        out_metric[t] = best;
        out_arg[t] = a;
    }
}

}  // namespace

const Table kTable{
    Isa::Avx2, xor_words, and_parity, symplectic_parity, clmul, acs,
};

}  // namespace qconv::kernels::avx2
