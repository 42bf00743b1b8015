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

#ifndef QCONV_KERNELS_H
#define QCONV_KERNELS_H

#include <cstddef>
#include <cstdint>
#include <string_view>

/// Data-parallel inner loops used by the rest of the library.
///
/// Every kernel has a scalar reference implementation and, when the build
/// and the host CPU allow it, an x86 variant (AVX2 for word and metric
/// loops, PCLMULQDQ for carry-less products). The variant is chosen once at
/// startup from CPUID; tests force each ISA in turn and require bit-identical
/// results.
namespace qconv::kernels {

enum class Isa { Scalar, Avx2 };

struct Table {
    Isa isa;

    /// dst[i] ^= src[i] for i < n.
    void (*xor_words)(uint64_t *dst, const uint64_t *src, size_t n);

    /// Parity of popcount(a & b) over n words.
    bool (*and_parity)(const uint64_t *a, const uint64_t *b, size_t n);

    /// Parity of popcount((ax & bz) ^ (az & bx)) over n words: the binary
    /// symplectic inner product.
    bool (*symplectic_parity)(
        const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t n);

    /// Carry-less product. out must hold na + nb words and is overwritten.
    void (*clmul)(const uint64_t *a, size_t na, const uint64_t *b, size_t nb, uint64_t *out);

    /// Add-compare-select over one trellis step.
    ///
    /// For every target state t < num_targets:
    ///   out_metric[t] = max_p prev_metric[p] + branch[branch_row[p] * num_targets + t]
    /// scanning p = 0, 1, ... and replacing the incumbent only when a candidate
    /// exceeds it by more than eps, so the lowest p wins near-ties. out_arg[t]
    /// receives the winning p, or UINT32_MAX when every candidate is -inf.
    void (*acs)(
        const double *prev_metric,
        const uint32_t *branch_row,
        size_t num_prev,
        const double *branch,
        size_t num_targets,
        double eps,
        double *out_metric,
        uint32_t *out_arg);
};

/// True when the kernels for `isa` were compiled in and the CPU supports them.
bool isa_available(Isa isa);

/// Kernel table for a specific ISA. Throws std::invalid_argument if unavailable.
const Table &table(Isa isa);

/// Currently selected kernels.
const Table &active();

/// Overrides the runtime selection. Throws if `isa` is unavailable.
void force_isa(Isa isa);

/// Restores CPUID-based selection (honouring QCONV_ISA=scalar|avx2).
void reset_isa();

std::string_view isa_name(Isa isa);

namespace scalar {
extern const Table kTable;
}

#if defined(QCONV_HAVE_AVX2)
namespace avx2 {
extern const Table kTable;
}
#endif

}  // namespace qconv::kernels

#endif
