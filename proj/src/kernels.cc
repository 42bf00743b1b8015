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

#include "qconv/kernels.h"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qconv::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(QCONV_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("pclmul");
#else
    return false;
#endif
}

const Table *default_table() {
    const char *env = std::getenv("QCONV_ISA");
    if (env != nullptr && std::string(env) == "scalar") {
        return &scalar::kTable;
    }
#if defined(QCONV_HAVE_AVX2)
    if (cpu_has_avx2()) {
        return &avx2::kTable;
    }
#endif
    return &scalar::kTable;
}

std::atomic<const Table *> &current() {
    static std::atomic<const Table *> ptr{default_table()};
    return ptr;
}

}  // namespace

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
            return cpu_has_avx2();
    }
    return false;
}

const Table &table(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
    }
#if defined(QCONV_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        return avx2::kTable;
    }
#endif
    return scalar::kTable;
}

const Table &active() {
    return *current().load(std::memory_order_relaxed);
}

void force_isa(Isa isa) {
    current().store(&table(isa), std::memory_order_relaxed);
}

void reset_isa() {
    current().store(default_table(), std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "?";
}

}  // namespace qconv::kernels
