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

#ifndef QCONV_BITS_H
#define QCONV_BITS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qconv {

/// Fixed-length packed bit vector over GF(2). Bit i lives in word i / 64.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool v) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (v) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    BitVec &operator^=(const BitVec &other);
    bool operator==(const BitVec &other) const = default;

    bool any() const;
    size_t popcount() const;
    /// Parity of popcount(*this & other).
    bool dot(const BitVec &other) const;

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    /// Lower-case hex, most significant nibble first; bit 0 is the lowest bit of the last digit.
    std::string to_hex() const;
    /// "0110..." with bit 0 first.
    std::string to_bits() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense GF(2) matrix stored as rows.
struct BitMatrix {
    size_t cols = 0;
    std::vector<BitVec> rows;

    BitMatrix() = default;
    explicit BitMatrix(size_t cols) : cols(cols) {
    }

    void push_row(BitVec row);
    size_t num_rows() const {
        return rows.size();
    }
};

/// Row-reduced echelon form with pivot bookkeeping.
struct Echelon {
    BitMatrix reduced;
    std::vector<size_t> pivot_cols;
};

/// Reduced row echelon form (pivot columns scanned left to right).
Echelon rref(BitMatrix m);

size_t rank(const BitMatrix &m);

/// True iff v lies in the row span of the reduced matrix.
bool in_span(const Echelon &e, const BitVec &v);

/// Expresses v in terms of the original rows that produced `e`: returns the set of
/// row indices whose sum is v, or nullopt when v is outside the span. Requires
/// `original` to be the matrix given to rref.
std::optional<std::vector<size_t>> span_combination(const BitMatrix &original, const BitVec &v);

/// Solves m * x = rhs (rhs has one bit per row). Returns any solution, or nullopt.
std::optional<BitVec> solve(const BitMatrix &m, const BitVec &rhs);

/// Basis of {x : m * x = 0}.
std::vector<BitVec> kernel_basis(const BitMatrix &m);

}  // namespace qconv

#endif
