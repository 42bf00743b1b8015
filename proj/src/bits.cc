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

#include "qconv/bits.h"

#include <bit>
#include <stdexcept>
#include <utility>

#include "qconv/kernels.h"

namespace qconv {

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch");
    }
    kernels::active().xor_words(words_.data(), other.words_.data(), words_.size());
    return *this;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::popcount() const {
    size_t c = 0;
    for (uint64_t w : words_) {
        c += std::popcount(w);
    }
    return c;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch");
    }
    return kernels::active().and_parity(words_.data(), other.words_.data(), words_.size());
}

std::string BitVec::to_hex() const {
    static const char kDigits[] = "0123456789abcdef";
    size_t digits = (num_bits_ + 3) / 4;
    if (digits == 0) {
        return "0";
    }
    std::string out(digits, '0');
    for (size_t d = 0; d < digits; d++) {
        unsigned nib = 0;
        for (size_t b = 0; b < 4; b++) {
            size_t k = d * 4 + b;
            if (k < num_bits_ && get(k)) {
                nib |= 1u << b;
            }
        }
        out[digits - 1 - d] = kDigits[nib];
    }
    return out;
}

std::string BitVec::to_bits() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

void BitMatrix::push_row(BitVec row) {
    if (row.size() != cols) {
        throw std::invalid_argument("BitMatrix row width mismatch");
    }
    rows.push_back(std::move(row));
}

Echelon rref(BitMatrix m) {
    Echelon out;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows.size(); c++) {
        size_t p = r;
        while (p < m.rows.size() && !m.rows[p].get(c)) {
            p++;
        }
        if (p == m.rows.size()) {
            continue;
        }
        std::swap(m.rows[r], m.rows[p]);
        for (size_t i = 0; i < m.rows.size(); i++) {
            if (i != r && m.rows[i].get(c)) {
                m.rows[i] ^= m.rows[r];
            }
        }
        out.pivot_cols.push_back(c);
        r++;
    }
    m.rows.resize(r);
    out.reduced = std::move(m);
    return out;
}

size_t rank(const BitMatrix &m) {
    return rref(m).pivot_cols.size();
}

bool in_span(const Echelon &e, const BitVec &v) {
    BitVec w = v;
    for (size_t i = 0; i < e.pivot_cols.size(); i++) {
        if (w.get(e.pivot_cols[i])) {
            w ^= e.reduced.rows[i];
        }
    }
    return !w.any();
}

std::optional<std::vector<size_t>> span_combination(const BitMatrix &original, const BitVec &v) {
    size_t n = original.rows.size();
    std::vector<BitVec> rows = original.rows;
    std::vector<BitVec> tags;
    tags.reserve(n);
    for (size_t i = 0; i < n; i++) {
        BitVec t(n);
        t.set(i, true);
        tags.push_back(std::move(t));
    }
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < original.cols && r < n; c++) {
        size_t p = r;
        while (p < n && !rows[p].get(c)) {
            p++;
        }
        if (p == n) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        std::swap(tags[r], tags[p]);
        for (size_t i = 0; i < n; i++) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                tags[i] ^= tags[r];
            }
        }
        pivots.push_back(c);
        r++;
    }
    BitVec w = v;
    BitVec used(n);
    for (size_t i = 0; i < pivots.size(); i++) {
        if (w.get(pivots[i])) {
            w ^= rows[i];
            used ^= tags[i];
        }
    }
    if (w.any()) {
        return std::nullopt;
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < n; i++) {
        if (used.get(i)) {
            out.push_back(i);
        }
    }
    return out;
}

std::optional<BitVec> solve(const BitMatrix &m, const BitVec &rhs) {
    if (rhs.size() != m.rows.size()) {
        throw std::invalid_argument("solve: rhs length must equal row count");
    }
    // Augment each row with its right-hand side bit in column `cols`.
    BitMatrix aug(m.cols + 1);
    for (size_t i = 0; i < m.rows.size(); i++) {
        BitVec row(m.cols + 1);
        for (size_t c = 0; c < m.cols; c++) {
            if (m.rows[i].get(c)) {
                row.set(c, true);
            }
        }
        row.set(m.cols, rhs.get(i));
        aug.push_row(std::move(row));
    }
    Echelon e = rref(std::move(aug));
    BitVec x(m.cols);
    for (size_t i = 0; i < e.pivot_cols.size(); i++) {
        size_t c = e.pivot_cols[i];
        if (c == m.cols) {
            return std::nullopt;
        }
        x.set(c, e.reduced.rows[i].get(m.cols));
    }
    return x;
}

std::vector<BitVec> kernel_basis(const BitMatrix &m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : e.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<BitVec> basis;
    for (size_t f = 0; f < m.cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(m.cols);
        v.set(f, true);
        for (size_t i = 0; i < e.pivot_cols.size(); i++) {
            if (e.reduced.rows[i].get(f)) {
                v.set(e.pivot_cols[i], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qconv
