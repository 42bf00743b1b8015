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

#ifndef QCONV_GF2POLY_H
#define QCONV_GF2POLY_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qconv {

/// Largest degree any polynomial may reach before DegreeOverflow is thrown.
constexpr int64_t kMaxDegree = int64_t{1} << 16;

/// Polynomial over GF(2) in the delay variable D.
///
/// Coefficients are packed little-endian (coefficient of D^0 is bit 0 of word 0)
/// and the word vector is kept trimmed, so equal polynomials compare equal
/// word-for-word.
class Poly {
   public:
    Poly() = default;

    static Poly one();
    /// D^k.
    static Poly monomial(int64_t k);
    /// coeffs[j] is the coefficient of D^j.
    static Poly from_coeffs(std::span<const int> coeffs);
    /// Parses `0`, `1`, `D`, `D^3`, `1+D+D^3`. Repeated terms cancel.
    static Poly parse(std::string_view text);

    /// Degree, or -1 for the zero polynomial.
    int64_t degree() const;
    /// Exponent of the lowest nonzero coefficient, -1 for zero.
    int64_t valuation() const;

    bool is_zero() const {
        return words_.empty();
    }
    bool is_one() const {
        return words_.size() == 1 && words_[0] == 1;
    }
    bool coeff(int64_t k) const;
    void set_coeff(int64_t k, bool v);
    size_t num_terms() const;

    /// this * D^k.
    Poly shifted_up(int64_t k) const;
    /// this / D^k; the low k coefficients must be zero.
    Poly shifted_down(int64_t k) const;
    /// D^d * this(1/D). Requires degree() <= d.
    Poly reversed(int64_t d) const;

    Poly &operator+=(const Poly &other);
    Poly &operator*=(const Poly &other);
    friend Poly operator+(Poly a, const Poly &b) {
        a += b;
        return a;
    }
    friend Poly operator*(const Poly &a, const Poly &b);
    bool operator==(const Poly &other) const = default;
    /// Orders by degree, then by coefficients from the top down.
    friend bool operator<(const Poly &a, const Poly &b);

    std::string to_string() const;
    std::span<const uint64_t> words() const {
        return words_;
    }

   private:
    void trim();
    std::vector<uint64_t> words_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b is zero.
DivMod divmod(const Poly &a, const Poly &b);
Poly gcd(Poly a, Poly b);
Poly lcm(const Poly &a, const Poly &b);
bool is_monomial(const Poly &a);

/// Finite Laurent series: body * D^shift with body(0) = 1 unless zero.
class Laurent {
   public:
    Laurent() = default;
    Laurent(Poly body, int64_t shift);
    static Laurent from_poly(const Poly &p) {
        return Laurent(p, 0);
    }
    static Laurent monomial(int64_t e) {
        return Laurent(Poly::one(), e);
    }
    /// Accepts the polynomial syntax plus negative exponents, e.g. `D^-2+1`.
    static Laurent parse(std::string_view text);

    const Poly &body() const {
        return body_;
    }
    int64_t shift() const {
        return shift_;
    }
    bool is_zero() const {
        return body_.is_zero();
    }
    /// Lowest and highest exponents present (undefined for zero).
    int64_t min_exponent() const {
        return shift_;
    }
    int64_t max_exponent() const {
        return shift_ + body_.degree();
    }
    bool coeff(int64_t e) const;

    /// this(1/D).
    Laurent reversed() const;
    /// this * D^e.
    Laurent shifted(int64_t e) const {
        return is_zero() ? *this : Laurent(body_, shift_ + e);
    }
    /// Plain polynomial when min_exponent() >= 0 (or zero).
    bool is_poly() const {
        return is_zero() || shift_ >= 0;
    }
    Poly to_poly() const;

    Laurent &operator+=(const Laurent &other);
    friend Laurent operator+(Laurent a, const Laurent &b) {
        a += b;
        return a;
    }
    friend Laurent operator*(const Laurent &a, const Laurent &b);
    bool operator==(const Laurent &other) const = default;

    std::string to_string() const;

   private:
    Poly body_;
    int64_t shift_ = 0;
};

/// Multiplies every entry of the group by the same D^p, p = max(0, -min shift),
/// and returns plain polynomials. Zero entries stay zero.
std::vector<Poly> laurent_normalize_group(std::span<const Laurent> group);

/// The shift p that laurent_normalize_group would apply.
int64_t laurent_group_shift(std::span<const Laurent> group);

/// Rectangular matrix of polynomials, row-major.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Poly &at(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const Poly &at(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);
    /// row dst += factor * row src.
    void add_multiple(size_t dst, size_t src, const Poly &factor);
    /// Multiplies a row by D^shift; a negative shift divides and must be exact.
    void scale_row(size_t r, int64_t shift);
    /// Smallest valuation among the nonzero entries of row r, -1 when the row is zero.
    int64_t row_valuation(size_t r) const;

    /// Sub-block [r0, r0+nr) x [c0, c0+nc).
    PolyMatrix slice(size_t r0, size_t nr, size_t c0, size_t nc) const;

    bool operator==(const PolyMatrix &other) const = default;

    /// One row per line, entries separated by spaces, `|` before column `split` when nonzero.
    std::string to_string(size_t split = 0) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Poly> entries_;
};

/// One recorded elimination step. Replaying the log on a parallel matrix
/// reproduces the row operations (and, optionally, the column swaps).
struct ElimOp {
    enum class Kind { AddMultiple, ScaleRow, SwapRows, SwapCols };
    Kind kind;
    size_t a = 0;  // destination row / first index
    size_t b = 0;  // source row / second index
    Poly factor;   // AddMultiple
    int64_t shift = 0;  // ScaleRow
};

struct Elimination {
    PolyMatrix reduced;
    /// Parallel matrix that received the same row operations and column swaps.
    PolyMatrix companion;
    /// col_perm[c] is the original column now found at position c.
    std::vector<size_t> col_perm;
    std::vector<ElimOp> log;
    /// Number of pivots found; pivot i sits at (row_begin + i, col_begin + i).
    size_t rank = 0;
    /// False when some above-pivot entry could not be cleared exactly.
    bool diagonal_ok = true;
};

/// Ring elimination over GF(2)[D] restricted to columns [col_begin, col_end)
/// and rows [row_begin, rows).
///
/// Columns are scanned left to right and the first column with a nonzero entry
/// is swapped into pivot position. Within it, the minimal-degree entry (lowest
/// row on ties) becomes the pivot and the rows below are reduced by it,
/// repeating Euclid-style until only the pivot survives. A pure D^t factor
/// common to the whole pivot row (companion included) is then divided out.
/// Entries above the pivot are cleared only when the pivot divides them
/// exactly; otherwise diagonal_ok is cleared.
Elimination eliminate(
    PolyMatrix m,
    size_t col_begin,
    size_t col_end,
    size_t row_begin = 0,
    const PolyMatrix *companion = nullptr);

/// Applies a log to a matrix with the same number of rows.
void replay(std::span<const ElimOp> log, PolyMatrix &target, bool apply_col_swaps);

}  // namespace qconv

#endif
