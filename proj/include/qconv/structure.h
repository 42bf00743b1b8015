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

#ifndef QCONV_STRUCTURE_H
#define QCONV_STRUCTURE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qconv/code.h"
#include "qconv/gf2poly.h"
#include "qconv/pauli.h"

namespace qconv {

/// Standard polynomial form of a code.
///
/// Rows 0..r-1 have X part (A B C) and Z part (E F G); rows r..n-k-1 have X
/// part zero and Z part (J K L). Column blocks have widths r, n-k-r and k, in
/// the permuted column order given by col_perm.
struct StandardForm {
    size_t n = 0;
    size_t k = 0;
    size_t m = 0;
    size_t r = 0;
    /// (n-k) x n halves in standard column order.
    PolyMatrix x;
    PolyMatrix z;
    PolyMatrix A, B, C, E, F, G, J, K, L;
    /// col_perm[c] is the physical column placed at standard position c.
    std::vector<size_t> col_perm;
    /// Row operations of both eliminations, in order.
    std::vector<ElimOp> row_log;
    bool diagonal_ok = true;
    /// Standard row i equals the product over g of combination[i][g](D)[gen g], up to sign.
    std::vector<std::vector<Laurent>> combination;
    /// Sign of each standard row inherited from the generator signs.
    std::vector<int> signs;

    /// (n-k) x 2n matrix in standard column order.
    PolyMatrix matrix() const;
    /// Standard row i in physical column order.
    PauliPoly row(size_t i) const;
    /// Largest degree among the standard rows.
    int64_t max_row_degree() const;
};

StandardForm standard_form(const CodeSpec &c);

/// Encoded Pauli operators, stored in physical column order.
struct LogicalOps {
    size_t n = 0;
    size_t k = 0;
    std::vector<PauliPoly> xbar;
    /// Empty when the conditioning polynomial is not a monomial.
    std::vector<PauliPoly> zbar;
    /// Conditioning polynomial, constant term 1.
    Poly conditioning;
    /// Largest polynomial degree in xbar and zbar.
    int64_t lambda = 0;
    /// Power of D applied to row a of xbar (and zbar) during normalization.
    std::vector<int64_t> shifts;

    bool has_zbar() const {
        return !zbar.empty() || k == 0;
    }
    /// Logical qubit a is marked by the X factor of xbar[a] at block
    /// info_blocks[a], physical column info_columns[a] (the top term of its U3 entry).
    std::vector<size_t> info_blocks;
    std::vector<size_t> info_columns;
};

/// X-bar operators and the conditioning polynomial. Requires sf.diagonal_ok.
LogicalOps derive_xbar(const StandardForm &sf);

/// Adds Z-bar operators to `xbar_ops`, re-normalizing each X-bar/Z-bar pair jointly.
/// Throws CatastrophicCode when the conditioning polynomial is not a monomial.
LogicalOps derive_zbar(const StandardForm &sf, const LogicalOps &xbar_ops);

/// derive_xbar, then derive_zbar when the Z-bar operators are finite; otherwise
/// zbar is left empty.
LogicalOps derive_logicals(const StandardForm &sf);

/// True iff the conditioning polynomial is not a monomial. Throws std::domain_error
/// when the standard form is not diagonal.
bool is_catastrophic(const CodeSpec &c);

struct LogicalCount {
    size_t protected_qubits = 0;
    size_t sacrificed = 0;
};

/// Logical qubits carried by p generator blocks. Throws std::invalid_argument when p <= lambda.
LogicalCount count_logicals(const CodeSpec &c, const LogicalOps &lo, size_t p);

}  // namespace qconv

#endif
