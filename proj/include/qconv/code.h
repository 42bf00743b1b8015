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

#ifndef QCONV_CODE_H
#define QCONV_CODE_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/gf2poly.h"
#include "qconv/pauli.h"

namespace qconv {

/// An (n, k, m) convolutional stabilizer code given by its n-k seed generators.
/// Generator i acts on qubits [0, n+m) and its block shifts generate the stabilizer.
struct CodeSpec {
    size_t n = 0;
    size_t k = 0;
    size_t m = 0;
    std::vector<PauliPoly> gens;
    /// +1 or -1 per generator.
    std::vector<int> signs;
    /// Comment lines found before the header, without the leading '#'.
    std::vector<std::string> comments;

    size_t num_gens() const {
        return n - k;
    }
    /// ceil(m / n).
    size_t overlap_blocks() const {
        return n == 0 ? 0 : (m + n - 1) / n;
    }

    /// Builds a code from dense generator strings of length n+m.
    static CodeSpec from_strings(size_t n, size_t k, size_t m, const std::vector<std::string> &gens);

    /// (n-k) x 2n matrix of generator polynomials: X part then Z part.
    PolyMatrix matrix() const;
};

struct PairCheck {
    size_t a;
    size_t b;
    bool commute;
};

struct ValidationReport {
    bool ok = true;
    bool shape_ok = true;
    bool support_ok = true;
    bool commute_ok = true;
    bool independent = true;
    size_t window_blocks = 0;
    size_t window_rank = 0;
    size_t window_rows = 0;
    /// Every unordered pair (a <= b), including each generator with its own shifts.
    std::vector<PairCheck> pairs;
    std::vector<std::string> messages;
};

ValidationReport validate(const CodeSpec &c);

/// Finite stabilizer on N = n*q + m qubits. Row j*(n-k) + i is generator i shifted by j blocks.
struct ExpandedStabilizer {
    size_t q = 0;
    size_t num_qubits = 0;
    std::vector<SymplecticVector> rows;
    /// Reserved for explicit boundary logicals; the library keeps it empty.
    std::vector<SymplecticVector> boundary_rows;
};

/// Throws std::invalid_argument when the code is invalid or q == 0.
ExpandedStabilizer expand_stabilizer(const CodeSpec &c, size_t q);

/// Code file: header line "n k m", then n-k lines "[+|-]<letters of length n+m>".
/// '#' starts a comment. Throws ParseError with a line and column.
CodeSpec parse_code(std::string_view text);
/// Canonical text; parse_code(serialize_code(c)) == c.
std::string serialize_code(const CodeSpec &c);

CodeSpec load_code_file(const std::string &path);

bool operator==(const CodeSpec &a, const CodeSpec &b);

}  // namespace qconv

#endif
