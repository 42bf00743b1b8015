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

#ifndef QCONV_CIRCUIT_H
#define QCONV_CIRCUIT_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/code.h"
#include "qconv/structure.h"
#include "qconv/tableau.h"

namespace qconv {

/// Physical position of the information qubit for logical r of block s.
struct InfoQubit {
    size_t s = 0;
    size_t r = 0;
    size_t qubit = 0;  // 0-based
};

struct Circuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;
    /// Qubits per block; 0 for circuits read from text.
    size_t n = 0;
    size_t q = 0;
    size_t lambda = 0;
    size_t block_count = 0;
    std::vector<InfoQubit> layout;

    /// "qubits N" then one gate per line with 1-based qubits: "H 3", "CZ 5 2".
    std::string to_text() const;
    /// Inverse of to_text (gates and qubit count only). Throws ParseError.
    static Circuit parse_text(std::string_view text);

    size_t count(GateKind k) const;
};

/// On-line encoder for q information blocks.
///
/// The stream has n*(q + lambda + ceil(m/n)) qubits, grown when a projected row
/// or an X-bar would not fit. The first lambda blocks hold only ancillas.
/// Standard row i is projected at every shift needed to generate the in-range
/// generators: a Hadamard (and S for a Y factor, Z for a negative sign) on its
/// control qubit, then controlled Paulis. Each X-bar is applied as controlled
/// Paulis from its information qubit just before the first projection that
/// touches that qubit. Negative Z-only rows are fixed by X flips on ancillas
/// chosen by solving the sign equations.
///
/// Throws std::invalid_argument for q == 0 and std::domain_error for a
/// non-diagonal standard form.
Circuit build_encoder(const CodeSpec &c, const StandardForm &sf, const LogicalOps &lo, size_t q, bool simplify = false);

/// Drops CZ and Z gates that act on a qubit still known to be |0>.
Circuit simplify_circuit(const Circuit &circ);

struct VerifyReport {
    bool ok = true;
    size_t generator_checks = 0;
    size_t generator_failures = 0;
    size_t logical_checks = 0;
    size_t logical_failures = 0;
    bool online_ok = true;
    /// Largest (max block touched so far) - (min block of the current gate).
    size_t max_reach = 0;
    bool symplectic_ok = true;
    std::vector<std::string> failures;
};

/// Simulates the circuit on a tableau and checks every generator M_{j,i}
/// (j < q + lambda) is a +1 stabilizer, every information X maps to its
/// shifted X-bar modulo the stabilizer with sign +1, and the on-line bound.
VerifyReport verify_encoder(const Circuit &circ, const CodeSpec &c, const LogicalOps &lo, size_t q);

}  // namespace qconv

#endif
