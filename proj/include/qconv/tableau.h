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

#ifndef QCONV_TABLEAU_H
#define QCONV_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qconv/pauli.h"

namespace qconv {

/// Pauli operator with an exact phase: i^phase times a tensor product of
/// I, X, Y, Z (Y Hermitian).
struct PhasedPauli {
    SymplecticVector v;
    uint8_t phase = 0;

    PhasedPauli() = default;
    explicit PhasedPauli(size_t num_qubits) : v(num_qubits) {
    }
    PhasedPauli(SymplecticVector v, int sign) : v(std::move(v)), phase(sign < 0 ? 2 : 0) {
    }
    /// Optional leading '+' or '-', then letters.
    static PhasedPauli parse(std::string_view text);

    size_t num_qubits() const {
        return v.num_qubits();
    }
    bool hermitian() const {
        return (phase & 1) == 0;
    }
    /// +1 or -1. Throws std::logic_error for a non-Hermitian operator.
    int sign() const;

    /// *this = *this * rhs (operator product, rhs applied first as a matrix on the right).
    PhasedPauli &operator*=(const PhasedPauli &rhs);
    friend PhasedPauli operator*(PhasedPauli a, const PhasedPauli &b) {
        a *= b;
        return a;
    }
    bool operator==(const PhasedPauli &other) const = default;

    /// "+XZ_Y" style: sign then letters, '_' for identity.
    std::string to_string() const;
};

enum class GateKind : uint8_t { H, S, X, Z, CX, CY, CZ };

/// Clifford gate on 0-based qubits. For controlled gates a is the control and b the target.
struct Gate {
    GateKind kind;
    size_t a = 0;
    size_t b = 0;

    bool two_qubit() const {
        return kind == GateKind::CX || kind == GateKind::CY || kind == GateKind::CZ;
    }
    bool operator==(const Gate &other) const = default;
};

std::string gate_name(GateKind k);

/// Stabilizer tableau. Column q holds the images U X_q U^dagger (destabilizer)
/// and U Z_q U^dagger (stabilizer) with exact signs.
class Tableau {
   public:
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    /// Conjugates every row by the gate. Throws std::out_of_range on bad indices.
    void apply(const Gate &g);

    const PhasedPauli &destabilizer(size_t q) const {
        return destab_[q];
    }
    const PhasedPauli &stabilizer(size_t q) const {
        return stab_[q];
    }

    /// U P U^dagger for an arbitrary Pauli P.
    PhasedPauli conjugate(const PhasedPauli &p) const;

    struct Membership {
        /// P commutes with every stabilizer row (it is +/- a product of them).
        bool in_group = false;
        /// Stabilizer rows whose product is +/- P.
        std::vector<size_t> rows;
        /// P = sign * product of those rows.
        int sign = 1;
    };
    /// Decomposes P over the stabilizer rows.
    Membership decompose(const PhasedPauli &p) const;

    /// True when destabilizer/stabilizer pairs anticommute and all other pairs commute.
    bool symplectic_ok() const;

   private:
    void check(size_t q) const;
    size_t n_;
    std::vector<PhasedPauli> destab_;
    std::vector<PhasedPauli> stab_;
};

}  // namespace qconv

#endif
