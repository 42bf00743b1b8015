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

#ifndef QCONV_PAULI_H
#define QCONV_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/bits.h"
#include "qconv/gf2poly.h"

namespace qconv {

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);
/// Throws ParseError for anything outside IXYZ (lower case accepted).
Pauli pauli_from_char(char c);

/// Pauli operator on a finite window of qubits: `ops` starts at qubit `offset`.
/// Non-empty strings begin and end with a non-identity letter.
struct PauliString {
    std::string ops;
    size_t offset = 0;

    bool operator==(const PauliString &other) const = default;
    /// ops padded with `offset` leading identities.
    std::string dense() const;
};

/// Dense Pauli operator on N qubits as a pair of bit vectors (X part, Z part).
/// Phases are not represented.
struct SymplecticVector {
    BitVec x;
    BitVec z;

    SymplecticVector() = default;
    explicit SymplecticVector(size_t num_qubits) : x(num_qubits), z(num_qubits) {
    }
    /// Letters IXYZ, qubit 0 first.
    static SymplecticVector from_letters(std::string_view letters);

    size_t num_qubits() const {
        return x.size();
    }
    Pauli letter(size_t q) const {
        return (Pauli)(x.get(q) | (z.get(q) << 1));
    }
    void set_letter(size_t q, Pauli p);

    /// Group product modulo phase.
    SymplecticVector &operator^=(const SymplecticVector &other);
    bool operator==(const SymplecticVector &other) const = default;

    /// True iff the two operators commute.
    bool commutes_with(const SymplecticVector &other) const;
    bool is_identity() const {
        return !x.any() && !z.any();
    }
    size_t weight() const;

    std::string to_letters() const;
    /// "<x hex>:<z hex>".
    std::string to_hex() const;
    /// X bits then Z bits as one 2N-bit vector.
    BitVec flattened() const;
};

/// Pauli operator on the qubit stream in the pair-of-polynomial-vectors form.
///
/// Qubit j*n + c (block j, column c, both 0-based) carries X iff the D^j
/// coefficient of x[c] is set, Z iff that of z[c] is set, Y iff both.
class PauliPoly {
   public:
    PauliPoly() = default;
    explicit PauliPoly(size_t n) : x_(n), z_(n) {
    }
    PauliPoly(std::vector<Poly> x, std::vector<Poly> z);

    /// Dense letters, qubit 0 first; the string may span several blocks.
    static PauliPoly from_string(std::string_view letters, size_t n);
    static PauliPoly from_string(const PauliString &s, size_t n);

    size_t width() const {
        return x_.size();
    }
    const std::vector<Poly> &x() const {
        return x_;
    }
    const std::vector<Poly> &z() const {
        return z_;
    }
    std::vector<Poly> &x() {
        return x_;
    }
    std::vector<Poly> &z() {
        return z_;
    }

    /// Highest degree among all entries, -1 for the identity.
    int64_t degree() const;
    bool is_identity() const;
    /// One past the highest qubit with a non-identity letter (0 for identity).
    size_t support_end() const;
    Pauli letter(size_t qubit) const;

    /// Trimmed string with offset.
    PauliString to_string() const;
    /// Letters for qubits [0, num_qubits); throws if the support is longer.
    std::string to_letters(size_t num_qubits) const;
    /// "(x_1,...,x_n|z_1,...,z_n)" in the polynomial syntax. Within each half the
    /// commas are dropped when every entry of that half is 0 or 1.
    std::string to_vector_string() const;

    bool operator==(const PauliPoly &other) const = default;

   private:
    std::vector<Poly> x_;
    std::vector<Poly> z_;
};

/// D^j[p]: every entry multiplied by D^j.
PauliPoly delay(const PauliPoly &p, int64_t j);
/// Group product modulo phase (componentwise sum).
PauliPoly multiply(const PauliPoly &p, const PauliPoly &q);
/// P(D)[a] = product of D^j[a] over the terms of P. Requires a to commute with its own shifts.
PauliPoly apply_poly(const Poly &poly, const PauliPoly &a);
/// Ordinary commutation of the two (finite) operators.
bool commute_at(const PauliPoly &p, const PauliPoly &q);
/// P_X(D) Q_Z(1/D) + P_Z(D) Q_X(1/D); the coefficient of D^(s-r) is the
/// commutation parity of D^r[p] and D^s[q].
Laurent commutation_series(const PauliPoly &p, const PauliPoly &q);
/// True iff every shift of p commutes with every shift of q.
bool gen_commute(const PauliPoly &p, const PauliPoly &q);
/// Flat operator of delay(p, shift) on N qubits. Throws std::out_of_range when it does not fit.
SymplecticVector expand(const PauliPoly &p, int64_t shift, size_t num_qubits);

}  // namespace qconv

#endif
