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

#include "qconv/pauli.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qconv/errors.h"
#include "qconv/kernels.h"

namespace qconv {

char pauli_char(Pauli p) {
    static const char kChars[] = "IXZY";
    return kChars[(int)p & 3];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case 'i':
        case '_':
            return Pauli::I;
        case 'X':
        case 'x':
            return Pauli::X;
        case 'Y':
        case 'y':
            return Pauli::Y;
        case 'Z':
        case 'z':
            return Pauli::Z;
        default:
            throw ParseError(std::string("invalid Pauli letter '") + c + "'");
    }
}

std::string PauliString::dense() const {
    return std::string(offset, 'I') + ops;
}

// ---------------------------------------------------------------------------

SymplecticVector SymplecticVector::from_letters(std::string_view letters) {
    SymplecticVector v(letters.size());
    for (size_t q = 0; q < letters.size(); q++) {
        Pauli p;
        try {
            p = pauli_from_char(letters[q]);
        } catch (const ParseError &) {
            throw ParseError(std::string("invalid Pauli letter '") + letters[q] + "'", 1, q + 1);
        }
        v.set_letter(q, p);
    }
    return v;
}

void SymplecticVector::set_letter(size_t q, Pauli p) {
    x.set(q, (int)p & 1);
    z.set(q, (int)p & 2);
}

SymplecticVector &SymplecticVector::operator^=(const SymplecticVector &other) {
    x ^= other.x;
    z ^= other.z;
    return *this;
}

bool SymplecticVector::commutes_with(const SymplecticVector &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("commutes_with: qubit count mismatch");
    }
    auto ax = x.words();
    auto az = z.words();
    auto bx = other.x.words();
    auto bz = other.z.words();
    return !kernels::active().symplectic_parity(ax.data(), az.data(), bx.data(), bz.data(), ax.size());
}

size_t SymplecticVector::weight() const {
    size_t w = 0;
    auto xs = x.words();
    auto zs = z.words();
    for (size_t i = 0; i < xs.size(); i++) {
        w += std::popcount(xs[i] | zs[i]);
    }
    return w;
}

std::string SymplecticVector::to_letters() const {
    std::string out(num_qubits(), 'I');
    for (size_t q = 0; q < num_qubits(); q++) {
        out[q] = pauli_char(letter(q));
    }
    return out;
}

std::string SymplecticVector::to_hex() const {
    return x.to_hex() + ":" + z.to_hex();
}

BitVec SymplecticVector::flattened() const {
    size_t n = num_qubits();
    BitVec out(2 * n);
    for (size_t q = 0; q < n; q++) {
        if (x.get(q)) {
            out.set(q, true);
        }
        if (z.get(q)) {
            out.set(n + q, true);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

PauliPoly::PauliPoly(std::vector<Poly> x, std::vector<Poly> z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliPoly: X and Z parts must have the same width");
    }
}

PauliPoly PauliPoly::from_string(std::string_view letters, size_t n) {
    if (n == 0) {
        throw std::invalid_argument("PauliPoly::from_string: block width must be at least 1");
    }
    PauliPoly p(n);
    for (size_t q = 0; q < letters.size(); q++) {
        Pauli l;
        try {
            l = pauli_from_char(letters[q]);
        } catch (const ParseError &) {
            throw ParseError(std::string("invalid Pauli letter '") + letters[q] + "'", 1, q + 1);
        }
        int64_t block = (int64_t)(q / n);
        size_t col = q % n;
        if ((int)l & 1) {
            p.x_[col].set_coeff(block, true);
        }
        if ((int)l & 2) {
            p.z_[col].set_coeff(block, true);
        }
    }
    return p;
}

PauliPoly PauliPoly::from_string(const PauliString &s, size_t n) {
    return from_string(s.dense(), n);
}

int64_t PauliPoly::degree() const {
    int64_t d = -1;
    for (size_t c = 0; c < width(); c++) {
        d = std::max({d, x_[c].degree(), z_[c].degree()});
    }
    return d;
}

bool PauliPoly::is_identity() const {
    return degree() < 0;
}

size_t PauliPoly::support_end() const {
    size_t end = 0;
    for (size_t c = 0; c < width(); c++) {
        int64_t d = std::max(x_[c].degree(), z_[c].degree());
        if (d >= 0) {
            end = std::max(end, (size_t)d * width() + c + 1);
        }
    }
    return end;
}

Pauli PauliPoly::letter(size_t qubit) const {
    size_t n = width();
    int64_t block = (int64_t)(qubit / n);
    size_t col = qubit % n;
    return (Pauli)(x_[col].coeff(block) | (z_[col].coeff(block) << 1));
}

PauliString PauliPoly::to_string() const {
    size_t end = support_end();
    size_t start = 0;
    while (start < end && letter(start) == Pauli::I) {
        start++;
    }
    PauliString s;
    s.offset = end == 0 ? 0 : start;
    for (size_t q = start; q < end; q++) {
        s.ops.push_back(pauli_char(letter(q)));
    }
    return s;
}

std::string PauliPoly::to_letters(size_t num_qubits) const {
    if (support_end() > num_qubits) {
        throw std::out_of_range("PauliPoly::to_letters: support exceeds the requested length");
    }
    std::string out(num_qubits, 'I');
    for (size_t q = 0; q < num_qubits; q++) {
        out[q] = pauli_char(letter(q));
    }
    return out;
}

std::string PauliPoly::to_vector_string() const {
    auto half = [](const std::vector<Poly> &v) {
        bool compact = std::all_of(v.begin(), v.end(), [](const Poly &p) { return p.degree() <= 0; });
        std::string out;
        for (size_t c = 0; c < v.size(); c++) {
            if (c && !compact) {
                out += ',';
            }
            out += v[c].to_string();
        }
        return out;
    };
    return "(" + half(x_) + "|" + half(z_) + ")";
}

// ---------------------------------------------------------------------------

namespace {

void check_widths(const PauliPoly &p, const PauliPoly &q) {
    if (p.width() != q.width()) {
        throw std::invalid_argument(
            "Pauli width mismatch: " + std::to_string(p.width()) + " vs " + std::to_string(q.width()));
    }
}

bool poly_and_parity(const Poly &a, const Poly &b) {
    auto wa = a.words();
    auto wb = b.words();
    size_t n = std::min(wa.size(), wb.size());
    return n && kernels::active().and_parity(wa.data(), wb.data(), n);
}

}  // namespace

PauliPoly delay(const PauliPoly &p, int64_t j) {
    if (j < 0) {
        throw std::invalid_argument("delay: shift must be non-negative");
    }
    PauliPoly out(p.width());
    for (size_t c = 0; c < p.width(); c++) {
        out.x()[c] = p.x()[c].shifted_up(j);
        out.z()[c] = p.z()[c].shifted_up(j);
    }
    return out;
}

PauliPoly multiply(const PauliPoly &p, const PauliPoly &q) {
    check_widths(p, q);
    PauliPoly out = p;
    for (size_t c = 0; c < p.width(); c++) {
        out.x()[c] += q.x()[c];
        out.z()[c] += q.z()[c];
    }
    return out;
}

PauliPoly apply_poly(const Poly &poly, const PauliPoly &a) {
    if (!gen_commute(a, a)) {
        throw std::domain_error("apply_poly: operator does not commute with its own shifts");
    }
    PauliPoly out(a.width());
    for (size_t c = 0; c < a.width(); c++) {
        out.x()[c] = poly * a.x()[c];
        out.z()[c] = poly * a.z()[c];
    }
    return out;
}

bool commute_at(const PauliPoly &p, const PauliPoly &q) {
    check_widths(p, q);
    bool parity = false;
    for (size_t c = 0; c < p.width(); c++) {
        parity ^= poly_and_parity(p.x()[c], q.z()[c]);
        parity ^= poly_and_parity(p.z()[c], q.x()[c]);
    }
    return !parity;
}

Laurent commutation_series(const PauliPoly &p, const PauliPoly &q) {
    check_widths(p, q);
    int64_t d = std::max<int64_t>(q.degree(), 0);
    // Q(1/D) = D^-d * reversed_d(Q)
    Poly acc;
    for (size_t c = 0; c < p.width(); c++) {
        if (!p.x()[c].is_zero() && !q.z()[c].is_zero()) {
            acc += p.x()[c] * q.z()[c].reversed(d);
        }
        if (!p.z()[c].is_zero() && !q.x()[c].is_zero()) {
            acc += p.z()[c] * q.x()[c].reversed(d);
        }
    }
    return Laurent(acc, -d);
}

bool gen_commute(const PauliPoly &p, const PauliPoly &q) {
    return commutation_series(p, q).is_zero();
}

SymplecticVector expand(const PauliPoly &p, int64_t shift, size_t num_qubits) {
    if (shift < 0) {
        throw std::invalid_argument("expand: shift must be non-negative");
    }
    size_t n = p.width();
    SymplecticVector out(num_qubits);
    for (size_t c = 0; c < n; c++) {
        for (int part = 0; part < 2; part++) {
            const Poly &poly = part == 0 ? p.x()[c] : p.z()[c];
            for (int64_t j = 0; j <= poly.degree(); j++) {
                if (!poly.coeff(j)) {
                    continue;
                }
                size_t q = (size_t)(j + shift) * n + c;
                if (q >= num_qubits) {
                    throw std::out_of_range(
                        "expand: operator support exceeds " + std::to_string(num_qubits) + " qubits");
                }
                (part == 0 ? out.x : out.z).set(q, true);
            }
        }
    }
    return out;
}

}  // namespace qconv
