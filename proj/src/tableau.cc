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

#include "qconv/tableau.h"

#include <bit>
#include <stdexcept>

#include "qconv/errors.h"

namespace qconv {

PhasedPauli PhasedPauli::parse(std::string_view text) {
    int sign = 1;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        sign = text.front() == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    return PhasedPauli(SymplecticVector::from_letters(text), sign);
}

int PhasedPauli::sign() const {
    if (!hermitian()) {
        throw std::logic_error("PhasedPauli::sign: operator has an imaginary phase");
    }
    return phase == 0 ? 1 : -1;
}

PhasedPauli &PhasedPauli::operator*=(const PhasedPauli &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("PhasedPauli: qubit count mismatch");
    }
    auto x1 = v.x.words();
    auto z1 = v.z.words();
    auto x2 = rhs.v.x.words();
    auto z2 = rhs.v.z.words();
    int64_t acc = 0;
    for (size_t i = 0; i < x1.size(); i++) {
        uint64_t y1 = x1[i] & z1[i], xo1 = x1[i] & ~z1[i], zo1 = z1[i] & ~x1[i];
        uint64_t y2 = x2[i] & z2[i], xo2 = x2[i] & ~z2[i], zo2 = z2[i] & ~x2[i];
        // XY = iZ, YZ = iX, ZX = iY and the reverse orders give -i.
        uint64_t plus = (xo1 & y2) | (y1 & zo2) | (zo1 & xo2);
        uint64_t minus = (y1 & xo2) | (zo1 & y2) | (xo1 & zo2);
        acc += std::popcount(plus) - std::popcount(minus);
    }
    phase = (uint8_t)(((int64_t)phase + (int64_t)rhs.phase + acc) & 3);
    v ^= rhs.v;
    return *this;
}

std::string PhasedPauli::to_string() const {
    static const char *kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase & 3];
    for (size_t q = 0; q < num_qubits(); q++) {
        Pauli p = v.letter(q);
        out += p == Pauli::I ? '_' : pauli_char(p);
    }
    return out;
}

std::string gate_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::CX:
            return "CX";
        case GateKind::CY:
            return "CY";
        case GateKind::CZ:
            return "CZ";
    }
    return "?";
}

// ---------------------------------------------------------------------------

namespace {

struct RowRef {
    PhasedPauli &p;

    bool x(size_t q) const {
        return p.v.x.get(q);
    }
    bool z(size_t q) const {
        return p.v.z.get(q);
    }
    void flip_sign(bool f) {
        if (f) {
            p.phase ^= 2;
        }
    }
    void h(size_t a) {
        bool xa = x(a), za = z(a);
        flip_sign(xa && za);
        p.v.x.set(a, za);
        p.v.z.set(a, xa);
    }
    void s(size_t a) {
        bool xa = x(a), za = z(a);
        flip_sign(xa && za);
        p.v.z.set(a, za ^ xa);
    }
    void cx(size_t c, size_t t) {
        bool xc = x(c), zc = z(c), xt = x(t), zt = z(t);
        flip_sign(xc && zt && !(xt ^ zc));
        p.v.x.set(t, xt ^ xc);
        p.v.z.set(c, zc ^ zt);
    }
    void apply(const Gate &g) {
        switch (g.kind) {
            case GateKind::H:
                h(g.a);
                break;
            case GateKind::S:
                s(g.a);
                break;
            case GateKind::X:
                flip_sign(z(g.a));
                break;
            case GateKind::Z:
                flip_sign(x(g.a));
                break;
            case GateKind::CX:
                cx(g.a, g.b);
                break;
            case GateKind::CZ:
                h(g.b);
                cx(g.a, g.b);
                h(g.b);
                break;
            case GateKind::CY:
                // CY = S_t CX S_t^dagger; conjugation applies S^dagger = S^3 first.
                s(g.b);
                s(g.b);
                s(g.b);
                cx(g.a, g.b);
                s(g.b);
                break;
        }
    }
};

}  // namespace

Tableau::Tableau(size_t num_qubits) : n_(num_qubits) {
    destab_.reserve(n_);
    stab_.reserve(n_);
    for (size_t q = 0; q < n_; q++) {
        PhasedPauli d(n_), s(n_);
        d.v.x.set(q, true);
        s.v.z.set(q, true);
        destab_.push_back(std::move(d));
        stab_.push_back(std::move(s));
    }
}

void Tableau::check(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("gate qubit " + std::to_string(q + 1) + " outside 1.." + std::to_string(n_));
    }
}

void Tableau::apply(const Gate &g) {
    check(g.a);
    if (g.two_qubit()) {
        check(g.b);
        if (g.a == g.b) {
            throw std::invalid_argument("controlled gate with identical control and target");
        }
    }
    for (size_t q = 0; q < n_; q++) {
        RowRef{destab_[q]}.apply(g);
        RowRef{stab_[q]}.apply(g);
    }
}

PhasedPauli Tableau::conjugate(const PhasedPauli &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Tableau::conjugate: qubit count mismatch");
    }
    PhasedPauli out(n_);
    out.phase = p.phase;
    for (size_t q = 0; q < n_; q++) {
        bool x = p.v.x.get(q), z = p.v.z.get(q);
        if (x && z) {
            // Y = i X Z
            out.phase = (uint8_t)((out.phase + 1) & 3);
        }
        if (x) {
            out *= destab_[q];
        }
        if (z) {
            out *= stab_[q];
        }
    }
    return out;
}

Tableau::Membership Tableau::decompose(const PhasedPauli &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Tableau::decompose: qubit count mismatch");
    }
    Membership m;
    for (size_t q = 0; q < n_; q++) {
        if (!p.v.commutes_with(stab_[q].v)) {
            return m;
        }
    }
    PhasedPauli prod(n_);
    for (size_t q = 0; q < n_; q++) {
        if (!p.v.commutes_with(destab_[q].v)) {
            m.rows.push_back(q);
            prod *= stab_[q];
        }
    }
    if (!(prod.v == p.v)) {
        throw std::logic_error("Tableau::decompose: tableau is not a symplectic basis");
    }
    int rel = (p.phase - prod.phase) & 3;
    if (rel & 1) {
        return m;
    }
    m.in_group = true;
    m.sign = rel == 0 ? 1 : -1;
    return m;
}

bool Tableau::symplectic_ok() const {
    for (size_t a = 0; a < n_; a++) {
        if (!destab_[a].hermitian() || !stab_[a].hermitian()) {
            return false;
        }
        for (size_t b = 0; b < n_; b++) {
            bool expect_anti = a == b;
            if (destab_[a].v.commutes_with(stab_[b].v) == expect_anti) {
                return false;
            }
            if (!stab_[a].v.commutes_with(stab_[b].v) || !destab_[a].v.commutes_with(destab_[b].v)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qconv
