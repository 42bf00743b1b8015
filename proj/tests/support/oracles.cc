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
#include "oracles.h"

#include <algorithm>

#include "qconv/bits.h"
#include <cmath>

namespace qconv::oracle {

Dense Dense::identity(size_t dim) {
    Dense d(dim);
    for (size_t i = 0; i < dim; i++) {
        d.at(i, i) = 1.0;
    }
    return d;
}

Dense Dense::operator*(const Dense &o) const {
    Dense out(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t k = 0; k < dim; k++) {
            Complex v = at(r, k);
            if (v == Complex(0.0)) {
                continue;
            }
            for (size_t c = 0; c < dim; c++) {
                out.at(r, c) += v * o.at(k, c);
            }
        }
    }
    return out;
}

Dense Dense::adjoint() const {
    Dense out(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

bool Dense::approx_equal(const Dense &o, double tol) const {
    if (dim != o.dim) {
        return false;
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (std::abs(a[i] - o.a[i]) > tol) {
            return false;
        }
    }
    return true;
}

namespace {

Dense kron(const Dense &x, const Dense &y) {
    Dense out(x.dim * y.dim);
    for (size_t r1 = 0; r1 < x.dim; r1++) {
        for (size_t c1 = 0; c1 < x.dim; c1++) {
            for (size_t r2 = 0; r2 < y.dim; r2++) {
                for (size_t c2 = 0; c2 < y.dim; c2++) {
                    out.at(r1 * y.dim + r2, c1 * y.dim + c2) = x.at(r1, c1) * y.at(r2, c2);
                }
            }
        }
    }
    return out;
}

Dense single(Pauli p) {
    const Complex i(0.0, 1.0);
    Dense d(2);
    switch (p) {
        case Pauli::I:
            d.at(0, 0) = 1.0;
            d.at(1, 1) = 1.0;
            break;
        case Pauli::X:
            d.at(0, 1) = 1.0;
            d.at(1, 0) = 1.0;
            break;
        case Pauli::Y:
            d.at(0, 1) = -i;
            d.at(1, 0) = i;
            break;
        case Pauli::Z:
            d.at(0, 0) = 1.0;
            d.at(1, 1) = -1.0;
            break;
    }
    return d;
}

// Applies a 1-qubit matrix to qubit q.
Dense embed1(const Dense &u, size_t q, size_t n) {
    Dense out = Dense::identity(1);
    for (size_t k = 0; k < n; k++) {
        out = kron(out, k == q ? u : Dense::identity(2));
    }
    return out;
}

// Controlled-u with control a and target b, built basis state by basis state.
Dense controlled(const Dense &u, size_t a, size_t b, size_t n) {
    size_t dim = size_t{1} << n;
    Dense out(dim);
    auto bit = [&](size_t idx, size_t q) { return (idx >> (n - 1 - q)) & 1; };
    for (size_t col = 0; col < dim; col++) {
        if (!bit(col, a)) {
            out.at(col, col) = 1.0;
            continue;
        }
        size_t tb = bit(col, b);
        for (size_t nb = 0; nb < 2; nb++) {
            size_t row = (col & ~(size_t{1} << (n - 1 - b))) | (nb << (n - 1 - b));
            out.at(row, col) = u.at(nb, tb);
        }
    }
    return out;
}

}  // namespace

Dense dense_pauli(const PhasedPauli &p) {
    Dense out = Dense::identity(1);
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out = kron(out, single(p.v.letter(q)));
    }
    const Complex phases[4] = {1.0, Complex(0.0, 1.0), -1.0, Complex(0.0, -1.0)};
    for (auto &v : out.a) {
        v *= phases[p.phase & 3];
    }
    return out;
}

Dense dense_gate(const Gate &g, size_t n) {
    const double r = 1.0 / std::sqrt(2.0);
    Dense h(2);
    h.at(0, 0) = r;
    h.at(0, 1) = r;
    h.at(1, 0) = r;
    h.at(1, 1) = -r;
    Dense s(2);
    s.at(0, 0) = 1.0;
    s.at(1, 1) = Complex(0.0, 1.0);
    switch (g.kind) {
        case GateKind::H:
            return embed1(h, g.a, n);
        case GateKind::S:
            return embed1(s, g.a, n);
        case GateKind::X:
            return embed1(single(Pauli::X), g.a, n);
        case GateKind::Z:
            return embed1(single(Pauli::Z), g.a, n);
        case GateKind::CX:
            return controlled(single(Pauli::X), g.a, g.b, n);
        case GateKind::CY:
            return controlled(single(Pauli::Y), g.a, g.b, n);
        case GateKind::CZ:
            return controlled(single(Pauli::Z), g.a, g.b, n);
    }
    return Dense::identity(size_t{1} << n);
}

Poly naive_mul(const Poly &a, const Poly &b) {
    Poly out;
    for (int64_t i = 0; i <= a.degree(); i++) {
        if (!a.coeff(i)) {
            continue;
        }
        for (int64_t j = 0; j <= b.degree(); j++) {
            if (b.coeff(j)) {
                out.set_coeff(i + j, !out.coeff(i + j));
            }
        }
    }
    return out;
}

bool shifted_anticommute(const PauliPoly &p, int64_t r, const PauliPoly &q, int64_t s) {
    size_t n = p.width();
    auto letter = [n](const PauliPoly &op, int64_t shift, int64_t qubit) -> unsigned {
        int64_t block = qubit / (int64_t)n - shift;
        int64_t col = qubit % (int64_t)n;
        if (block < 0) {
            return 0;
        }
        unsigned x = op.x()[col].coeff(block) ? 1 : 0;
        unsigned z = op.z()[col].coeff(block) ? 2 : 0;
        return x | z;
    };
    int64_t end = (int64_t)n * (std::max(p.degree() + r, q.degree() + s) + 1);
    bool par = false;
    for (int64_t k = 0; k < end; k++) {
        unsigned a = letter(p, r, k), b = letter(q, s, k);
        par ^= a != 0 && b != 0 && a != b;
    }
    return par;
}

Poly random_poly(std::mt19937_64 &rng, int64_t max_deg) {
    Poly p;
    for (int64_t k = 0; k <= max_deg; k++) {
        if (rng() & 1) {
            p.set_coeff(k, true);
        }
    }
    return p;
}

PauliPoly random_pauli_poly(std::mt19937_64 &rng, size_t n, int64_t max_deg) {
    std::vector<Poly> x(n), z(n);
    for (size_t c = 0; c < n; c++) {
        x[c] = random_poly(rng, max_deg);
        z[c] = random_poly(rng, max_deg);
    }
    return PauliPoly(std::move(x), std::move(z));
}

SymplecticVector random_symplectic(std::mt19937_64 &rng, size_t num_qubits) {
    SymplecticVector v(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        v.set_letter(q, (Pauli)(rng() & 3));
    }
    return v;
}

std::string example_path(const std::string &name) {
    return std::string(QCONV_SOURCE_DIR) + "/examples/" + name;
}

CodeSpec qcc5() {
    return CodeSpec::from_strings(5, 1, 2, {"ZXXZIII", "IZXXZII", "IIZXXZI", "IIIZXXZ"});
}

CodeSpec qcc5_y() {
    CodeSpec c = CodeSpec::from_strings(5, 1, 2, {"ZYYZIII", "IZYYZII", "IIZYYZI", "IIIZYYZ"});
    c.signs = {-1, 1, -1, -1};
    return c;
}

CodeSpec catastrophic21() {
    return CodeSpec::from_strings(2, 1, 1, {"ZZZ"});
}

CodeSpec random_equivalent_code(std::mt19937_64 &rng, const CodeSpec &base) {
    size_t n = base.n;
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; i++) {
        perm[i] = i;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    // Each of the six permutations of {X, Z, Y} preserves commutation.
    static const Pauli kMaps[6][3] = {
        {Pauli::X, Pauli::Z, Pauli::Y}, {Pauli::X, Pauli::Y, Pauli::Z}, {Pauli::Z, Pauli::X, Pauli::Y},
        {Pauli::Z, Pauli::Y, Pauli::X}, {Pauli::Y, Pauli::X, Pauli::Z}, {Pauli::Y, Pauli::Z, Pauli::X},
    };
    std::vector<size_t> relabel(n);
    for (auto &r : relabel) {
        r = rng() % 6;
    }
    auto map = [&](Pauli p, size_t col) {
        switch (p) {
            case Pauli::X:
                return kMaps[relabel[col]][0];
            case Pauli::Z:
                return kMaps[relabel[col]][1];
            case Pauli::Y:
                return kMaps[relabel[col]][2];
            default:
                return Pauli::I;
        }
    };
    size_t len = n + base.m;
    std::vector<std::string> gens;
    size_t end = n;
    for (const auto &g : base.gens) {
        std::string in = g.to_letters(len), out(2 * n, 'I');
        for (size_t q = 0; q < len; q++) {
            size_t dst = (q / n) * n + perm[q % n];
            out[dst] = pauli_char(map(pauli_from_char(in[q]), perm[q % n]));
            if (in[q] != 'I') {
                end = std::max(end, dst + 1);
            }
        }
        gens.push_back(out);
    }
    for (auto &g : gens) {
        g.resize(end);
    }
    CodeSpec c = CodeSpec::from_strings(n, base.k, end - n, gens);
    for (auto &s : c.signs) {
        s = (rng() & 1) ? 1 : -1;
    }
    return c;
}

namespace {

std::vector<SymplecticVector> window_rows(const std::vector<PauliPoly> &ops, size_t N, size_t blocks) {
    std::vector<SymplecticVector> rows;
    for (const PauliPoly &p : ops) {
        for (size_t s = 0; s <= blocks; s++) {
            if (delay(p, (int64_t)s).support_end() <= N) {
                rows.push_back(expand(p, (int64_t)s, N));
            }
        }
    }
    return rows;
}

bool spans_all(const std::vector<SymplecticVector> &rows, const std::vector<PauliPoly> &ops, size_t N, int64_t mid) {
    BitMatrix m(2 * N);
    for (const auto &r : rows) {
        m.push_row(r.flattened());
    }
    Echelon e = rref(m);
    for (const PauliPoly &p : ops) {
        if (!in_span(e, expand(p, mid, N).flattened())) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool mutual_span(const std::vector<PauliPoly> &a, const std::vector<PauliPoly> &b, size_t n, size_t blocks) {
    const size_t N = n * blocks;
    const int64_t mid = (int64_t)blocks / 2 - 1;
    return spans_all(window_rows(b, N, blocks), a, N, mid) && spans_all(window_rows(a, N, blocks), b, N, mid);
}

}  // namespace qconv::oracle
