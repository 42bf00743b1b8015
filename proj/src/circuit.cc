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

#include "qconv/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qconv/bits.h"
#include "qconv/errors.h"

namespace qconv {

std::string Circuit::to_text() const {
    std::string out = "qubits " + std::to_string(num_qubits) + "\n";
    for (const Gate &g : gates) {
        out += gate_name(g.kind) + " " + std::to_string(g.a + 1);
        if (g.two_qubit()) {
            out += " " + std::to_string(g.b + 1);
        }
        out += "\n";
    }
    return out;
}

Circuit Circuit::parse_text(std::string_view text) {
    Circuit c;
    bool header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) {
            continue;
        }
        auto read_qubit = [&](const char *what) {
            long long v;
            if (!(ls >> v)) {
                throw ParseError(std::string("missing ") + what, line_no, 1);
            }
            if (v < 1 || (header && (size_t)v > c.num_qubits)) {
                throw ParseError("qubit index " + std::to_string(v) + " out of range", line_no, 1);
            }
            return (size_t)(v - 1);
        };
        if (!header) {
            if (op != "qubits") {
                throw ParseError("circuit must start with \"qubits N\"", line_no, 1);
            }
            long long nq;
            if (!(ls >> nq) || nq < 0) {
                throw ParseError("bad qubit count", line_no, 1);
            }
            c.num_qubits = (size_t)nq;
            header = true;
            continue;
        }
        Gate g{GateKind::H, 0, 0};
        if (op == "H") {
            g.kind = GateKind::H;
        } else if (op == "S") {
            g.kind = GateKind::S;
        } else if (op == "X") {
            g.kind = GateKind::X;
        } else if (op == "Z") {
            g.kind = GateKind::Z;
        } else if (op == "CX") {
            g.kind = GateKind::CX;
        } else if (op == "CY") {
            g.kind = GateKind::CY;
        } else if (op == "CZ") {
            g.kind = GateKind::CZ;
        } else {
            throw ParseError("unknown gate \"" + op + "\"", line_no, 1);
        }
        g.a = read_qubit("qubit");
        if (g.two_qubit()) {
            g.b = read_qubit("target");
            if (g.a == g.b) {
                throw ParseError("control equals target", line_no, 1);
            }
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError("trailing text \"" + extra + "\"", line_no, 1);
        }
        c.gates.push_back(g);
    }
    if (!header) {
        throw ParseError("empty circuit file", line_no, 1);
    }
    return c;
}

size_t Circuit::count(GateKind k) const {
    return (size_t)std::count_if(gates.begin(), gates.end(), [k](const Gate &g) { return g.kind == k; });
}

// ---------------------------------------------------------------------------

namespace {

GateKind controlled(Pauli p) {
    switch (p) {
        case Pauli::X:
            return GateKind::CX;
        case Pauli::Y:
            return GateKind::CY;
        default:
            return GateKind::CZ;
    }
}

// Controlled version of `op` (already shifted) from `ctrl`, skipping the control itself.
void emit_controlled(std::vector<Gate> &out, size_t ctrl, const PauliPoly &op, size_t num_qubits) {
    size_t end = op.support_end();
    if (end > num_qubits) {
        throw std::domain_error("operator does not fit in the encoded stream");
    }
    for (size_t t = 0; t < end; t++) {
        Pauli p = op.letter(t);
        if (p != Pauli::I && t != ctrl) {
            out.push_back({controlled(p), ctrl, t});
        }
    }
}

// inverse[i][i']: generator i as a Laurent combination of standard rows i'.
std::vector<std::vector<Laurent>> inverse_combination(const StandardForm &sf) {
    size_t nk = sf.n - sf.k;
    std::vector<std::vector<Laurent>> inv(nk, std::vector<Laurent>(nk));
    for (size_t i = 0; i < nk; i++) {
        inv[i][i] = Laurent::monomial(0);
    }
    for (const ElimOp &op : sf.row_log) {
        switch (op.kind) {
            case ElimOp::Kind::AddMultiple: {
                Laurent f = Laurent::from_poly(op.factor);
                for (auto &row : inv) {
                    row[op.b] += f * row[op.a];
                }
                break;
            }
            case ElimOp::Kind::ScaleRow:
                for (auto &row : inv) {
                    row[op.a] = row[op.a].shifted(-op.shift);
                }
                break;
            case ElimOp::Kind::SwapRows:
                for (auto &row : inv) {
                    std::swap(row[op.a], row[op.b]);
                }
                break;
            case ElimOp::Kind::SwapCols:
                break;
        }
    }
    return inv;
}

// Prepends X flips on ancillas so that every in-range generator is a +1
// stabilizer, and Z on information qubits so that each X maps to +X-bar. Each
// flip is placed before the first gate on its qubit.
void fix_signs(Circuit &circ, const CodeSpec &c, const LogicalOps &lo, size_t steps) {
    size_t nq = circ.num_qubits;
    Tableau t(nq);
    for (const Gate &g : circ.gates) {
        t.apply(g);
    }
    BitMatrix eqs(nq);
    std::vector<bool> rhs;
    for (size_t j = 0; j < steps; j++) {
        for (size_t i = 0; i < c.gens.size(); i++) {
            if (c.gens[i].support_end() + j * c.n > nq) {
                continue;
            }
            Tableau::Membership m = t.decompose(PhasedPauli(expand(c.gens[i], (int64_t)j, nq), c.signs[i]));
            if (!m.in_group) {
                continue;
            }
            BitVec row(nq);
            for (size_t a : m.rows) {
                row.set(a, true);
            }
            eqs.push_row(std::move(row));
            rhs.push_back(m.sign < 0);
        }
    }
    for (const InfoQubit &iq : circ.layout) {
        BitVec row(nq);
        row.set(iq.qubit, true);
        eqs.push_row(std::move(row));
        rhs.push_back(false);
    }
    BitVec b(rhs.size());
    for (size_t k = 0; k < rhs.size(); k++) {
        b.set(k, rhs[k]);
    }
    std::optional<BitVec> flips = solve(eqs, b);
    if (!flips) {
        return;
    }
    std::vector<Gate> out;
    std::vector<bool> pending(nq, false), touched(nq, false);
    for (const Gate &g : circ.gates) {
        touched[g.a] = true;
        touched[g.b] = touched[g.b] || g.two_qubit();
    }
    std::vector<GateKind> kind(nq, GateKind::X);
    for (size_t a = 0; a < nq; a++) {
        pending[a] = flips->get(a);
    }
    // A Z on an information qubit negates only its X-bar image.
    for (const InfoQubit &iq : circ.layout) {
        PhasedPauli xbar(expand(lo.xbar[iq.r], (int64_t)(iq.s + circ.lambda), nq), 1);
        Tableau::Membership m = t.decompose(t.destabilizer(iq.qubit) * xbar);
        bool negative = m.sign < 0;
        for (size_t a : m.rows) {
            negative ^= flips->get(a);
        }
        if (m.in_group && negative) {
            pending[iq.qubit] = true;
            kind[iq.qubit] = GateKind::Z;
        }
    }
    for (size_t a = 0; a < nq; a++) {
        if (pending[a] && !touched[a]) {
            out.push_back({kind[a], a, 0});
            pending[a] = false;
        }
    }
    auto touch = [&](size_t a) {
        if (pending[a]) {
            out.push_back({kind[a], a, 0});
            pending[a] = false;
        }
    };
    for (const Gate &g : circ.gates) {
        touch(g.a);
        if (g.two_qubit()) {
            touch(g.b);
        }
        out.push_back(g);
    }
    circ.gates = std::move(out);
}

}  // namespace

Circuit build_encoder(const CodeSpec &c, const StandardForm &sf, const LogicalOps &lo, size_t q, bool simplify) {
    if (q == 0) {
        throw std::invalid_argument("build_encoder: q must be at least 1");
    }
    if (!sf.diagonal_ok) {
        throw std::domain_error("build_encoder: standard form is not diagonal");
    }
    size_t n = c.n, nk = c.n - c.k, r = sf.r;
    size_t lambda = (size_t)std::max<int64_t>(lo.lambda, 0);
    size_t steps = q + lambda;

    // Standard row i is projected at shifts [0, last_shift[i]]: every in-range
    // generator must be a combination of projected rows.
    std::vector<PauliPoly> rows;
    for (size_t i = 0; i < nk; i++) {
        rows.push_back(sf.row(i));
    }
    std::vector<size_t> last_shift(nk, steps - 1);
    auto inv = inverse_combination(sf);
    for (size_t i = 0; i < nk; i++) {
        for (size_t ip = 0; ip < nk; ip++) {
            if (!inv[i][ip].is_zero() && inv[i][ip].max_exponent() > 0) {
                last_shift[ip] = std::max(last_shift[ip], steps - 1 + (size_t)inv[i][ip].max_exponent());
            }
        }
    }
    size_t max_step = *std::max_element(last_shift.begin(), last_shift.end()) + 1;

    // The stream holds q + lambda + ceil(m/n) blocks, grown when an operator would not fit.
    size_t needed = n * (q + lambda + c.overlap_blocks());
    for (size_t i = 0; i < nk; i++) {
        needed = std::max(needed, delay(rows[i], (int64_t)last_shift[i]).support_end());
    }
    for (size_t a = 0; a < c.k; a++) {
        size_t last = q - 1 + lambda;
        needed = std::max(needed, delay(lo.xbar[a], (int64_t)last).support_end());
        needed = std::max(needed, (last + lo.info_blocks[a]) * n + lo.info_columns[a] + 1);
    }

    Circuit circ;
    circ.n = n;
    circ.q = q;
    circ.lambda = lambda;
    circ.block_count = (needed + n - 1) / n;
    circ.num_qubits = n * circ.block_count;
    size_t nq = circ.num_qubits;

    // Information qubits and their X-bar operators.
    struct Pending {
        size_t ctrl;
        PauliPoly op;
    };
    std::vector<Pending> xbars;
    for (size_t s = 0; s < q; s++) {
        for (size_t a = 0; a < c.k; a++) {
            size_t block = s + lambda + lo.info_blocks[a];
            size_t qubit = block * n + lo.info_columns[a];
            circ.layout.push_back({s, a, qubit});
            PauliPoly op = delay(lo.xbar[a], (int64_t)(s + lambda));
            if (op.letter(qubit) != Pauli::X) {
                throw std::logic_error("X-bar has no X factor at its information qubit");
            }
            xbars.push_back({qubit, std::move(op)});
        }
    }

    // A controlled X-bar is emitted just before the first row projection that
    // touches its information qubit.
    std::vector<Gate> &g = circ.gates;
    std::vector<bool> emitted(xbars.size(), false);
    for (size_t j = 0; j < max_step; j++) {
        for (size_t i = 0; i < r; i++) {
            if (j > last_shift[i]) {
                continue;
            }
            PauliPoly op = delay(rows[i], (int64_t)j);
            size_t ctrl = (j + (size_t)sf.A.at(i, i).degree()) * n + sf.col_perm[i];
            if (op.support_end() > nq) {
                throw std::domain_error("standard row does not fit in the encoded stream");
            }
            Pauli at = op.letter(ctrl);
            if (at != Pauli::X && at != Pauli::Y) {
                throw std::logic_error("standard row has no X factor at its control qubit");
            }
            for (size_t x = 0; x < xbars.size(); x++) {
                if (!emitted[x] && op.letter(xbars[x].ctrl) != Pauli::I) {
                    emit_controlled(g, xbars[x].ctrl, xbars[x].op, nq);
                    emitted[x] = true;
                }
            }
            g.push_back({GateKind::H, ctrl, 0});
            if (at == Pauli::Y) {
                g.push_back({GateKind::S, ctrl, 0});
            }
            if (sf.signs[i] < 0) {
                g.push_back({GateKind::Z, ctrl, 0});
            }
            emit_controlled(g, ctrl, op, nq);
        }
    }
    for (size_t x = 0; x < xbars.size(); x++) {
        if (!emitted[x]) {
            emit_controlled(g, xbars[x].ctrl, xbars[x].op, nq);
        }
    }
    if (std::any_of(sf.signs.begin() + (ptrdiff_t)r, sf.signs.end(), [](int v) { return v < 0; })) {
        fix_signs(circ, c, lo, steps);
    }
    return simplify ? simplify_circuit(circ) : circ;
}

Circuit simplify_circuit(const Circuit &circ) {
    Circuit out = circ;
    out.gates.clear();
    std::vector<bool> zero(circ.num_qubits, true);
    for (const InfoQubit &iq : circ.layout) {
        zero[iq.qubit] = false;
    }
    if (circ.n == 0) {
        // Without a layout every qubit may carry data.
        std::fill(zero.begin(), zero.end(), false);
    }
    for (const Gate &g : circ.gates) {
        switch (g.kind) {
            case GateKind::CZ:
                if (zero[g.a] || zero[g.b]) {
                    continue;
                }
                break;
            case GateKind::Z:
                if (zero[g.a]) {
                    continue;
                }
                break;
            case GateKind::H:
            case GateKind::X:
                zero[g.a] = false;
                break;
            case GateKind::CX:
            case GateKind::CY:
                if (!zero[g.a]) {
                    zero[g.b] = false;
                }
                break;
            case GateKind::S:
                break;
        }
        out.gates.push_back(g);
    }
    return out;
}

// ---------------------------------------------------------------------------

VerifyReport verify_encoder(const Circuit &circ, const CodeSpec &c, const LogicalOps &lo, size_t q) {
    VerifyReport rep;
    size_t nq = circ.num_qubits;
    size_t n = c.n;
    size_t lambda = (size_t)std::max<int64_t>(lo.lambda, 0);
    Tableau t(nq);
    for (const Gate &g : circ.gates) {
        t.apply(g);
    }
    rep.symplectic_ok = t.symplectic_ok();
    if (!rep.symplectic_ok) {
        rep.ok = false;
        rep.failures.push_back("tableau lost its symplectic structure");
    }

    std::vector<bool> info(nq, false);
    for (const InfoQubit &iq : circ.layout) {
        info[iq.qubit] = true;
    }
    auto in_code_group = [&](const PhasedPauli &p) {
        Tableau::Membership m = t.decompose(p);
        if (!m.in_group || m.sign != 1) {
            return false;
        }
        return std::none_of(m.rows.begin(), m.rows.end(), [&](size_t row) { return info[row]; });
    };

    for (size_t j = 0; j < q + lambda; j++) {
        for (size_t i = 0; i < c.gens.size(); i++) {
            rep.generator_checks++;
            bool ok = false;
            if (c.gens[i].support_end() + j * n <= nq) {
                ok = in_code_group(PhasedPauli(expand(c.gens[i], (int64_t)j, nq), c.signs[i]));
            }
            if (!ok) {
                rep.generator_failures++;
                rep.failures.push_back("generator M_" + std::to_string(j) + "," + std::to_string(i + 1) +
                                       " is not a +1 stabilizer of the output");
            }
        }
    }

    for (const InfoQubit &iq : circ.layout) {
        rep.logical_checks++;
        PhasedPauli xbar(expand(lo.xbar[iq.r], (int64_t)(iq.s + lambda), nq), 1);
        PhasedPauli img = t.destabilizer(iq.qubit);
        if (!in_code_group(img * xbar)) {
            rep.logical_failures++;
            rep.failures.push_back("information X at qubit " + std::to_string(iq.qubit + 1) +
                                   " does not map to its X-bar");
        }
    }

    if (n > 0) {
        size_t reach = 0;
        bool any = false;
        for (const Gate &g : circ.gates) {
            size_t lo_b = g.a / n, hi_b = g.a / n;
            if (g.two_qubit()) {
                lo_b = std::min(lo_b, g.b / n);
                hi_b = std::max(hi_b, g.b / n);
            }
            reach = any ? std::max(reach, hi_b) : hi_b;
            any = true;
            rep.max_reach = std::max(rep.max_reach, reach - lo_b);
        }
        rep.online_ok = rep.max_reach <= lambda + 1;
        if (!rep.online_ok) {
            rep.failures.push_back("a gate reaches back " + std::to_string(rep.max_reach) + " blocks (limit " +
                                   std::to_string(lambda + 1) + ")");
        }
    }
    rep.ok = rep.symplectic_ok && rep.generator_failures == 0 && rep.logical_failures == 0 && rep.online_ok;
    return rep;
}

}  // namespace qconv
