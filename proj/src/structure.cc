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

#include "qconv/structure.h"

#include <algorithm>
#include <stdexcept>

#include "qconv/errors.h"
#include "qconv/tableau.h"

namespace qconv {

PolyMatrix StandardForm::matrix() const {
    size_t rows = x.rows();
    PolyMatrix out(rows, 2 * n);
    for (size_t i = 0; i < rows; i++) {
        for (size_t c = 0; c < n; c++) {
            out.at(i, c) = x.at(i, c);
            out.at(i, n + c) = z.at(i, c);
        }
    }
    return out;
}

PauliPoly StandardForm::row(size_t i) const {
    PauliPoly p(n);
    for (size_t c = 0; c < n; c++) {
        p.x()[col_perm[c]] = x.at(i, c);
        p.z()[col_perm[c]] = z.at(i, c);
    }
    return p;
}

int64_t StandardForm::max_row_degree() const {
    int64_t d = -1;
    for (size_t i = 0; i < x.rows(); i++) {
        d = std::max(d, row(i).degree());
    }
    return d;
}

namespace {

void replay_laurent(std::span<const ElimOp> log, std::vector<std::vector<Laurent>> &t) {
    for (const ElimOp &op : log) {
        switch (op.kind) {
            case ElimOp::Kind::AddMultiple: {
                Laurent f = Laurent::from_poly(op.factor);
                for (size_t g = 0; g < t[op.a].size(); g++) {
                    t[op.a][g] += f * t[op.b][g];
                }
                break;
            }
            case ElimOp::Kind::ScaleRow:
                for (Laurent &e : t[op.a]) {
                    e = e.shifted(op.shift);
                }
                break;
            case ElimOp::Kind::SwapRows:
                std::swap(t[op.a], t[op.b]);
                break;
            case ElimOp::Kind::SwapCols:
                break;
        }
    }
}

// Sign of the product of signed, shifted generators named by one combination row.
int combination_sign(const CodeSpec &c, const std::vector<Laurent> &combo, const PauliPoly &expected) {
    int64_t lo = 0, hi = 0;
    bool any = false;
    for (const Laurent &l : combo) {
        if (l.is_zero()) {
            continue;
        }
        lo = any ? std::min(lo, l.min_exponent()) : l.min_exponent();
        hi = any ? std::max(hi, l.max_exponent()) : l.max_exponent();
        any = true;
    }
    if (!any) {
        throw std::logic_error("standard form row is an empty combination");
    }
    int64_t span = hi - lo + 1 + (int64_t)c.overlap_blocks() + 1;
    int64_t top = std::max<int64_t>(expected.degree(), 0) - lo + 1;
    size_t nq = (size_t)std::max(span, top) * c.n;
    PhasedPauli prod(nq);
    for (size_t g = 0; g < combo.size(); g++) {
        const Laurent &l = combo[g];
        for (int64_t e = lo; !l.is_zero() && e <= l.max_exponent(); e++) {
            if (l.coeff(e)) {
                prod *= PhasedPauli(expand(c.gens[g], e - lo, nq), c.signs[g]);
            }
        }
    }
    // The product must reproduce the standard row placed at block offset -lo.
    PauliPoly moved(expected.width());
    for (size_t col = 0; col < expected.width(); col++) {
        moved.x()[col] = expected.x()[col].shifted_up(-lo);
        moved.z()[col] = expected.z()[col].shifted_up(-lo);
    }
    SymplecticVector want = expand(moved, 0, nq);
    if (!(want == prod.v)) {
        throw std::logic_error("standard form combination does not reproduce its row");
    }
    return prod.sign();
}

struct Rat {
    Laurent num;
    Poly den = Poly::one();

    void reduce() {
        if (num.is_zero()) {
            den = Poly::one();
            return;
        }
        Poly g = gcd(num.body(), den);
        if (!g.is_one()) {
            num = Laurent(divmod(num.body(), g).quotient, num.shift());
            den = divmod(den, g).quotient;
        }
    }
    friend Rat operator+(const Rat &a, const Rat &b) {
        if (a.num.is_zero()) {
            return b;
        }
        if (b.num.is_zero()) {
            return a;
        }
        Rat out{a.num * Laurent::from_poly(b.den) + b.num * Laurent::from_poly(a.den), a.den * b.den};
        out.reduce();
        return out;
    }
    friend Rat operator*(const Rat &a, const Rat &b) {
        Rat out{a.num * b.num, a.den * b.den};
        out.reduce();
        return out;
    }
};

// p(1/D) as a Laurent series.
Rat rev(const Poly &p) {
    return Rat{Laurent::from_poly(p).reversed(), Poly::one()};
}

// 1 / p(1/D). With p = D^v p0 and d0 = deg p0: D^(v + d0) / rev(p0).
Rat inv_rev(const Poly &p) {
    if (p.is_zero()) {
        throw std::domain_error("division by a zero diagonal entry");
    }
    int64_t v = p.valuation();
    Poly p0 = p.shifted_down(v);
    int64_t d0 = p0.degree();
    Rat out{Laurent::monomial(v + d0), p0.reversed(d0)};
    out.reduce();
    return out;
}

// Multiplies a rational by a polynomial that its denominator divides.
Laurent clear(const Rat &r, const Poly &lambda) {
    if (r.num.is_zero()) {
        return Laurent();
    }
    DivMod qr = divmod(lambda, r.den);
    if (!qr.remainder.is_zero()) {
        throw std::logic_error("conditioning polynomial does not clear a denominator");
    }
    return r.num * Laurent::from_poly(qr.quotient);
}

// Assembles a standard-order operator into physical order after applying D^shift.
PauliPoly to_physical(
    const StandardForm &sf, const std::vector<Laurent> &xs, const std::vector<Laurent> &zs, int64_t shift) {
    PauliPoly p(sf.n);
    for (size_t c = 0; c < sf.n; c++) {
        p.x()[sf.col_perm[c]] = xs[c].shifted(shift).to_poly();
        p.z()[sf.col_perm[c]] = zs[c].shifted(shift).to_poly();
    }
    return p;
}

int64_t row_shift(const std::vector<Laurent> &xs, const std::vector<Laurent> &zs) {
    std::vector<Laurent> all = xs;
    all.insert(all.end(), zs.begin(), zs.end());
    return laurent_group_shift(all);
}

void require_diagonal(const StandardForm &sf) {
    if (!sf.diagonal_ok) {
        throw std::domain_error("standard form is not diagonal; encoded operators are unavailable");
    }
}

// Standard-order X-bar rows (Laurent) for the given conditioning polynomial.
void xbar_laurent(
    const StandardForm &sf,
    const Poly &lambda,
    std::vector<std::vector<Rat>> &u2,
    std::vector<std::vector<Rat>> &v1,
    std::vector<std::vector<Laurent>> *xs,
    std::vector<std::vector<Laurent>> *zs) {
    size_t r = sf.r, nk = sf.n - sf.k, kk = sf.k;
    if (!xs) {
        return;
    }
    xs->assign(kk, std::vector<Laurent>(sf.n));
    zs->assign(kk, std::vector<Laurent>(sf.n));
    for (size_t a = 0; a < kk; a++) {
        for (size_t b = 0; b < nk - r; b++) {
            (*xs)[a][r + b] = clear(u2[a][b], lambda);
        }
        (*xs)[a][nk + a] = Laurent::from_poly(lambda);
        for (size_t c = 0; c < r; c++) {
            (*zs)[a][c] = clear(v1[a][c], lambda);
        }
    }
}

int64_t max_degree(const std::vector<PauliPoly> &ops) {
    int64_t d = 0;
    for (const PauliPoly &p : ops) {
        d = std::max(d, p.degree());
    }
    return d;
}

}  // namespace

StandardForm standard_form(const CodeSpec &c) {
    ValidationReport rep = validate(c);
    if (!rep.ok) {
        throw std::invalid_argument("standard_form: invalid code: " + rep.messages.front());
    }
    size_t n = c.n, nk = c.n - c.k;
    PolyMatrix mx(nk, n), mz(nk, n);
    for (size_t i = 0; i < nk; i++) {
        for (size_t col = 0; col < n; col++) {
            mx.at(i, col) = c.gens[i].x()[col];
            mz.at(i, col) = c.gens[i].z()[col];
        }
    }

    Elimination e1 = eliminate(mx, 0, n, 0, &mz);
    size_t r = e1.rank;
    Elimination e2 = eliminate(e1.companion, r, n, r, &e1.reduced);

    StandardForm sf;
    sf.n = n;
    sf.k = c.k;
    sf.m = c.m;
    sf.r = r;
    sf.x = e2.companion;
    sf.z = e2.reduced;
    sf.col_perm.resize(n);
    for (size_t col = 0; col < n; col++) {
        sf.col_perm[col] = e1.col_perm[e2.col_perm[col]];
    }
    sf.row_log = e1.log;
    sf.row_log.insert(sf.row_log.end(), e2.log.begin(), e2.log.end());
    sf.diagonal_ok = e1.diagonal_ok && e2.diagonal_ok && r + e2.rank == nk;

    sf.A = sf.x.slice(0, r, 0, r);
    sf.B = sf.x.slice(0, r, r, nk - r);
    sf.C = sf.x.slice(0, r, nk, c.k);
    sf.E = sf.z.slice(0, r, 0, r);
    sf.F = sf.z.slice(0, r, r, nk - r);
    sf.G = sf.z.slice(0, r, nk, c.k);
    sf.J = sf.z.slice(r, nk - r, 0, r);
    sf.K = sf.z.slice(r, nk - r, r, nk - r);
    sf.L = sf.z.slice(r, nk - r, nk, c.k);
    for (size_t i = 0; i < r && sf.diagonal_ok; i++) {
        for (size_t j = 0; j < r; j++) {
            if ((i == j) == sf.A.at(i, j).is_zero()) {
                sf.diagonal_ok = false;
            }
        }
    }
    for (size_t i = 0; i < nk - r && sf.diagonal_ok; i++) {
        for (size_t j = 0; j < nk - r; j++) {
            if ((i == j) == sf.K.at(i, j).is_zero()) {
                sf.diagonal_ok = false;
            }
        }
    }

    sf.combination.assign(nk, std::vector<Laurent>(nk));
    for (size_t i = 0; i < nk; i++) {
        sf.combination[i][i] = Laurent::monomial(0);
    }
    replay_laurent(sf.row_log, sf.combination);
    sf.signs.resize(nk);
    for (size_t i = 0; i < nk; i++) {
        sf.signs[i] = combination_sign(c, sf.combination[i], sf.row(i));
    }
    return sf;
}

LogicalOps derive_xbar(const StandardForm &sf) {
    require_diagonal(sf);
    size_t r = sf.r, nk = sf.n - sf.k, kk = sf.k;

    // Entries with the conditioning polynomial set to 1.
    std::vector<std::vector<Rat>> u2(kk, std::vector<Rat>(nk - r));
    std::vector<std::vector<Rat>> v1(kk, std::vector<Rat>(r));
    Poly lambda = Poly::one();
    for (size_t a = 0; a < kk; a++) {
        for (size_t b = 0; b < nk - r; b++) {
            u2[a][b] = rev(sf.L.at(b, a)) * inv_rev(sf.K.at(b, b));
            lambda = lcm(lambda, u2[a][b].den);
        }
        for (size_t col = 0; col < r; col++) {
            Rat acc = rev(sf.G.at(col, a));
            for (size_t b = 0; b < nk - r; b++) {
                acc = acc + u2[a][b] * rev(sf.F.at(col, b));
            }
            v1[a][col] = acc * inv_rev(sf.A.at(col, col));
            lambda = lcm(lambda, v1[a][col].den);
        }
    }

    std::vector<std::vector<Laurent>> xs, zs;
    xbar_laurent(sf, lambda, u2, v1, &xs, &zs);

    LogicalOps lo;
    lo.n = sf.n;
    lo.k = kk;
    lo.conditioning = lambda;
    for (size_t a = 0; a < kk; a++) {
        int64_t s = row_shift(xs[a], zs[a]);
        lo.shifts.push_back(s);
        lo.xbar.push_back(to_physical(sf, xs[a], zs[a], s));
        lo.info_blocks.push_back((size_t)(lambda.degree() + s));
        lo.info_columns.push_back(sf.col_perm[nk + a]);
    }
    lo.lambda = max_degree(lo.xbar);
    return lo;
}

LogicalOps derive_zbar(const StandardForm &sf, const LogicalOps &xbar_ops) {
    require_diagonal(sf);
    const Poly &lambda = xbar_ops.conditioning;
    if (!is_monomial(lambda)) {
        throw CatastrophicCode("conditioning polynomial " + lambda.to_string() +
                               " is not a monomial; Z-bar operators are not finite");
    }
    size_t r = sf.r, nk = sf.n - sf.k, kk = sf.k;
    Rat inv_lambda = inv_rev(lambda);

    LogicalOps lo = xbar_ops;
    lo.xbar.clear();
    lo.zbar.clear();
    lo.shifts.clear();
    lo.info_blocks.clear();
    for (size_t a = 0; a < kk; a++) {
        std::vector<Laurent> zx(sf.n), zz(sf.n);
        for (size_t col = 0; col < r; col++) {
            Rat v = rev(sf.C.at(col, a)) * inv_rev(sf.A.at(col, col)) * inv_lambda;
            if (!v.den.is_one()) {
                throw CatastrophicCode("diagonal entry " + sf.A.at(col, col).to_string() +
                                       " is not a monomial; Z-bar operators are not finite");
            }
            zz[col] = v.num;
        }
        zz[nk + a] = inv_lambda.num;

        // Undo the X-bar normalization and shift the pair jointly.
        const PauliPoly &xp = xbar_ops.xbar[a];
        int64_t old = xbar_ops.shifts[a];
        std::vector<Laurent> xx(sf.n), xz(sf.n);
        for (size_t col = 0; col < sf.n; col++) {
            xx[col] = Laurent::from_poly(xp.x()[sf.col_perm[col]]).shifted(-old);
            xz[col] = Laurent::from_poly(xp.z()[sf.col_perm[col]]).shifted(-old);
        }
        int64_t s = std::max(row_shift(xx, xz), row_shift(zx, zz));
        lo.shifts.push_back(s);
        lo.xbar.push_back(to_physical(sf, xx, xz, s));
        lo.zbar.push_back(to_physical(sf, zx, zz, s));
        lo.info_blocks.push_back((size_t)(lambda.degree() + s));
    }
    lo.lambda = std::max(max_degree(lo.xbar), max_degree(lo.zbar));
    return lo;
}

LogicalOps derive_logicals(const StandardForm &sf) {
    LogicalOps lo = derive_xbar(sf);
    if (is_monomial(lo.conditioning)) {
        try {
            return derive_zbar(sf, lo);
        } catch (const CatastrophicCode &) {
            // A non-monomial diagonal entry of A leaves Z-bar infinite.
        }
    }
    return lo;
}

bool is_catastrophic(const CodeSpec &c) {
    StandardForm sf = standard_form(c);
    return !is_monomial(derive_xbar(sf).conditioning);
}

LogicalCount count_logicals(const CodeSpec &c, const LogicalOps &lo, size_t p) {
    if ((int64_t)p <= lo.lambda) {
        throw std::invalid_argument("count_logicals: need more than lambda = " + std::to_string(lo.lambda) +
                                    " generator blocks");
    }
    size_t ob = c.overlap_blocks();
    LogicalCount out;
    out.protected_qubits = c.k * (p + ob - (size_t)lo.lambda);
    out.sacrificed = ob * (c.n - c.k) + (size_t)lo.lambda * c.k;
    return out;
}

}  // namespace qconv
