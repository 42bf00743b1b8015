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

#include "qconv/gf2poly.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qconv/errors.h"
#include "qconv/kernels.h"

namespace qconv {

ParseError::ParseError(const std::string &msg, size_t line, size_t column)
    : std::invalid_argument(
          line ? msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")" : msg),
      line(line),
      column(column) {
}

namespace {

// Parses a sum of terms `1`, `0`, `D`, `D^e` into a map exponent -> parity.
std::map<int64_t, bool> parse_terms(std::string_view text, bool allow_negative) {
    std::string s;
    std::vector<size_t> col;  // original column of each kept char, 1-based
    for (size_t i = 0; i < text.size(); i++) {
        if (!std::isspace((unsigned char)text[i])) {
            s.push_back(text[i]);
            col.push_back(i + 1);
        }
    }
    if (s.empty()) {
        throw ParseError("empty polynomial");
    }
    std::map<int64_t, bool> terms;
    size_t i = 0;
    while (true) {
        size_t start = i;
        if (i >= s.size()) {
            throw ParseError("expected a term after '+'", 1, col.empty() ? 1 : col.back() + 1);
        }
        if (s[i] == '0' || s[i] == '1') {
            if (s[i] == '1') {
                terms[0] = !terms[0];
            }
            i++;
        } else if (s[i] == 'D') {
            i++;
            int64_t e = 1;
            if (i < s.size() && s[i] == '^') {
                i++;
                size_t j = i;
                if (j < s.size() && s[j] == '-') {
                    if (!allow_negative) {
                        throw ParseError("negative exponent in polynomial", 1, col[j]);
                    }
                    j++;
                }
                while (j < s.size() && std::isdigit((unsigned char)s[j])) {
                    j++;
                }
                auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, e);
                if (ec != std::errc() || ptr != s.data() + j || j == i) {
                    throw ParseError("bad exponent", 1, i < col.size() ? col[i] : col.back());
                }
                i = j;
            }
            if (e > kMaxDegree || e < -kMaxDegree) {
                throw DegreeOverflow("exponent exceeds the degree cap");
            }
            terms[e] = !terms[e];
        } else {
            throw ParseError(std::string("unexpected character '") + s[i] + "'", 1, col[start]);
        }
        if (i == s.size()) {
            break;
        }
        if (s[i] != '+') {
            throw ParseError(std::string("expected '+' but found '") + s[i] + "'", 1, col[i]);
        }
        i++;
    }
    return terms;
}

std::string format_terms(const std::vector<int64_t> &exps) {
    if (exps.empty()) {
        return "0";
    }
    std::string out;
    for (size_t i = 0; i < exps.size(); i++) {
        if (i) {
            out += '+';
        }
        int64_t e = exps[i];
        if (e == 0) {
            out += '1';
        } else if (e == 1) {
            out += 'D';
        } else {
            out += "D^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace

Poly Poly::one() {
    return monomial(0);
}

Poly Poly::monomial(int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("Poly::monomial: negative exponent");
    }
    if (k > kMaxDegree) {
        throw DegreeOverflow("monomial degree exceeds the cap");
    }
    Poly p;
    p.words_.assign((size_t)k / 64 + 1, 0);
    p.words_.back() = uint64_t{1} << (k & 63);
    return p;
}

Poly Poly::from_coeffs(std::span<const int> coeffs) {
    Poly p;
    for (size_t j = 0; j < coeffs.size(); j++) {
        if (coeffs[j] & 1) {
            p.set_coeff((int64_t)j, true);
        }
    }
    return p;
}

Poly Poly::parse(std::string_view text) {
    Poly p;
    for (auto [e, on] : parse_terms(text, false)) {
        if (on) {
            p.set_coeff(e, true);
        }
    }
    return p;
}

int64_t Poly::degree() const {
    if (words_.empty()) {
        return -1;
    }
    return (int64_t)(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

int64_t Poly::valuation() const {
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i]) {
            return (int64_t)i * 64 + std::countr_zero(words_[i]);
        }
    }
    return -1;
}

bool Poly::coeff(int64_t k) const {
    if (k < 0 || (size_t)(k >> 6) >= words_.size()) {
        return false;
    }
    return (words_[k >> 6] >> (k & 63)) & 1;
}

void Poly::set_coeff(int64_t k, bool v) {
    if (k < 0) {
        throw std::invalid_argument("Poly::set_coeff: negative exponent");
    }
    if (k > kMaxDegree) {
        throw DegreeOverflow("coefficient index exceeds the degree cap");
    }
    size_t w = (size_t)k >> 6;
    if (w >= words_.size()) {
        if (!v) {
            return;
        }
        words_.resize(w + 1, 0);
    }
    uint64_t m = uint64_t{1} << (k & 63);
    if (v) {
        words_[w] |= m;
    } else {
        words_[w] &= ~m;
        trim();
    }
}

size_t Poly::num_terms() const {
    size_t c = 0;
    for (uint64_t w : words_) {
        c += std::popcount(w);
    }
    return c;
}

void Poly::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

Poly Poly::shifted_up(int64_t k) const {
    if (k < 0) {
        return shifted_down(-k);
    }
    if (is_zero() || k == 0) {
        return *this;
    }
    if (degree() + k > kMaxDegree) {
        throw DegreeOverflow("shift pushes degree past the cap");
    }
    size_t ws = (size_t)k / 64;
    int bs = (int)(k % 64);
    Poly out;
    out.words_.assign(words_.size() + ws + 1, 0);
    for (size_t i = 0; i < words_.size(); i++) {
        out.words_[i + ws] ^= words_[i] << bs;
        if (bs) {
            out.words_[i + ws + 1] ^= words_[i] >> (64 - bs);
        }
    }
    out.trim();
    return out;
}

Poly Poly::shifted_down(int64_t k) const {
    if (k < 0) {
        return shifted_up(-k);
    }
    if (is_zero() || k == 0) {
        return *this;
    }
    if (valuation() < k) {
        throw std::domain_error("Poly::shifted_down: not divisible by D^" + std::to_string(k));
    }
    size_t ws = (size_t)k / 64;
    int bs = (int)(k % 64);
    Poly out;
    out.words_.assign(words_.size() - ws, 0);
    for (size_t i = ws; i < words_.size(); i++) {
        out.words_[i - ws] ^= words_[i] >> bs;
        if (bs && i - ws >= 1) {
            out.words_[i - ws - 1] ^= words_[i] << (64 - bs);
        }
    }
    out.trim();
    return out;
}

Poly Poly::reversed(int64_t d) const {
    if (degree() > d) {
        throw std::invalid_argument("Poly::reversed: degree exceeds reversal width");
    }
    Poly out;
    for (int64_t j = 0; j <= degree(); j++) {
        if (coeff(j)) {
            out.set_coeff(d - j, true);
        }
    }
    return out;
}

Poly &Poly::operator+=(const Poly &other) {
    if (other.words_.size() > words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    kernels::active().xor_words(words_.data(), other.words_.data(), other.words_.size());
    trim();
    return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    if (a.degree() + b.degree() > kMaxDegree) {
        throw DegreeOverflow("product degree exceeds the cap");
    }
    Poly out;
    out.words_.resize(a.words_.size() + b.words_.size());
    kernels::active().clmul(a.words_.data(), a.words_.size(), b.words_.data(), b.words_.size(), out.words_.data());
    out.trim();
    return out;
}

Poly &Poly::operator*=(const Poly &other) {
    *this = *this * other;
    return *this;
}

bool operator<(const Poly &a, const Poly &b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    for (size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) {
            return a.words_[i] < b.words_[i];
        }
    }
    return false;
}

std::string Poly::to_string() const {
    std::vector<int64_t> exps;
    for (int64_t j = 0; j <= degree(); j++) {
        if (coeff(j)) {
            exps.push_back(j);
        }
    }
    return format_terms(exps);
}

DivMod divmod(const Poly &a, const Poly &b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    DivMod out{Poly(), a};
    int64_t db = b.degree();
    while (!out.remainder.is_zero() && out.remainder.degree() >= db) {
        int64_t s = out.remainder.degree() - db;
        out.quotient.set_coeff(s, true);
        out.remainder += b.shifted_up(s);
    }
    return out;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly lcm(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    return divmod(a, gcd(a, b)).quotient * b;
}

bool is_monomial(const Poly &a) {
    return a.num_terms() == 1;
}

// ---------------------------------------------------------------------------

Laurent::Laurent(Poly body, int64_t shift) {
    if (body.is_zero()) {
        return;
    }
    int64_t v = body.valuation();
    body_ = body.shifted_down(v);
    shift_ = shift + v;
}

Laurent Laurent::parse(std::string_view text) {
    auto terms = parse_terms(text, true);
    int64_t lo = 0;
    bool any = false;
    for (auto [e, on] : terms) {
        if (on) {
            lo = any ? std::min(lo, e) : e;
            any = true;
        }
    }
    if (!any) {
        return Laurent();
    }
    Poly body;
    for (auto [e, on] : terms) {
        if (on) {
            body.set_coeff(e - lo, true);
        }
    }
    return Laurent(body, lo);
}

bool Laurent::coeff(int64_t e) const {
    return body_.coeff(e - shift_);
}

Laurent Laurent::reversed() const {
    if (is_zero()) {
        return *this;
    }
    int64_t d = body_.degree();
    return Laurent(body_.reversed(d), -(shift_ + d));
}

Poly Laurent::to_poly() const {
    if (!is_poly()) {
        throw std::domain_error("Laurent series has negative exponents: " + to_string());
    }
    return body_.shifted_up(shift_);
}

Laurent &Laurent::operator+=(const Laurent &other) {
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = other;
        return *this;
    }
    int64_t lo = std::min(shift_, other.shift_);
    Poly sum = body_.shifted_up(shift_ - lo) + other.body_.shifted_up(other.shift_ - lo);
    *this = Laurent(sum, lo);
    return *this;
}

Laurent operator*(const Laurent &a, const Laurent &b) {
    if (a.is_zero() || b.is_zero()) {
        return Laurent();
    }
    return Laurent(a.body_ * b.body_, a.shift_ + b.shift_);
}

std::string Laurent::to_string() const {
    std::vector<int64_t> exps;
    for (int64_t j = 0; j <= body_.degree(); j++) {
        if (body_.coeff(j)) {
            exps.push_back(j + shift_);
        }
    }
    return format_terms(exps);
}

int64_t laurent_group_shift(std::span<const Laurent> group) {
    int64_t p = 0;
    for (const Laurent &l : group) {
        if (!l.is_zero()) {
            p = std::max(p, -l.min_exponent());
        }
    }
    return p;
}

std::vector<Poly> laurent_normalize_group(std::span<const Laurent> group) {
    int64_t p = laurent_group_shift(group);
    std::vector<Poly> out;
    out.reserve(group.size());
    for (const Laurent &l : group) {
        out.push_back(l.shifted(p).to_poly());
    }
    return out;
}

// ---------------------------------------------------------------------------

void PolyMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        std::swap(at(a, c), at(b, c));
    }
}

void PolyMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        std::swap(at(r, a), at(r, b));
    }
}

void PolyMatrix::add_multiple(size_t dst, size_t src, const Poly &factor) {
    for (size_t c = 0; c < cols_; c++) {
        if (!at(src, c).is_zero()) {
            at(dst, c) += factor * at(src, c);
        }
    }
}

void PolyMatrix::scale_row(size_t r, int64_t shift) {
    for (size_t c = 0; c < cols_; c++) {
        at(r, c) = at(r, c).shifted_up(shift);
    }
}

int64_t PolyMatrix::row_valuation(size_t r) const {
    int64_t v = -1;
    for (size_t c = 0; c < cols_; c++) {
        const Poly &p = at(r, c);
        if (!p.is_zero()) {
            v = v < 0 ? p.valuation() : std::min(v, p.valuation());
        }
    }
    return v;
}

PolyMatrix PolyMatrix::slice(size_t r0, size_t nr, size_t c0, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw std::out_of_range("PolyMatrix::slice out of range");
    }
    PolyMatrix out(nr, nc);
    for (size_t r = 0; r < nr; r++) {
        for (size_t c = 0; c < nc; c++) {
            out.at(r, c) = at(r0 + r, c0 + c);
        }
    }
    return out;
}

std::string PolyMatrix::to_string(size_t split) const {
    std::ostringstream out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (c) {
                out << (split && c == split ? " | " : " ");
            }
            out << at(r, c).to_string();
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

struct Eliminator {
    PolyMatrix &m;
    PolyMatrix *comp;
    Elimination &out;

    void swap_rows(size_t a, size_t b) {
        if (a == b) {
            return;
        }
        m.swap_rows(a, b);
        if (comp) {
            comp->swap_rows(a, b);
        }
        out.log.push_back({ElimOp::Kind::SwapRows, a, b, Poly(), 0});
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) {
            return;
        }
        m.swap_cols(a, b);
        if (comp) {
            comp->swap_cols(a, b);
        }
        std::swap(out.col_perm[a], out.col_perm[b]);
        out.log.push_back({ElimOp::Kind::SwapCols, a, b, Poly(), 0});
    }
    void add_multiple(size_t dst, size_t src, const Poly &f) {
        m.add_multiple(dst, src, f);
        if (comp) {
            comp->add_multiple(dst, src, f);
        }
        out.log.push_back({ElimOp::Kind::AddMultiple, dst, src, f, 0});
    }
    void scale_row(size_t r, int64_t shift) {
        m.scale_row(r, shift);
        if (comp) {
            comp->scale_row(r, shift);
        }
        out.log.push_back({ElimOp::Kind::ScaleRow, r, 0, Poly(), shift});
    }
};

}  // namespace

Elimination eliminate(PolyMatrix m, size_t col_begin, size_t col_end, size_t row_begin, const PolyMatrix *companion) {
    if (col_end > m.cols() || col_begin > col_end || row_begin > m.rows()) {
        throw std::out_of_range("eliminate: range outside the matrix");
    }
    Elimination out;
    out.col_perm.resize(m.cols());
    for (size_t c = 0; c < m.cols(); c++) {
        out.col_perm[c] = c;
    }
    PolyMatrix comp;
    if (companion) {
        if (companion->rows() != m.rows()) {
            throw std::invalid_argument("eliminate: companion row count mismatch");
        }
        comp = *companion;
    }
    Eliminator el{m, companion ? &comp : nullptr, out};

    size_t p = row_begin;
    size_t pc = col_begin;
    while (p < m.rows() && pc < col_end) {
        size_t found = col_end;
        for (size_t c = pc; c < col_end && found == col_end; c++) {
            for (size_t r = p; r < m.rows(); r++) {
                if (!m.at(r, c).is_zero()) {
                    found = c;
                    break;
                }
            }
        }
        if (found == col_end) {
            break;
        }
        el.swap_cols(found, pc);

        while (true) {
            size_t best = m.rows();
            for (size_t r = p; r < m.rows(); r++) {
                const Poly &e = m.at(r, pc);
                if (!e.is_zero() && (best == m.rows() || e.degree() < m.at(best, pc).degree())) {
                    best = r;
                }
            }
            el.swap_rows(best, p);
            bool clean = true;
            for (size_t r = p + 1; r < m.rows(); r++) {
                if (m.at(r, pc).is_zero()) {
                    continue;
                }
                DivMod qr = divmod(m.at(r, pc), m.at(p, pc));
                el.add_multiple(r, p, qr.quotient);
                if (!qr.remainder.is_zero()) {
                    clean = false;
                }
            }
            if (clean) {
                break;
            }
        }

        int64_t v = m.row_valuation(p);
        if (companion) {
            int64_t vc = comp.row_valuation(p);
            if (vc >= 0) {
                v = std::min(v, vc);
            }
        }
        if (v > 0) {
            el.scale_row(p, -v);
        }

        for (size_t r = row_begin; r < p; r++) {
            if (m.at(r, pc).is_zero()) {
                continue;
            }
            DivMod qr = divmod(m.at(r, pc), m.at(p, pc));
            if (qr.remainder.is_zero()) {
                el.add_multiple(r, p, qr.quotient);
            } else {
                out.diagonal_ok = false;
            }
        }
        p++;
        pc++;
    }
    out.rank = p - row_begin;
    out.reduced = std::move(m);
    if (companion) {
        out.companion = std::move(comp);
    }
    return out;
}

void replay(std::span<const ElimOp> log, PolyMatrix &target, bool apply_col_swaps) {
    for (const ElimOp &op : log) {
        switch (op.kind) {
            case ElimOp::Kind::AddMultiple:
                target.add_multiple(op.a, op.b, op.factor);
                break;
            case ElimOp::Kind::ScaleRow:
                target.scale_row(op.a, op.shift);
                break;
            case ElimOp::Kind::SwapRows:
                target.swap_rows(op.a, op.b);
                break;
            case ElimOp::Kind::SwapCols:
                if (apply_col_swaps) {
                    target.swap_cols(op.a, op.b);
                }
                break;
        }
    }
}

}  // namespace qconv
