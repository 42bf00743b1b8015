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

#include "qconv/channel.h"

#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qconv/errors.h"

namespace qconv {

double ChannelModel::prob(Pauli p) const {
    switch (p) {
        case Pauli::I:
            return p_i;
        case Pauli::X:
            return p_x;
        case Pauli::Y:
            return p_y;
        case Pauli::Z:
            return p_z;
    }
    return 0.0;
}

double ChannelModel::log_prob(Pauli p) const {
    double v = prob(p);
    return v > 0 ? std::log(v) : kNegInf;
}

void ChannelModel::check() const {
    for (double v : {p_i, p_x, p_y, p_z}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("channel probabilities must lie in [0, 1]");
        }
    }
    if (std::abs(p_i + p_x + p_y + p_z - 1.0) > 1e-12) {
        throw std::invalid_argument("channel probabilities must sum to 1");
    }
}

ChannelModel depolarizing(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
    ChannelModel ch{1.0 - p, p / 3, p / 3, p / 3};
    return ch;
}

ChannelModel pauli_channel(double px, double py, double pz) {
    ChannelModel ch{1.0 - px - py - pz, px, py, pz};
    if (ch.p_i < 0 && ch.p_i > -1e-12) {
        ch.p_i = 0;
    }
    ch.check();
    return ch;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SymplecticVector sample_error(const ChannelModel &ch, size_t num_qubits, uint64_t seed) {
    ch.check();
    std::mt19937_64 rng(splitmix64(seed));
    double c_i = ch.p_i, c_x = c_i + ch.p_x, c_y = c_x + ch.p_y;
    // Last letter with nonzero probability absorbs rounding at the top of [0, 1).
    Pauli last = ch.p_z > 0 ? Pauli::Z : ch.p_y > 0 ? Pauli::Y : ch.p_x > 0 ? Pauli::X : Pauli::I;
    SymplecticVector e(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        double u = (double)(rng() >> 11) * 0x1.0p-53;
        Pauli p;
        if (u < c_i) {
            p = Pauli::I;
        } else if (u < c_x) {
            p = Pauli::X;
        } else if (u < c_y) {
            p = Pauli::Y;
        } else {
            p = ch.p_z > 0 ? Pauli::Z : last;
        }
        e.set_letter(q, p);
    }
    return e;
}

double log_likelihood_counts(const ChannelModel &ch, const std::array<size_t, 4> &counts) {
    double total = 0.0;
    for (int p = 0; p < 4; p++) {
        if (counts[p] == 0) {
            continue;
        }
        double lp = ch.log_prob((Pauli)p);
        if (lp == kNegInf) {
            return kNegInf;
        }
        total += (double)counts[p] * lp;
    }
    return total;
}

double log_likelihood(const ChannelModel &ch, const SymplecticVector &e) {
    std::array<size_t, 4> counts{};
    for (size_t q = 0; q < e.num_qubits(); q++) {
        counts[(int)e.letter(q)]++;
    }
    return log_likelihood_counts(ch, counts);
}

double log_likelihood(const ChannelModel &ch, const PauliString &e, size_t num_qubits) {
    if (e.offset + e.ops.size() > num_qubits) {
        throw std::out_of_range("log_likelihood: error support exceeds the qubit count");
    }
    std::string dense = e.dense();
    dense.resize(num_qubits, 'I');
    return log_likelihood(ch, SymplecticVector::from_letters(dense));
}

// ---------------------------------------------------------------------------

uint32_t SyndromeStream::block_value(size_t j) const {
    uint32_t v = 0;
    for (size_t i = 0; i < r; i++) {
        v |= (uint32_t)get(j, i) << i;
    }
    return v;
}

size_t SyndromeStream::weight() const {
    size_t w = 0;
    for (uint8_t b : bits) {
        w += b;
    }
    return w;
}

std::string SyndromeStream::to_text() const {
    std::string out;
    for (size_t j = 0; j < q; j++) {
        for (size_t i = 0; i < r; i++) {
            out += get(j, i) ? '-' : '+';
        }
        out += '\n';
    }
    return out;
}

SyndromeStream SyndromeStream::parse_text(std::string_view text) {
    std::vector<std::string> lines;
    size_t pos = 0, line_no = 0;
    size_t width = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::string clean;
        for (size_t c = 0; c < line.size(); c++) {
            char ch = line[c];
            if (ch == '+' || ch == '-') {
                clean += ch;
            } else if (!std::isspace((unsigned char)ch)) {
                throw ParseError(std::string("unexpected character '") + ch + "' in syndrome file", line_no, c + 1);
            }
        }
        if (clean.empty()) {
            continue;
        }
        if (!lines.empty() && clean.size() != width) {
            throw ParseError("syndrome lines must all have the same length", line_no, 1);
        }
        width = clean.size();
        lines.push_back(std::move(clean));
    }
    SyndromeStream s(lines.size(), width);
    for (size_t j = 0; j < lines.size(); j++) {
        for (size_t i = 0; i < width; i++) {
            s.set(j, i, lines[j][i] == '-');
        }
    }
    return s;
}

SyndromeStream extract_syndromes(const CodeSpec &c, const SymplecticVector &e, size_t q) {
    size_t nq = c.n * q + c.m;
    if (e.num_qubits() != nq) {
        throw std::invalid_argument("extract_syndromes: error has " + std::to_string(e.num_qubits()) +
                                    " qubits, expected " + std::to_string(nq));
    }
    SyndromeStream s(q, c.gens.size());
    for (size_t j = 0; j < q; j++) {
        for (size_t i = 0; i < c.gens.size(); i++) {
            s.set(j, i, !expand(c.gens[i], (int64_t)j, nq).commutes_with(e));
        }
    }
    return s;
}

}  // namespace qconv
