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

#ifndef QCONV_CHANNEL_H
#define QCONV_CHANNEL_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "qconv/code.h"
#include "qconv/pauli.h"

namespace qconv {

/// Memoryless single-qubit Pauli channel.
struct ChannelModel {
    double p_i = 1.0;
    double p_x = 0.0;
    double p_y = 0.0;
    double p_z = 0.0;

    double prob(Pauli p) const;
    /// Natural log of prob(p); -infinity when the probability is zero.
    double log_prob(Pauli p) const;
    /// Throws std::invalid_argument unless all entries are in [0,1] and sum to 1 within 1e-12.
    void check() const;
};

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// (1-p, p/3, p/3, p/3). Throws std::invalid_argument outside [0,1].
ChannelModel depolarizing(double p);
/// (1-px-py-pz, px, py, pz).
ChannelModel pauli_channel(double px, double py, double pz);

/// SplitMix64 output for the given state.
uint64_t splitmix64(uint64_t x);

/// i.i.d. error on num_qubits qubits. The generator is std::mt19937_64 seeded
/// with splitmix64(seed); each qubit consumes one 53-bit uniform draw.
SymplecticVector sample_error(const ChannelModel &ch, size_t num_qubits, uint64_t seed);

/// Sum over all qubits of log(prob(letter)); kNegInf for an impossible error.
double log_likelihood(const ChannelModel &ch, const SymplecticVector &e);
/// Same with the error given as a PauliString padded with identities to num_qubits.
/// Throws std::out_of_range when the string does not fit.
double log_likelihood(const ChannelModel &ch, const PauliString &e, size_t num_qubits);
/// counts[p] letters of type p (indexed by Pauli value).
double log_likelihood_counts(const ChannelModel &ch, const std::array<size_t, 4> &counts);

/// Syndrome bits s_{j,i} for 0 <= j < q and 0 <= i < n-k. A set bit means -1.
struct SyndromeStream {
    size_t q = 0;
    size_t r = 0;
    std::vector<uint8_t> bits;

    SyndromeStream() = default;
    SyndromeStream(size_t q, size_t r) : q(q), r(r), bits(q * r, 0) {
    }
    bool get(size_t j, size_t i) const {
        return bits[j * r + i];
    }
    void set(size_t j, size_t i, bool v) {
        bits[j * r + i] = v;
    }
    /// Block j as an integer, generator i at bit i.
    uint32_t block_value(size_t j) const;
    /// Number of -1 entries.
    size_t weight() const;

    /// One line per block, "+-++" style.
    std::string to_text() const;
    /// Throws ParseError on unequal line lengths or other characters.
    static SyndromeStream parse_text(std::string_view text);

    bool operator==(const SyndromeStream &other) const = default;
};

/// s_{j,i} = -1 iff e anticommutes with M_{j,i}. Requires e on n*q + m qubits.
SyndromeStream extract_syndromes(const CodeSpec &c, const SymplecticVector &e, size_t q);

}  // namespace qconv

#endif
