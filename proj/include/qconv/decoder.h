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

#ifndef QCONV_DECODER_H
#define QCONV_DECODER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qconv/channel.h"
#include "qconv/code.h"
#include "qconv/structure.h"

namespace qconv {

/// Pauli patterns on L qubits are indexed with qubit 0 as the most significant
/// base-4 digit and letter values I=0, X=1, Z=2, Y=3. Index order is therefore
/// the lexicographic order used for deterministic tie-breaking.
size_t pattern_index(const SymplecticVector &e, size_t first, size_t len);
void set_pattern(SymplecticVector &e, size_t first, size_t len, size_t index);

enum class TieBreak { Lexicographic, Random };

struct DecodeOptions {
    TieBreak tie = TieBreak::Lexicographic;
    /// Seed for TieBreak::Random.
    uint64_t seed = 0;
    /// 0 disables truncated traceback; d > 0 commits step j-d after step j.
    size_t traceback_depth = 0;
    /// Force the final overlap pattern to the identity when feasible.
    bool terminated = false;
    /// Use the precomputed transition table (lexicographic mode only).
    bool use_cache = true;
    /// Keep the per-state survivor metrics of every step.
    bool record_survivors = false;
};

struct DecodeResult {
    /// Estimate on n*q + m qubits.
    SymplecticVector estimate;
    double loglik = 0.0;
    /// Truncated-traceback estimate and per-step agreement of all survivors
    /// at commit time (only with traceback_depth > 0).
    std::optional<SymplecticVector> truncated_estimate;
    std::vector<bool> per_block_converged;
    bool truncated_agrees = true;
    /// Terminated mode found no survivor ending in the identity and fell back.
    bool terminated_fallback = false;
    /// survivor_metrics[j][e]: best log-likelihood of a prefix through step j
    /// ending in overlap pattern e (kNegInf if none).
    std::vector<std::vector<double>> survivor_metrics;
};

/// Viterbi decoder with a per-(code, channel) transition table.
///
/// The trellis state is the Pauli pattern on the m overlap qubits. The initial
/// metric of state e is the likelihood of e on the first m qubits; step j
/// extends by the n qubits that complete the support of the block-j generators
/// and keeps, per new overlap pattern, the most likely survivor consistent with
/// the block-j syndromes.
class ViterbiDecoder {
   public:
    ViterbiDecoder(const CodeSpec &c, const ChannelModel &ch);

    DecodeResult decode(const SyndromeStream &s, const DecodeOptions &opts = {}) const;

    size_t num_states() const {
        return num_states_;
    }
    size_t num_extensions() const {
        return num_ext_;
    }

   private:
    struct StepTrace {
        std::vector<uint32_t> back;  // previous state per new state
        std::vector<uint32_t> ext;   // extension per new state
    };

    void step_cached(
        uint32_t syndrome,
        const std::vector<double> &metric,
        const std::vector<uint32_t> &order,
        std::vector<double> &out_metric,
        StepTrace &tr) const;
    void step_direct(
        uint32_t syndrome,
        const std::vector<double> &metric,
        const std::vector<uint32_t> &order,
        std::vector<double> &out_metric,
        StepTrace &tr,
        void *rng) const;

    size_t n_, m_, r_;
    size_t num_states_, num_ext_;
    ChannelModel ch_;
    std::vector<uint32_t> head_syn_;  // per state
    std::vector<uint32_t> tail_syn_;  // per extension
    std::vector<double> ext_ll_;      // per extension
    std::vector<double> state_ll_;    // per state
    std::vector<std::vector<uint32_t>> ext_by_syn_;
    // best_*[t * num_states + e']: best extension with tail syndrome t ending in e'.
    std::vector<double> best_ll_;
    std::vector<uint32_t> best_ext_;
};

/// One-shot convenience wrapper around ViterbiDecoder.
DecodeResult viterbi_decode(
    const CodeSpec &c, const ChannelModel &ch, const SyndromeStream &s, const DecodeOptions &opts = {});

enum class OracleMode { Auto, Exhaustive, Coset };

/// Global maximum-likelihood error consistent with the syndromes, ties broken
/// toward the lexicographically smallest pattern. Exhaustive mode enumerates
/// all 4^N patterns (N <= 14); coset mode enumerates one solution plus the
/// kernel of the syndrome map (dimension <= 26). Throws InstanceTooLarge or
/// InfeasibleSyndromes.
DecodeResult brute_force_ml(
    const CodeSpec &c, const ChannelModel &ch, const SyndromeStream &s, OracleMode mode = OracleMode::Auto);

/// Oracle per-state metrics after step j: for every overlap pattern e, the best
/// log-likelihood among patterns on the first (j+1)*n + m qubits consistent with
/// syndromes of blocks 0..j and ending in e.
std::vector<double> oracle_state_metrics(const CodeSpec &c, const ChannelModel &ch, const SyndromeStream &s, size_t j);

struct Classification {
    bool success = true;
    /// Names of logical operators that anticommute with the residual.
    std::vector<std::string> violated;
    /// Z-bar operators were unavailable; only X-bar was checked.
    bool zbar_missing = false;
};

/// Checks a residual against the logical operators delay(xbar_r, s+lambda) and
/// delay(zbar_r, s+lambda), 0 <= s < q, that fit on the n*q + m qubits.
class ResidualClassifier {
   public:
    ResidualClassifier(const CodeSpec &c, const LogicalOps &lo, size_t q);
    Classification classify(const SymplecticVector &residual) const;
    size_t num_checks() const {
        return ops_.size();
    }

   private:
    std::vector<SymplecticVector> ops_;
    std::vector<std::string> names_;
    bool zbar_missing_;
};

Classification classify_residual(
    const SymplecticVector &est, const SymplecticVector &truth, const CodeSpec &c, const LogicalOps &lo, size_t q);

}  // namespace qconv

#endif
