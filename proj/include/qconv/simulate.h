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

#ifndef QCONV_SIMULATE_H
#define QCONV_SIMULATE_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qconv/channel.h"
#include "qconv/code.h"
#include "qconv/decoder.h"

namespace qconv {

struct SimulationConfig {
    size_t q = 1;
    ChannelModel channel;
    size_t trials = 1;
    uint64_t seed = 0;
    /// 0 disables the truncated-traceback comparison.
    size_t traceback = 0;
    bool terminated = false;
    TieBreak tie = TieBreak::Lexicographic;
    /// Worker threads; results do not depend on this value.
    size_t threads = 1;
};

struct TrialRecord {
    /// Seed passed to sample_error (run seed + trial index).
    uint64_t seed = 0;
    size_t error_weight = 0;
    size_t syndrome_weight = 0;
    double loglik = 0.0;
    bool success = true;
    std::vector<std::string> violated;
    /// Truncated estimate equals the full estimate (true when traceback is off).
    bool traceback_agrees = true;
    bool terminated_fallback = false;
};

struct RunSummary {
    SimulationConfig config;
    size_t num_qubits = 0;
    size_t trials = 0;
    size_t failures = 0;
    double logical_error_rate = 0.0;
    size_t truncation_agreements = 0;
    double truncation_agreement_rate = 0.0;
    bool zbar_missing = false;
    double wall_seconds = 0.0;
    std::vector<TrialRecord> records;
};

/// Runs one trial: sample, extract syndromes, decode, classify.
TrialRecord run_trial(
    const CodeSpec &c, const ViterbiDecoder &dec, const ResidualClassifier &cls, const SimulationConfig &cfg, size_t t);

/// Monte Carlo over cfg.trials independent trials. Trial t uses seed cfg.seed + t,
/// so the summary is identical for any thread count.
RunSummary run_simulation(const CodeSpec &c, const SimulationConfig &cfg);

}  // namespace qconv

#endif
