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

#include <gtest/gtest.h>

#include "oracles.h"
#include "qconv/report.h"
#include "qconv/simulate.h"

namespace qconv {
namespace {

SimulationConfig base_config() {
    SimulationConfig cfg;
    cfg.q = 6;
    cfg.channel = depolarizing(0.08);
    cfg.trials = 120;
    cfg.seed = 17;
    cfg.traceback = 2;
    return cfg;
}

TEST(Simulate, NoiselessChannelNeverFails) {
    SimulationConfig cfg = base_config();
    cfg.channel = depolarizing(0.0);
    RunSummary s = run_simulation(oracle::qcc5(), cfg);
    EXPECT_EQ(s.failures, 0u);
    EXPECT_EQ(s.logical_error_rate, 0.0);
    EXPECT_EQ(s.truncation_agreement_rate, 1.0);
}

TEST(Simulate, ThreadCountDoesNotChangeResults) {
    SimulationConfig cfg = base_config();
    RunSummary one = run_simulation(oracle::qcc5(), cfg);
    for (size_t threads : {2, 3, 7}) {
        cfg.threads = threads;
        RunSummary many = run_simulation(oracle::qcc5(), cfg);
        EXPECT_EQ(report::simulate_json(oracle::qcc5(), many, false, true).dump(),
                  report::simulate_json(oracle::qcc5(), one, false, true).dump());
    }
}

TEST(Simulate, SummaryMatchesRecords) {
    RunSummary s = run_simulation(oracle::qcc5(), base_config());
    size_t fails = 0;
    for (size_t t = 0; t < s.records.size(); t++) {
        EXPECT_EQ(s.records[t].seed, 17 + t);
        fails += !s.records[t].success;
    }
    EXPECT_EQ(s.failures, fails);
    EXPECT_EQ(s.logical_error_rate, (double)fails / 120.0);
    EXPECT_GE(s.logical_error_rate, 0.0);
    EXPECT_LE(s.truncation_agreement_rate, 1.0);
}

TEST(Simulate, TrialReproducibleFromSeed) {
    SimulationConfig cfg = base_config();
    CodeSpec c = oracle::qcc5();
    RunSummary s = run_simulation(c, cfg);
    LogicalOps lo = derive_logicals(standard_form(c));
    ViterbiDecoder dec(c, cfg.channel);
    ResidualClassifier cls(c, lo, cfg.q);
    TrialRecord r = run_trial(c, dec, cls, cfg, 37);
    EXPECT_EQ(r.seed, s.records[37].seed);
    EXPECT_EQ(r.error_weight, s.records[37].error_weight);
    EXPECT_EQ(r.loglik, s.records[37].loglik);
    EXPECT_EQ(r.success, s.records[37].success);
}

TEST(Simulate, RejectsEmptyRuns) {
    SimulationConfig cfg = base_config();
    cfg.trials = 0;
    EXPECT_THROW(run_simulation(oracle::qcc5(), cfg), std::invalid_argument);
}

}  // namespace
}  // namespace qconv
