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

#include "qconv/simulate.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "qconv/structure.h"

namespace qconv {

TrialRecord run_trial(
    const CodeSpec &c, const ViterbiDecoder &dec, const ResidualClassifier &cls, const SimulationConfig &cfg, size_t t) {
    TrialRecord rec;
    rec.seed = cfg.seed + t;
    size_t N = c.n * cfg.q + c.m;
    SymplecticVector truth = sample_error(cfg.channel, N, rec.seed);
    SyndromeStream s = extract_syndromes(c, truth, cfg.q);
    DecodeOptions opts;
    opts.tie = cfg.tie;
    opts.seed = rec.seed;
    opts.traceback_depth = cfg.traceback;
    opts.terminated = cfg.terminated;
    DecodeResult res = dec.decode(s, opts);
    SymplecticVector residual = res.estimate;
    residual ^= truth;
    Classification cl = cls.classify(residual);
    rec.error_weight = truth.weight();
    rec.syndrome_weight = s.weight();
    rec.loglik = res.loglik;
    rec.success = cl.success;
    rec.violated = std::move(cl.violated);
    rec.traceback_agrees = res.truncated_agrees;
    rec.terminated_fallback = res.terminated_fallback;
    return rec;
}

RunSummary run_simulation(const CodeSpec &c, const SimulationConfig &cfg) {
    if (cfg.trials == 0) {
        throw std::invalid_argument("simulation needs at least one trial");
    }
    if (cfg.q == 0) {
        throw std::invalid_argument("simulation needs at least one block");
    }
    auto start = std::chrono::steady_clock::now();
    StandardForm sf = standard_form(c);
    LogicalOps lo = derive_logicals(sf);
    ViterbiDecoder dec(c, cfg.channel);
    ResidualClassifier cls(c, lo, cfg.q);

    RunSummary sum;
    sum.config = cfg;
    sum.num_qubits = c.n * cfg.q + c.m;
    sum.trials = cfg.trials;
    sum.zbar_missing = lo.k > 0 && lo.zbar.empty();
    sum.records.resize(cfg.trials);

    size_t workers = std::clamp<size_t>(cfg.threads, 1, cfg.trials);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](size_t w) {
        try {
            for (size_t t = w; t < cfg.trials; t += workers) {
                sum.records[t] = run_trial(c, dec, cls, cfg, t);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    for (const TrialRecord &r : sum.records) {
        sum.failures += r.success ? 0 : 1;
        sum.truncation_agreements += r.traceback_agrees ? 1 : 0;
    }
    sum.logical_error_rate = (double)sum.failures / (double)sum.trials;
    sum.truncation_agreement_rate = (double)sum.truncation_agreements / (double)sum.trials;
    sum.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sum;
}

}  // namespace qconv
