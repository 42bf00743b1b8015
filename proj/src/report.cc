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
#include "qconv/report.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qconv::report {

namespace {

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

Json pauli_poly_json(const PauliPoly &p) {
    PauliString s = p.to_string();
    return Json{{"vector", p.to_vector_string()}, {"letters", s.dense()}};
}

const char *tie_name(TieBreak t) {
    return t == TieBreak::Random ? "random" : "lexicographic";
}

}  // namespace

Json real(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    if (std::isnan(v)) {
        return "nan";
    }
    return v < 0 ? "-inf" : "inf";
}

double parse_real(const Json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    std::string s = j.get<std::string>();
    if (s == "-inf") {
        return -INFINITY;
    }
    if (s == "inf") {
        return INFINITY;
    }
    if (s == "nan") {
        return NAN;
    }
    throw std::invalid_argument("not a real value: " + s);
}

Json header(const char *command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json code_json(const CodeSpec &c) {
    Json gens = Json::array();
    for (size_t i = 0; i < c.gens.size(); i++) {
        gens.push_back({{"sign", c.signs[i] < 0 ? "-" : "+"}, {"letters", c.gens[i].to_letters(c.n + c.m)}});
    }
    return Json{{"n", c.n}, {"k", c.k}, {"m", c.m}, {"generators", gens}, {"matrix", lines(c.matrix().to_string(c.n))}};
}

Json channel_json(const ChannelModel &ch) {
    return Json{{"p_i", ch.p_i}, {"p_x", ch.p_x}, {"p_y", ch.p_y}, {"p_z", ch.p_z}};
}

Json logical_ops_json(const LogicalOps &lo) {
    Json xs = Json::array(), zs = Json::array();
    for (const auto &p : lo.xbar) {
        xs.push_back(pauli_poly_json(p));
    }
    for (const auto &p : lo.zbar) {
        zs.push_back(pauli_poly_json(p));
    }
    return Json{
        {"k", lo.k},
        {"conditioning", lo.conditioning.to_string()},
        {"lambda", lo.lambda},
        {"xbar", xs},
        {"zbar", zs},
        {"zbar_available", lo.has_zbar()},
        {"shifts", lo.shifts},
        {"info_blocks", lo.info_blocks},
        {"info_columns", lo.info_columns},
    };
}

Json validate_json(const CodeSpec &c, const ValidationReport &rep) {
    Json j = header("validate");
    j["code"] = code_json(c);
    j["ok"] = rep.ok;
    j["shape_ok"] = rep.shape_ok;
    j["support_ok"] = rep.support_ok;
    j["commute_ok"] = rep.commute_ok;
    j["independent"] = rep.independent;
    j["window"] = {{"blocks", rep.window_blocks}, {"rows", rep.window_rows}, {"rank", rep.window_rank}};
    Json pairs = Json::array();
    for (const auto &p : rep.pairs) {
        pairs.push_back({{"a", p.a}, {"b", p.b}, {"commute", p.commute}});
    }
    j["pairs"] = pairs;
    j["messages"] = rep.messages;
    return j;
}

Json standard_form_json(const StandardForm &sf, const LogicalOps *lo) {
    Json j = header("standard-form");
    j["n"] = sf.n;
    j["k"] = sf.k;
    j["m"] = sf.m;
    j["r"] = sf.r;
    j["diagonal_ok"] = sf.diagonal_ok;
    j["col_perm"] = sf.col_perm;
    j["signs"] = sf.signs;
    j["matrix"] = lines(sf.matrix().to_string(sf.n));
    if (lo != nullptr) {
        j["conditioning"] = lo->conditioning.to_string();
        j["lambda"] = lo->lambda;
    } else {
        j["conditioning"] = nullptr;
        j["lambda"] = nullptr;
    }
    return j;
}

Json logicals_json(const CodeSpec &c, const LogicalOps &lo) {
    Json j = header("logicals");
    j["n"] = c.n;
    j["k"] = c.k;
    j["m"] = c.m;
    j["logicals"] = logical_ops_json(lo);
    return j;
}

Json catastrophic_json(const CodeSpec &c, const LogicalOps &lo) {
    Json j = header("check-catastrophic");
    j["n"] = c.n;
    j["k"] = c.k;
    j["m"] = c.m;
    j["conditioning"] = lo.conditioning.to_string();
    j["catastrophic"] = !is_monomial(lo.conditioning);
    return j;
}

Json encode_json(const Circuit &circ, const VerifyReport &rep) {
    Json j = header("encode");
    j["qubits"] = circ.num_qubits;
    j["blocks"] = circ.q;
    j["lambda"] = circ.lambda;
    j["block_count"] = circ.block_count;
    j["gates"] = circ.gates.size();
    Json counts;
    for (GateKind k : {GateKind::H, GateKind::S, GateKind::X, GateKind::Z, GateKind::CX, GateKind::CY, GateKind::CZ}) {
        counts[gate_name(k)] = circ.count(k);
    }
    j["gate_counts"] = counts;
    Json layout = Json::array();
    for (const auto &iq : circ.layout) {
        layout.push_back({{"block", iq.s}, {"logical", iq.r}, {"qubit", iq.qubit + 1}});
    }
    j["info_qubits"] = layout;
    j["verify"] = {
        {"ok", rep.ok},
        {"generator_checks", rep.generator_checks},
        {"generator_failures", rep.generator_failures},
        {"logical_checks", rep.logical_checks},
        {"logical_failures", rep.logical_failures},
        {"online_ok", rep.online_ok},
        {"max_reach", rep.max_reach},
        {"symplectic_ok", rep.symplectic_ok},
        {"failures", rep.failures},
    };
    j["circuit"] = circ.to_text();
    return j;
}

Json decode_json(const CodeSpec &c, const ChannelModel &ch, const SyndromeStream &s, const DecodeResult &res,
                 const DecodeOptions &opts) {
    Json j = header("decode");
    j["n"] = c.n;
    j["k"] = c.k;
    j["m"] = c.m;
    j["blocks"] = s.q;
    j["qubits"] = res.estimate.num_qubits();
    j["channel"] = channel_json(ch);
    j["tie"] = tie_name(opts.tie);
    j["seed"] = opts.seed;
    j["traceback"] = opts.traceback_depth;
    j["terminated"] = opts.terminated;
    j["syndrome_weight"] = s.weight();
    j["estimate"] = res.estimate.to_letters();
    j["estimate_weight"] = res.estimate.weight();
    j["loglik"] = real(res.loglik);
    j["terminated_fallback"] = res.terminated_fallback;
    if (res.truncated_estimate) {
        j["truncated_estimate"] = res.truncated_estimate->to_letters();
        j["truncated_agrees"] = res.truncated_agrees;
        Json conv = Json::array();
        for (bool b : res.per_block_converged) {
            conv.push_back(b);
        }
        j["per_block_converged"] = conv;
    } else {
        j["truncated_estimate"] = nullptr;
        j["truncated_agrees"] = nullptr;
        j["per_block_converged"] = nullptr;
    }
    return j;
}

Json simulate_json(const CodeSpec &c, const RunSummary &sum, bool timing, bool records) {
    const SimulationConfig &cfg = sum.config;
    Json j = header("simulate");
    j["n"] = c.n;
    j["k"] = c.k;
    j["m"] = c.m;
    j["blocks"] = cfg.q;
    j["qubits"] = sum.num_qubits;
    j["channel"] = channel_json(cfg.channel);
    j["seed"] = cfg.seed;
    j["tie"] = tie_name(cfg.tie);
    j["traceback"] = cfg.traceback;
    j["terminated"] = cfg.terminated;
    j["trials"] = sum.trials;
    j["failures"] = sum.failures;
    j["logical_error_rate"] = sum.logical_error_rate;
    if (cfg.traceback > 0) {
        j["truncation_agreements"] = sum.truncation_agreements;
        j["truncation_agreement_rate"] = sum.truncation_agreement_rate;
    } else {
        j["truncation_agreements"] = nullptr;
        j["truncation_agreement_rate"] = nullptr;
    }
    j["zbar_missing"] = sum.zbar_missing;
    if (timing) {
        j["wall_seconds"] = sum.wall_seconds;
    }
    if (records) {
        Json rs = Json::array();
        for (const TrialRecord &r : sum.records) {
            rs.push_back({
                {"seed", r.seed},
                {"error_weight", r.error_weight},
                {"syndrome_weight", r.syndrome_weight},
                {"loglik", real(r.loglik)},
                {"success", r.success},
                {"violated", r.violated},
                {"traceback_agrees", r.traceback_agrees},
            });
        }
        j["records"] = rs;
    }
    return j;
}

void check_schema(const Json &j) {
    auto need = [&](std::initializer_list<const char *> keys) {
        for (const char *k : keys) {
            if (!j.contains(k)) {
                throw std::invalid_argument(std::string("missing key: ") + k);
            }
        }
    };
    need({"schema", "command"});
    if (j["schema"] != kSchemaVersion) {
        throw std::invalid_argument("unsupported schema version");
    }
    std::string cmd = j["command"];
    if (cmd == "validate") {
        need({"code", "ok", "shape_ok", "support_ok", "commute_ok", "independent", "window", "pairs", "messages"});
    } else if (cmd == "standard-form") {
        need({"n", "k", "m", "r", "diagonal_ok", "col_perm", "signs", "matrix", "conditioning", "lambda"});
    } else if (cmd == "logicals") {
        need({"n", "k", "m", "logicals"});
    } else if (cmd == "check-catastrophic") {
        need({"n", "k", "m", "conditioning", "catastrophic"});
    } else if (cmd == "encode") {
        need({"qubits", "blocks", "lambda", "gates", "gate_counts", "info_qubits", "verify", "circuit"});
    } else if (cmd == "decode") {
        need({"blocks", "qubits", "channel", "tie", "seed", "traceback", "terminated", "estimate", "loglik",
              "truncated_estimate", "per_block_converged"});
    } else if (cmd == "simulate") {
        need({"blocks", "qubits", "channel", "seed", "traceback", "trials", "failures", "logical_error_rate",
              "truncation_agreement_rate"});
    } else {
        throw std::invalid_argument("unknown command: " + cmd);
    }
}

}  // namespace qconv::report
