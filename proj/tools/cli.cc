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

#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "qconv/channel.h"
#include "qconv/circuit.h"
#include "qconv/code.h"
#include "qconv/decoder.h"
#include "qconv/errors.h"
#include "qconv/report.h"
#include "qconv/simulate.h"
#include "qconv/structure.h"

namespace qconv::cli {

namespace {

using report::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    uint64_t seed = 0;
    std::string output;
    size_t threads = 1;
    bool timing = false;
};

struct CodeArg {
    std::string positional;
    std::string option;

    void attach(CLI::App *sub) {
        sub->add_option("file", positional, "Code file");
        sub->add_option("--code", option, "Code file");
    }
    CodeSpec load() const {
        const std::string &path = option.empty() ? positional : option;
        if (path.empty()) {
            throw UsageError("a code file is required");
        }
        if (!std::ifstream(path)) {
            throw UsageError("cannot open code file " + path);
        }
        return load_code_file(path);
    }
};

struct ChannelArg {
    std::string kind = "depolarizing";
    double p = 0.0;
    double px = 0.0, py = 0.0, pz = 0.0;

    void attach(CLI::App *sub) {
        sub->add_option("--channel", kind, "depolarizing or pauli")
            ->check(CLI::IsMember({"depolarizing", "pauli"}));
        sub->add_option("--p", p, "Depolarizing probability");
        sub->add_option("--px", px, "X probability (pauli channel)");
        sub->add_option("--py", py, "Y probability (pauli channel)");
        sub->add_option("--pz", pz, "Z probability (pauli channel)");
    }
    ChannelModel build() const {
        try {
            return kind == "pauli" ? pauli_channel(px, py, pz) : depolarizing(p);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
};

// Writes the main output to -o when given, else to out.
void emit(const Globals &g, std::ostream &out, const std::string &text) {
    if (g.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(g.output);
    if (!f) {
        throw UsageError("cannot write " + g.output);
    }
    f << text;
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

std::string format_real(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

std::string indent_lines(const std::string &text) {
    std::ostringstream out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out << "  " << line << "\n";
    }
    return out.str();
}

std::string join(const std::vector<size_t> &v) {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? " " : "") + std::to_string(v[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Globals &g, const CodeSpec &c, std::ostream &out) {
    ValidationReport rep = validate(c);
    if (g.json) {
        emit(g, out, dump(report::validate_json(c, rep)));
    } else {
        std::ostringstream s;
        s << "code (" << c.n << "," << c.k << "," << c.m << "), " << c.num_gens() << " generators\n";
        s << "shape:        " << (rep.shape_ok ? "ok" : "FAIL") << "\n";
        s << "support:      " << (rep.support_ok ? "ok" : "FAIL") << "\n";
        s << "commutation:  " << (rep.commute_ok ? "ok" : "FAIL") << "\n";
        s << "independence: " << (rep.independent ? "ok" : "FAIL") << " (rank " << rep.window_rank << " of "
          << rep.window_rows << " rows over " << rep.window_blocks << " blocks)\n";
        for (const auto &m : rep.messages) {
            s << "  " << m << "\n";
        }
        s << (rep.ok ? "valid\n" : "invalid\n");
        emit(g, out, s.str());
    }
    return rep.ok ? kExitOk : kExitFailure;
}

int cmd_standard_form(const Globals &g, const CodeSpec &c, std::ostream &out) {
    StandardForm sf = standard_form(c);
    std::optional<LogicalOps> lo;
    if (sf.diagonal_ok) {
        lo = derive_logicals(sf);
    }
    if (g.json) {
        emit(g, out, dump(report::standard_form_json(sf, lo ? &*lo : nullptr)));
    } else {
        std::ostringstream s;
        s << "standard form (columns in standard order):\n" << indent_lines(sf.matrix().to_string(sf.n));
        s << "r = " << sf.r << "\n";
        s << "column permutation (0-based physical column per standard position): " << join(sf.col_perm) << "\n";
        s << "diagonal: " << (sf.diagonal_ok ? "yes" : "no") << "\n";
        if (lo) {
            s << "Λ = " << lo->conditioning.to_string() << "\n";
            s << "λ = " << lo->lambda << "\n";
        }
        emit(g, out, s.str());
    }
    return sf.diagonal_ok ? kExitOk : kExitFailure;
}

int cmd_logicals(const Globals &g, const CodeSpec &c, std::ostream &out) {
    StandardForm sf = standard_form(c);
    if (!sf.diagonal_ok) {
        throw std::domain_error("standard form is not diagonal; logical operators unavailable");
    }
    LogicalOps lo = derive_logicals(sf);
    if (g.json) {
        emit(g, out, dump(report::logicals_json(c, lo)));
    } else {
        std::ostringstream s;
        bool many = lo.k > 1;
        for (size_t a = 0; a < lo.xbar.size(); a++) {
            std::string idx = many ? "[" + std::to_string(a) + "]" : "";
            s << "X̄" << idx << " = " << lo.xbar[a].to_vector_string() << "\n";
            if (a < lo.zbar.size()) {
                s << "Z̄" << idx << " = " << lo.zbar[a].to_vector_string() << "\n";
            }
        }
        if (!lo.has_zbar()) {
            s << "Z̄ unavailable: the code is catastrophic\n";
        }
        s << "Λ = " << lo.conditioning.to_string() << "\n";
        s << "λ = " << lo.lambda << "\n";
        emit(g, out, s.str());
    }
    return kExitOk;
}

int cmd_check_catastrophic(const Globals &g, const CodeSpec &c, std::ostream &out) {
    StandardForm sf = standard_form(c);
    if (!sf.diagonal_ok) {
        throw std::domain_error("standard form is not diagonal");
    }
    LogicalOps lo = derive_xbar(sf);
    if (g.json) {
        emit(g, out, dump(report::catastrophic_json(c, lo)));
    } else {
        bool cat = !is_monomial(lo.conditioning);
        emit(g, out, std::string(cat ? "catastrophic" : "non-catastrophic") + " (Λ = " + lo.conditioning.to_string() + ")\n");
    }
    return kExitOk;
}

int cmd_encode(const Globals &g, const CodeSpec &c, size_t q, bool simplify, std::ostream &out, std::ostream &err) {
    StandardForm sf = standard_form(c);
    LogicalOps lo = derive_logicals(sf);
    Circuit circ = build_encoder(c, sf, lo, q, simplify);
    VerifyReport rep = verify_encoder(circ, c, lo, q);
    if (!g.output.empty()) {
        std::ofstream f(g.output);
        if (!f) {
            throw UsageError("cannot write " + g.output);
        }
        f << circ.to_text();
    }
    if (g.json) {
        out << dump(report::encode_json(circ, rep));
    } else if (g.output.empty()) {
        out << circ.to_text();
    } else {
        out << "qubits " << circ.num_qubits << ", gates " << circ.gates.size() << ", verification "
            << (rep.ok ? "passed" : "FAILED") << "\n";
    }
    for (const auto &f : rep.failures) {
        err << "verify: " << f << "\n";
    }
    return rep.ok ? kExitOk : kExitFailure;
}

int cmd_decode(const Globals &g, const CodeSpec &c, const ChannelModel &ch, const std::string &syn_path,
               const DecodeOptions &opts, std::ostream &out) {
    std::ifstream f(syn_path);
    if (!f) {
        throw UsageError("cannot read " + syn_path);
    }
    std::stringstream buf;
    buf << f.rdbuf();
    SyndromeStream s = SyndromeStream::parse_text(buf.str());
    if (s.q > 0 && s.r != c.num_gens()) {
        throw UsageError("syndrome lines have " + std::to_string(s.r) + " entries, expected " +
                         std::to_string(c.num_gens()));
    }
    s.r = c.num_gens();
    DecodeResult res = viterbi_decode(c, ch, s, opts);
    if (g.json) {
        emit(g, out, dump(report::decode_json(c, ch, s, res, opts)));
    } else {
        std::ostringstream o;
        o << "estimate: " << res.estimate.to_letters() << "\n";
        o << "weight:   " << res.estimate.weight() << "\n";
        o << "loglik:   " << format_real(res.loglik) << "\n";
        if (res.truncated_estimate) {
            o << "truncated traceback (depth " << opts.traceback_depth << "): "
              << (res.truncated_agrees ? "agrees" : "differs") << "\n";
        }
        if (res.terminated_fallback) {
            o << "terminated mode: no identity-ending survivor, used the best open survivor\n";
        }
        emit(g, out, o.str());
    }
    return kExitOk;
}

int cmd_simulate(const Globals &g, const CodeSpec &c, const SimulationConfig &cfg, bool records, std::ostream &out) {
    RunSummary sum = run_simulation(c, cfg);
    if (g.json) {
        emit(g, out, dump(report::simulate_json(c, sum, g.timing, records)));
    } else {
        std::ostringstream o;
        o << "trials:             " << sum.trials << "\n";
        o << "blocks:             " << cfg.q << " (" << sum.num_qubits << " qubits)\n";
        o << "seed:               " << cfg.seed << "\n";
        o << "logical failures:   " << sum.failures << "\n";
        o << "logical error rate: " << format_real(sum.logical_error_rate) << "\n";
        if (cfg.traceback > 0) {
            o << "traceback depth " << cfg.traceback << " agreement: " << format_real(sum.truncation_agreement_rate)
              << "\n";
        }
        if (sum.zbar_missing) {
            o << "warning: Z̄ unavailable, only X̄ checked\n";
        }
        if (g.timing) {
            o << "wall time:          " << format_real(sum.wall_seconds) << " s\n";
        }
        emit(g, out, o.str());
    }
    return kExitOk;
}

int cmd_sample(const Globals &g, const CodeSpec &c, const ChannelModel &ch, size_t q, const std::string &error_out,
               std::ostream &out) {
    SymplecticVector e = sample_error(ch, c.n * q + c.m, g.seed);
    SyndromeStream s = extract_syndromes(c, e, q);
    if (!error_out.empty()) {
        std::ofstream f(error_out);
        if (!f) {
            throw UsageError("cannot write " + error_out);
        }
        f << e.to_letters() << "\n";
    }
    emit(g, out, s.to_text());
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum convolutional code toolkit", "qconv"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("-o,--output", g.output, "Output file");
    app.add_option("--threads", g.threads, "Worker threads for simulate")->check(CLI::PositiveNumber);
    app.add_flag("--timing", g.timing, "Report wall time");

    CodeArg code;
    auto with_code = [&](const char *name, const char *desc) {
        CLI::App *sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        code.attach(sub);
        return sub;
    };

    CLI::App *validate_cmd = with_code("validate", "Check shape, support, commutation and independence");
    CLI::App *sf_cmd = with_code("standard-form", "Print the standard polynomial form");
    CLI::App *log_cmd = with_code("logicals", "Print the encoded logical operators");
    CLI::App *cat_cmd = with_code("check-catastrophic", "Report whether the code is catastrophic");

    size_t blocks = 1;
    bool simplify = false;
    CLI::App *enc_cmd = with_code("encode", "Build and verify the encoding circuit");
    enc_cmd->add_option("--blocks,-q", blocks, "Information blocks")->required()->check(CLI::PositiveNumber);
    enc_cmd->add_flag("--simplify", simplify, "Drop gates acting on known |0> qubits");

    ChannelArg chan;
    std::string syn_path;
    size_t traceback = 0;
    bool terminated = false;
    std::string tie = "lexicographic";
    CLI::App *dec_cmd = with_code("decode", "Viterbi decoding of a syndrome file");
    dec_cmd->add_option("--syndromes", syn_path, "Syndrome file")->required();
    chan.attach(dec_cmd);
    dec_cmd->add_option("--traceback", traceback, "Truncated traceback depth (0 = off)");
    dec_cmd->add_flag("--terminated", terminated, "Force the final overlap to the identity");
    dec_cmd->add_option("--tie", tie, "Tie-break: lexicographic or random")
        ->check(CLI::IsMember({"lexicographic", "random"}));

    size_t trials = 1;
    bool records = false;
    CLI::App *sim_cmd = with_code("simulate", "Monte Carlo logical error rate");
    sim_cmd->add_option("--blocks,-q", blocks, "Information blocks")->required()->check(CLI::PositiveNumber);
    sim_cmd->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
    chan.attach(sim_cmd);
    sim_cmd->add_option("--traceback", traceback, "Truncated traceback depth (0 = off)");
    sim_cmd->add_flag("--terminated", terminated, "Force the final overlap to the identity");
    sim_cmd->add_option("--tie", tie, "Tie-break: lexicographic or random")
        ->check(CLI::IsMember({"lexicographic", "random"}));
    sim_cmd->add_flag("--records", records, "Include per-trial records in JSON");

    std::string error_out;
    CLI::App *sample_cmd = with_code("sample", "Sample an error and print its syndromes");
    sample_cmd->add_option("--blocks,-q", blocks, "Information blocks")->required()->check(CLI::PositiveNumber);
    chan.attach(sample_cmd);
    sample_cmd->add_option("--error-out", error_out, "Write the sampled error letters here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "qconv: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        CodeSpec c = code.load();
        TieBreak tb = tie == "random" ? TieBreak::Random : TieBreak::Lexicographic;
        if (validate_cmd->parsed()) {
            return cmd_validate(g, c, out);
        }
        ValidationReport rep = validate(c);
        if (!rep.ok) {
            err << "qconv: invalid code";
            for (const auto &m : rep.messages) {
                err << "; " << m;
            }
            err << "\n";
            return kExitFailure;
        }
        if (sf_cmd->parsed()) {
            return cmd_standard_form(g, c, out);
        }
        if (log_cmd->parsed()) {
            return cmd_logicals(g, c, out);
        }
        if (cat_cmd->parsed()) {
            return cmd_check_catastrophic(g, c, out);
        }
        if (enc_cmd->parsed()) {
            return cmd_encode(g, c, blocks, simplify, out, err);
        }
        if (dec_cmd->parsed()) {
            DecodeOptions opts;
            opts.tie = tb;
            opts.seed = g.seed;
            opts.traceback_depth = traceback;
            opts.terminated = terminated;
            return cmd_decode(g, c, chan.build(), syn_path, opts, out);
        }
        if (sim_cmd->parsed()) {
            SimulationConfig cfg;
            cfg.q = blocks;
            cfg.channel = chan.build();
            cfg.trials = trials;
            cfg.seed = g.seed;
            cfg.traceback = traceback;
            cfg.terminated = terminated;
            cfg.tie = tb;
            cfg.threads = g.threads;
            return cmd_simulate(g, c, cfg, records, out);
        }
        if (sample_cmd->parsed()) {
            return cmd_sample(g, c, chan.build(), blocks, error_out, out);
        }
    } catch (const UsageError &e) {
        err << "qconv: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "qconv: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "qconv: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace qconv::cli
