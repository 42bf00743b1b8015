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

#include <algorithm>
#include <random>

#include "oracles.h"
#include "qconv/circuit.h"
#include "qconv/errors.h"
#include "qconv/structure.h"

namespace qconv {
namespace {

struct Built {
    CodeSpec code;
    StandardForm sf;
    LogicalOps lo;
};

Built prepare(const CodeSpec &c) {
    Built b{c, standard_form(c), {}};
    b.lo = derive_logicals(b.sf);
    return b;
}

TEST(Encoder, WorkedExampleVerifies) {
    Built b = prepare(oracle::qcc5());
    for (size_t q = 1; q <= 4; q++) {
        for (bool simplify : {false, true}) {
            Circuit circ = build_encoder(b.code, b.sf, b.lo, q, simplify);
            EXPECT_EQ(circ.num_qubits, 5 * (q + 2));
            VerifyReport rep = verify_encoder(circ, b.code, b.lo, q);
            EXPECT_TRUE(rep.ok) << "q=" << q << " simplify=" << simplify;
            EXPECT_EQ(rep.generator_checks, 4 * (q + 1));
            EXPECT_EQ(rep.generator_failures, 0u);
            EXPECT_EQ(rep.logical_checks, q);
            EXPECT_EQ(rep.logical_failures, 0u);
            EXPECT_TRUE(rep.online_ok);
            EXPECT_LE(rep.max_reach, 2u);
            EXPECT_TRUE(rep.symplectic_ok);
        }
    }
}

TEST(Encoder, SignedAndYVariantsVerify) {
    CodeSpec signed5 = oracle::qcc5();
    signed5.signs = {1, -1, 1, -1};
    for (const CodeSpec &c : {signed5, oracle::qcc5_y()}) {
        Built b = prepare(c);
        for (bool simplify : {false, true}) {
            Circuit circ = build_encoder(b.code, b.sf, b.lo, 3, simplify);
            EXPECT_TRUE(verify_encoder(circ, b.code, b.lo, 3).ok);
        }
    }
}

TEST(Encoder, RandomEquivalentCodesVerify) {
    std::mt19937_64 rng(51);
    int verified = 0;
    for (int t = 0; t < 120; t++) {
        CodeSpec base = t % 3 == 0 ? oracle::qcc5() : t % 3 == 1 ? oracle::qcc5_y() : oracle::catastrophic21();
        CodeSpec c = oracle::random_equivalent_code(rng, base);
        StandardForm sf = standard_form(c);
        if (!sf.diagonal_ok) {
            continue;
        }
        LogicalOps lo = derive_logicals(sf);
        for (size_t q = 1; q <= 3; q++) {
            Circuit circ = build_encoder(c, sf, lo, q, t % 2 == 0);
            VerifyReport rep = verify_encoder(circ, c, lo, q);
            EXPECT_EQ(rep.generator_failures, 0u) << serialize_code(c) << "q=" << q;
            EXPECT_EQ(rep.logical_failures, 0u) << serialize_code(c) << "q=" << q;
            EXPECT_EQ(rep.logical_checks, q * c.k);
            EXPECT_TRUE(rep.symplectic_ok);
            // A standard row spanning more than lambda + 2 blocks cannot meet the bound.
            if (sf.max_row_degree() <= lo.lambda + 1) {
                EXPECT_TRUE(rep.online_ok) << serialize_code(c) << "reach " << rep.max_reach;
            }
            verified++;
        }
    }
    EXPECT_GT(verified, 150);
}

TEST(Encoder, NegativeZOnlyRows) {
    CodeSpec c = CodeSpec::from_strings(2, 1, 1, {"ZZZ"});
    c.signs = {-1};
    Built b = prepare(c);
    for (size_t q = 1; q <= 4; q++) {
        EXPECT_TRUE(verify_encoder(build_encoder(b.code, b.sf, b.lo, q), b.code, b.lo, q).ok) << q;
    }
}

TEST(Encoder, StandardRowsWithPhaseFromYLetters) {
    CodeSpec c = CodeSpec::from_strings(5, 1, 5, {"XXIYYIIIII", "XYYIZIIIII", "ZYZIIIIIYI", "IXZIIIIIXZ"});
    Built b = prepare(c);
    EXPECT_TRUE(std::count(b.sf.signs.begin(), b.sf.signs.end(), -1) > 0);
    for (size_t q = 1; q <= 3; q++) {
        for (bool simplify : {false, true}) {
            VerifyReport rep = verify_encoder(build_encoder(b.code, b.sf, b.lo, q, simplify), b.code, b.lo, q);
            EXPECT_TRUE(rep.ok) << q << (rep.failures.empty() ? "" : rep.failures[0]);
        }
    }
}

TEST(Encoder, BoundaryRowsBeyondTheLastStep) {
    // Generator 4 needs standard row 1 one block past the last projection step.
    CodeSpec c = CodeSpec::from_strings(5, 1, 2, {"ZYZIYII", "IXXZYII", "IIXYXZI", "IIZYIYX"});
    c.signs = {1, -1, -1, -1};
    Built b = prepare(c);
    for (size_t q = 1; q <= 3; q++) {
        VerifyReport rep = verify_encoder(build_encoder(b.code, b.sf, b.lo, q), b.code, b.lo, q);
        EXPECT_TRUE(rep.ok) << q << (rep.failures.empty() ? "" : rep.failures[0]);
    }
}

TEST(Encoder, CatastrophicCodeStillEncodes) {
    Built b = prepare(oracle::catastrophic21());
    Circuit circ = build_encoder(b.code, b.sf, b.lo, 3);
    EXPECT_TRUE(verify_encoder(circ, b.code, b.lo, 3).ok);
}

TEST(Encoder, GateCountAffineInBlocks) {
    Built b = prepare(oracle::qcc5());
    for (bool simplify : {false, true}) {
        std::vector<long> counts;
        for (size_t q = 2; q <= 8; q++) {
            counts.push_back((long)build_encoder(b.code, b.sf, b.lo, q, simplify).gates.size());
        }
        for (size_t i = 2; i < counts.size(); i++) {
            EXPECT_EQ(counts[i] - counts[i - 1], counts[1] - counts[0]);
        }
    }
}

TEST(Encoder, SimplifyOnlyRemoves) {
    Built b = prepare(oracle::qcc5());
    Circuit full = build_encoder(b.code, b.sf, b.lo, 3, false);
    Circuit simp = simplify_circuit(full);
    EXPECT_LT(simp.gates.size(), full.gates.size());
    // simp is a subsequence of full.
    size_t j = 0;
    for (const Gate &g : full.gates) {
        if (j < simp.gates.size() && simp.gates[j] == g) {
            j++;
        }
    }
    EXPECT_EQ(j, simp.gates.size());
}

TEST(Encoder, RejectsBadArguments) {
    Built b = prepare(oracle::qcc5());
    EXPECT_THROW(build_encoder(b.code, b.sf, b.lo, 0), std::invalid_argument);
}

TEST(Circuit, TextRoundTrip) {
    Built b = prepare(oracle::qcc5());
    Circuit circ = build_encoder(b.code, b.sf, b.lo, 3);
    std::string text = circ.to_text();
    Circuit back = Circuit::parse_text(text);
    EXPECT_EQ(back.num_qubits, circ.num_qubits);
    EXPECT_EQ(back.gates, circ.gates);
    EXPECT_EQ(back.to_text(), text);
    EXPECT_EQ(text.substr(0, 9), "qubits 25");
}

TEST(Circuit, ParseErrors) {
    EXPECT_THROW(Circuit::parse_text("H 1\n"), ParseError);
    EXPECT_THROW(Circuit::parse_text("qubits 2\nH 3\n"), ParseError);
    EXPECT_THROW(Circuit::parse_text("qubits 2\nCX 1\n"), ParseError);
    EXPECT_THROW(Circuit::parse_text("qubits 2\nFOO 1\n"), ParseError);
    EXPECT_THROW(Circuit::parse_text("qubits 2\nCZ 1 1\n"), ParseError);
    Circuit c = Circuit::parse_text("qubits 3\nH 1\nCZ 1 3\nS 2\n");
    ASSERT_EQ(c.gates.size(), 3u);
    EXPECT_EQ(c.gates[1], (Gate{GateKind::CZ, 0, 2}));
}

// Removing or altering any single gate of a small encoder must be detected.
TEST(Circuit, VerifierCatchesMutations) {
    Built b = prepare(oracle::qcc5());
    Circuit circ = build_encoder(b.code, b.sf, b.lo, 1, true);
    size_t caught = 0, total = 0;
    for (size_t i = 0; i < circ.gates.size(); i++) {
        Circuit m = circ;
        m.gates.erase(m.gates.begin() + i);
        total++;
        caught += verify_encoder(m, b.code, b.lo, 1).ok ? 0 : 1;
    }
    for (size_t i = 0; i < circ.gates.size(); i++) {
        if (!circ.gates[i].two_qubit()) {
            continue;
        }
        Circuit m = circ;
        std::swap(m.gates[i].a, m.gates[i].b);
        if (m.gates[i].kind == GateKind::CZ) {
            continue;  // symmetric
        }
        total++;
        caught += verify_encoder(m, b.code, b.lo, 1).ok ? 0 : 1;
    }
    EXPECT_EQ(caught, total);
}

}  // namespace
}  // namespace qconv
