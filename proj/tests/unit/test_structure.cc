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

#include <random>

#include "oracles.h"
#include "qconv/bits.h"
#include "qconv/errors.h"
#include "qconv/structure.h"

namespace qconv {
namespace {

// Shifted copies of the operators that fit on N qubits.
std::vector<SymplecticVector> shifted_rows(const std::vector<PauliPoly> &ops, size_t N, int64_t max_shift) {
    std::vector<SymplecticVector> rows;
    for (const PauliPoly &p : ops) {
        for (int64_t s = 0; s <= max_shift; s++) {
            if (delay(p, s).support_end() <= N) {
                rows.push_back(expand(p, s, N));
            }
        }
    }
    return rows;
}

bool span_contains(const std::vector<SymplecticVector> &rows, const SymplecticVector &v) {
    BitMatrix m(2 * v.num_qubits());
    for (const auto &r : rows) {
        m.push_row(r.flattened());
    }
    return in_span(rref(m), v.flattened());
}

// Every op, shifted to the middle of a wide window, lies in the GF(2) span of
// the shifted rows of the other set.
void expect_mutual_span(const std::vector<PauliPoly> &a, const std::vector<PauliPoly> &b, size_t n) {
    const size_t blocks = 14;
    const size_t N = n * blocks;
    auto ra = shifted_rows(a, N, blocks), rb = shifted_rows(b, N, blocks);
    for (const PauliPoly &p : a) {
        EXPECT_TRUE(span_contains(rb, expand(p, 6, N))) << p.to_vector_string();
    }
    for (const PauliPoly &p : b) {
        EXPECT_TRUE(span_contains(ra, expand(p, 6, N))) << p.to_vector_string();
    }
}

std::vector<PauliPoly> standard_rows(const StandardForm &sf) {
    std::vector<PauliPoly> rows;
    for (size_t i = 0; i < sf.n - sf.k; i++) {
        rows.push_back(sf.row(i));
    }
    return rows;
}

TEST(StandardForm, WorkedExampleExact) {
    StandardForm sf = standard_form(oracle::qcc5());
    EXPECT_EQ(sf.r, 4u);
    EXPECT_TRUE(sf.diagonal_ok);
    EXPECT_EQ(sf.matrix().to_string(5),
              "D 0 0 0 1 | 0 D 0 1 0\n"
              "0 1 0 0 1 | 1+D 1 1 1 1\n"
              "0 0 1 0 1 | D 1 1 0 1\n"
              "0 0 0 1 1 | D 0 1 0 0\n");
    EXPECT_EQ(sf.col_perm, (std::vector<size_t>{0, 1, 2, 3, 4}));
    EXPECT_EQ(sf.signs, (std::vector<int>{1, 1, 1, 1}));
}

TEST(StandardForm, RowSpanMatchesGenerators) {
    for (const CodeSpec &c : {oracle::qcc5(), oracle::qcc5_y(), oracle::catastrophic21()}) {
        StandardForm sf = standard_form(c);
        expect_mutual_span(standard_rows(sf), c.gens, c.n);
    }
}

TEST(StandardForm, RandomEquivalentCodes) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; t++) {
        CodeSpec c = oracle::random_equivalent_code(rng, t % 2 ? oracle::qcc5() : oracle::qcc5_y());
        ASSERT_TRUE(validate(c).ok);
        StandardForm sf = standard_form(c);
        expect_mutual_span(standard_rows(sf), c.gens, c.n);
    }
}

TEST(StandardForm, AlreadyStandardIsUnchanged) {
    CodeSpec c = CodeSpec::from_strings(2, 1, 0, {"XZ"});
    StandardForm sf = standard_form(c);
    EXPECT_EQ(sf.col_perm, (std::vector<size_t>{0, 1}));
    EXPECT_EQ(sf.matrix().to_string(2), "1 0 | 0 1\n");
}

TEST(Logicals, WorkedExample) {
    StandardForm sf = standard_form(oracle::qcc5());
    LogicalOps lo = derive_logicals(sf);
    ASSERT_EQ(lo.xbar.size(), 1u);
    ASSERT_EQ(lo.zbar.size(), 1u);
    EXPECT_EQ(lo.xbar[0].to_vector_string(), "(00001|01100)");
    EXPECT_EQ(lo.zbar[0].to_vector_string(), "(00000|D,1,1,1,1)");
    EXPECT_TRUE(lo.conditioning.is_one());
    EXPECT_EQ(lo.lambda, 1);
    EXPECT_EQ(lo.info_blocks, (std::vector<size_t>{0}));
    EXPECT_EQ(lo.info_columns, (std::vector<size_t>{4}));
}

// Independent checks: logicals commute with every generator shift, X-bar and
// Z-bar anticommute only at zero relative shift, and neither lies in the
// stabilizer span.
void expect_logical_algebra(const CodeSpec &c, const LogicalOps &lo) {
    for (const auto &g : c.gens) {
        for (const auto &x : lo.xbar) {
            EXPECT_TRUE(gen_commute(x, g));
        }
        for (const auto &z : lo.zbar) {
            EXPECT_TRUE(gen_commute(z, g));
        }
    }
    for (size_t a = 0; a < lo.zbar.size(); a++) {
        for (size_t b = 0; b < lo.xbar.size(); b++) {
            for (int64_t r = 0; r < 4; r++) {
                for (int64_t s = 0; s < 4; s++) {
                    bool expect = a == b && r == s;
                    EXPECT_EQ(oracle::shifted_anticommute(lo.xbar[b], r, lo.zbar[a], s), expect);
                }
            }
        }
    }
    for (size_t a = 0; a < lo.xbar.size(); a++) {
        for (size_t b = 0; b < lo.xbar.size(); b++) {
            EXPECT_TRUE(gen_commute(lo.xbar[a], lo.xbar[b]));
        }
    }
}

TEST(Logicals, AlgebraOnSeveralCodes) {
    for (const CodeSpec &c : {oracle::qcc5(), oracle::qcc5_y()}) {
        LogicalOps lo = derive_logicals(standard_form(c));
        expect_logical_algebra(c, lo);
        const size_t N = c.n * 10;
        auto stab = shifted_rows(c.gens, N, 10);
        for (const auto &x : lo.xbar) {
            EXPECT_FALSE(span_contains(stab, expand(x, 4, N)));
        }
    }
}

TEST(Logicals, AlgebraOnRandomEquivalentCodes) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; t++) {
        CodeSpec c = oracle::random_equivalent_code(rng, oracle::qcc5());
        StandardForm sf = standard_form(c);
        if (!sf.diagonal_ok) {
            continue;
        }
        LogicalOps lo = derive_xbar(sf);
        if (is_monomial(lo.conditioning)) {
            lo = derive_zbar(sf, lo);
        }
        expect_logical_algebra(c, lo);
    }
}

TEST(Logicals, CatastrophicExample) {
    CodeSpec c = oracle::catastrophic21();
    StandardForm sf = standard_form(c);
    EXPECT_EQ(sf.r, 0u);
    EXPECT_EQ(sf.matrix().to_string(2), "0 0 | 1+D 1\n");
    LogicalOps lo = derive_xbar(sf);
    EXPECT_EQ(lo.conditioning, Poly::parse("1+D"));
    EXPECT_EQ(lo.lambda, 1);
    ASSERT_EQ(lo.xbar.size(), 1u);
    EXPECT_EQ(lo.xbar[0].to_vector_string(), "(D,1+D|00)");
    // The entry on the Z-pivot column must be D: with 1 the operator fails to
    // commute with the generator shifted by one block.
    EXPECT_EQ(lo.xbar[0].x()[0], Poly::parse("D"));
    EXPECT_TRUE(gen_commute(lo.xbar[0], c.gens[0]));
    PauliPoly wrong = lo.xbar[0];
    wrong.x()[0] = Poly::one();
    EXPECT_FALSE(gen_commute(wrong, c.gens[0]));
    EXPECT_THROW(derive_zbar(sf, lo), CatastrophicCode);
    LogicalOps all = derive_logicals(sf);
    EXPECT_TRUE(all.zbar.empty());
    EXPECT_FALSE(all.has_zbar());
}

TEST(Catastrophic, Predicate) {
    EXPECT_FALSE(is_catastrophic(oracle::qcc5()));
    EXPECT_FALSE(is_catastrophic(oracle::qcc5_y()));
    EXPECT_TRUE(is_catastrophic(oracle::catastrophic21()));
    EXPECT_TRUE(is_catastrophic(load_code_file(oracle::example_path("catastrophic21.code"))));
}

TEST(Logicals, CountLogicals) {
    CodeSpec c = oracle::qcc5();
    LogicalOps lo = derive_logicals(standard_form(c));
    LogicalCount lc = count_logicals(c, lo, 10);
    EXPECT_EQ(lc.protected_qubits, 10u);
    EXPECT_EQ(lc.sacrificed, 5u);
    EXPECT_EQ(count_logicals(c, lo, 2).protected_qubits, 2u);
    EXPECT_THROW(count_logicals(c, lo, 1), std::invalid_argument);
}

TEST(StandardForm, SignsFollowGenerators) {
    CodeSpec c = oracle::qcc5();
    c.signs = {1, -1, 1, -1};
    StandardForm sf = standard_form(c);
    EXPECT_EQ(sf.signs.size(), 4u);
    // The first standard row equals generator 4 alone.
    EXPECT_EQ(sf.signs[0], -1);
}

}  // namespace
}  // namespace qconv
