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
#include "qconv/code.h"
#include "qconv/errors.h"

namespace qconv {
namespace {

TEST(Code, ParsesWorkedExampleFile) {
    CodeSpec c = load_code_file(oracle::example_path("qcc5.code"));
    EXPECT_EQ(c.n, 5u);
    EXPECT_EQ(c.k, 1u);
    EXPECT_EQ(c.m, 2u);
    ASSERT_EQ(c.gens.size(), 4u);
    EXPECT_EQ(c.gens[0].to_letters(7), "ZXXZIII");
    EXPECT_EQ(c.matrix().to_string(5),
              "0 1 1 0 0 | 1 0 0 1 0\n"
              "0 0 1 1 0 | 0 1 0 0 1\n"
              "0 0 0 1 1 | D 0 1 0 0\n"
              "D 0 0 0 1 | 0 D 0 1 0\n");
    EXPECT_EQ(c.overlap_blocks(), 1u);
}

TEST(Code, SerializeRoundTrip) {
    for (const char *name : {"qcc5.code", "catastrophic21.code"}) {
        CodeSpec c = load_code_file(oracle::example_path(name));
        std::string text = serialize_code(c);
        EXPECT_EQ(parse_code(text), c);
        EXPECT_EQ(serialize_code(parse_code(text)), text);
    }
    CodeSpec y = oracle::qcc5_y();
    EXPECT_EQ(parse_code(serialize_code(y)), y);
}

TEST(Code, ParseErrorsCarryPosition) {
    try {
        parse_code("5 1 2\nZXXZIII\nIZXQZII\nIIZXXZI\nIIIZXXZ\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 3u);
        EXPECT_EQ(e.column, 4u);
    }
    EXPECT_THROW(parse_code("5 1 2\nZXXZIII\n"), ParseError);
    EXPECT_THROW(parse_code("5 1\n"), ParseError);
    EXPECT_THROW(parse_code("2 1 3\nZZZZZ\n"), ParseError);
    EXPECT_THROW(parse_code("5 1 2\nZXXZII\nIZXXZII\nIIZXXZI\nIIIZXXZ\n"), ParseError);
}

TEST(Code, ValidateAcceptsWorkedExample) {
    ValidationReport r = validate(oracle::qcc5());
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.commute_ok);
    EXPECT_TRUE(r.independent);
    EXPECT_EQ(r.pairs.size(), 10u);
}

TEST(Code, ValidateNamesBrokenPair) {
    CodeSpec c = CodeSpec::from_strings(2, 0, 1, {"XZI", "ZXZ"});
    ValidationReport r = validate(c);
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.commute_ok);
    bool named = false;
    for (const auto &p : r.pairs) {
        if (!p.commute) {
            EXPECT_EQ(p.a, 0u);
            EXPECT_EQ(p.b, 1u);
            named = true;
        }
    }
    EXPECT_TRUE(named);
}

TEST(Code, ValidateRejectsDependentGenerators) {
    CodeSpec c = CodeSpec::from_strings(2, 0, 0, {"ZZ", "ZZ"});
    ValidationReport r = validate(c);
    EXPECT_FALSE(r.independent);
    EXPECT_FALSE(r.ok);
}

TEST(Code, ExpandStabilizer) {
    ExpandedStabilizer s = expand_stabilizer(oracle::qcc5(), 3);
    EXPECT_EQ(s.num_qubits, 17u);
    ASSERT_EQ(s.rows.size(), 12u);
    EXPECT_EQ(s.rows[5].to_letters(), "IIIIIIZXXZIIIIIII");
    for (const auto &a : s.rows) {
        for (const auto &b : s.rows) {
            EXPECT_TRUE(a.commutes_with(b));
        }
    }
    EXPECT_THROW(expand_stabilizer(oracle::qcc5(), 0), std::invalid_argument);
}

}  // namespace
}  // namespace qconv
