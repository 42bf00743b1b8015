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
#include "qconv/errors.h"
#include "qconv/gf2poly.h"

namespace qconv {
namespace {

Poly P(const char *s) {
    return Poly::parse(s);
}

TEST(Poly, ParseAndPrint) {
    EXPECT_EQ(P("0").to_string(), "0");
    EXPECT_EQ(P("1").to_string(), "1");
    EXPECT_EQ(P("D").to_string(), "D");
    EXPECT_EQ(P("D^3+1+D").to_string(), "1+D+D^3");
    EXPECT_EQ(P("D+D").to_string(), "0");
    EXPECT_EQ(P(" 1 + D^2 ").to_string(), "1+D^2");
    EXPECT_THROW(P("1+"), ParseError);
    EXPECT_THROW(P("X"), ParseError);
    EXPECT_THROW(P("D^-1"), ParseError);
}

TEST(Poly, DegreeAndValuation) {
    EXPECT_EQ(Poly().degree(), -1);
    EXPECT_EQ(Poly().valuation(), -1);
    EXPECT_EQ(P("D^2+D^5").degree(), 5);
    EXPECT_EQ(P("D^2+D^5").valuation(), 2);
    EXPECT_EQ(P("D^70").degree(), 70);
    EXPECT_EQ(P("1+D+D^3").num_terms(), 3u);
}

TEST(Poly, Arithmetic) {
    EXPECT_EQ(P("1+D") * P("1+D"), P("1+D^2"));
    EXPECT_EQ(P("1+D") + P("D"), P("1"));
    EXPECT_EQ(P("1+D+D^2") * P("1+D"), P("1+D^3"));
    EXPECT_EQ(P("D^63") * P("D"), P("D^64"));
    EXPECT_EQ(P("D") * Poly(), Poly());
    EXPECT_EQ(P("1+D").shifted_up(3), P("D^3+D^4"));
    EXPECT_EQ(P("D^3+D^4").shifted_down(3), P("1+D"));
    EXPECT_EQ(P("1+D^2").reversed(3), P("D+D^3"));
}

TEST(Poly, DivModExamples) {
    DivMod dm = divmod(P("1+D^3"), P("1+D"));
    EXPECT_EQ(dm.quotient, P("1+D+D^2"));
    EXPECT_EQ(dm.remainder, Poly());
    dm = divmod(P("D^4+1"), P("D^2+D"));
    EXPECT_EQ(dm.quotient * P("D^2+D") + dm.remainder, P("D^4+1"));
    EXPECT_LT(dm.remainder.degree(), 2);
    EXPECT_THROW(divmod(P("D"), Poly()), std::domain_error);
}

TEST(Poly, GcdLcm) {
    EXPECT_EQ(gcd(P("1+D^2"), P("1+D")), P("1+D"));
    EXPECT_EQ(gcd(P("D"), P("1+D")), P("1"));
    EXPECT_EQ(lcm(P("1+D"), P("D")), P("D+D^2"));
    EXPECT_TRUE(is_monomial(P("D^4")));
    EXPECT_TRUE(is_monomial(P("1")));
    EXPECT_FALSE(is_monomial(P("1+D")));
    EXPECT_FALSE(is_monomial(Poly()));
}

TEST(Poly, DegreeCap) {
    EXPECT_THROW(Poly::monomial(kMaxDegree + 1), DegreeOverflow);
    Poly big = Poly::monomial(kMaxDegree);
    EXPECT_THROW(big * P("D"), DegreeOverflow);
}

TEST(Poly, MultiplicationMatchesSchoolbook) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; t++) {
        Poly a = oracle::random_poly(rng, rng() % 150), b = oracle::random_poly(rng, rng() % 150);
        ASSERT_EQ(a * b, oracle::naive_mul(a, b));
    }
}

TEST(Laurent, ParseNormalizeAndReverse) {
    Laurent l = Laurent::parse("D^-2+1");
    EXPECT_EQ(l.min_exponent(), -2);
    EXPECT_EQ(l.max_exponent(), 0);
    EXPECT_TRUE(l.coeff(-2));
    EXPECT_FALSE(l.coeff(-1));
    EXPECT_EQ(l.reversed(), Laurent::parse("1+D^2"));
    EXPECT_FALSE(l.is_poly());
    EXPECT_EQ(Laurent(P("D^2+D^3"), 0), Laurent(P("1+D"), 2));
    EXPECT_EQ(Laurent::parse("D^-1") * Laurent::parse("D"), Laurent::monomial(0));
}

TEST(Laurent, GroupNormalize) {
    std::vector<Laurent> g = {Laurent::parse("D^-1"), Laurent::parse("1+D"), Laurent()};
    EXPECT_EQ(laurent_group_shift(g), 1);
    std::vector<Poly> out = laurent_normalize_group(g);
    EXPECT_EQ(out[0], P("1"));
    EXPECT_EQ(out[1], P("D+D^2"));
    EXPECT_EQ(out[2], Poly());
}

TEST(PolyMatrix, PrintWithSplit) {
    PolyMatrix m(1, 4);
    m.at(0, 0) = P("D");
    m.at(0, 3) = P("1+D");
    EXPECT_EQ(m.to_string(2), "D 0 | 0 1+D\n");
}

TEST(Eliminate, ReachesDiagonalPivotsOnWorkedExample) {
    // X half of the (5,1,2) generators.
    PolyMatrix x(4, 5);
    x.at(0, 1) = P("1");
    x.at(0, 2) = P("1");
    x.at(1, 2) = P("1");
    x.at(1, 3) = P("1");
    x.at(2, 3) = P("1");
    x.at(2, 4) = P("1");
    x.at(3, 0) = P("D");
    x.at(3, 4) = P("1");
    Elimination e = eliminate(x, 0, 5);
    EXPECT_EQ(e.rank, 4u);
    EXPECT_TRUE(e.diagonal_ok);
    EXPECT_EQ(e.reduced.at(0, 0), P("D"));
    for (size_t i = 1; i < 4; i++) {
        EXPECT_EQ(e.reduced.at(i, i), P("1"));
    }
    // Replaying the log on the original reproduces the reduced matrix.
    PolyMatrix again = x;
    replay(e.log, again, true);
    EXPECT_EQ(again, e.reduced);
}

}  // namespace
}  // namespace qconv
