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
#include "qconv/pauli.h"

namespace qconv {
namespace {

TEST(Pauli, Letters) {
    EXPECT_EQ(pauli_char(Pauli::Y), 'Y');
    EXPECT_EQ(pauli_from_char('z'), Pauli::Z);
    EXPECT_THROW(pauli_from_char('Q'), ParseError);
}

TEST(SymplecticVector, RoundTripAndProducts) {
    SymplecticVector v = SymplecticVector::from_letters("IXYZ");
    EXPECT_EQ(v.to_letters(), "IXYZ");
    EXPECT_EQ(v.weight(), 3u);
    SymplecticVector w = SymplecticVector::from_letters("IZZZ");
    EXPECT_TRUE(v.commutes_with(w));  // X/Z and Y/Z anticommute, Z/Z commutes.
    EXPECT_FALSE(v.commutes_with(SymplecticVector::from_letters("IZII")));
    v ^= w;
    EXPECT_EQ(v.to_letters(), "IYXI");
}

TEST(PauliPoly, FromStringMatchesPolynomialRows) {
    PauliPoly a = PauliPoly::from_string("ZXXZIII", 5);
    EXPECT_EQ(a.to_vector_string(), "(01100|10010)");
    PauliPoly b = PauliPoly::from_string("IIIZXXZ", 5);
    EXPECT_EQ(b.x()[0], Poly::parse("D"));
    EXPECT_EQ(b.x()[4], Poly::parse("1"));
    EXPECT_EQ(b.z()[1], Poly::parse("D"));
    EXPECT_EQ(b.z()[3], Poly::parse("1"));
    EXPECT_EQ(b.to_vector_string(), "(D,0,0,0,1|0,D,0,1,0)");
    EXPECT_EQ(b.support_end(), 7u);
    EXPECT_EQ(b.degree(), 1);
    EXPECT_EQ(b.to_string().ops, "ZXXZ");
    EXPECT_EQ(b.to_string().offset, 3u);
}

TEST(PauliPoly, DelayAndMultiply) {
    PauliPoly a = PauliPoly::from_string("ZXXZIII", 5);
    PauliPoly d = delay(a, 1);
    EXPECT_EQ(d.to_letters(12), "IIIIIZXXZIII");
    PauliPoly prod = multiply(a, d);
    EXPECT_EQ(prod.x()[1], Poly::parse("1+D"));
    EXPECT_EQ(prod.x()[2], Poly::parse("1+D"));
}

TEST(PauliPoly, CommutationOfWorkedExample) {
    std::vector<std::string> g = {"ZXXZIII", "IZXXZII", "IIZXXZI", "IIIZXXZ"};
    for (const auto &a : g) {
        for (const auto &b : g) {
            EXPECT_TRUE(gen_commute(PauliPoly::from_string(a, 5), PauliPoly::from_string(b, 5)));
        }
    }
    PauliPoly x = PauliPoly::from_string("XIII", 2);
    PauliPoly z = PauliPoly::from_string("ZIII", 2);
    EXPECT_FALSE(commute_at(x, z));
    EXPECT_FALSE(gen_commute(x, z));
}

TEST(PauliPoly, CommutationSeriesAgainstLetterOracle) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng() % 4;
        PauliPoly p = oracle::random_pauli_poly(rng, n, rng() % 4);
        PauliPoly q = oracle::random_pauli_poly(rng, n, rng() % 4);
        Laurent s = commutation_series(p, q);
        for (int64_t r = 0; r < 5; r++) {
            for (int64_t u = 0; u < 5; u++) {
                ASSERT_EQ(s.coeff(u - r), oracle::shifted_anticommute(p, r, q, u));
            }
        }
    }
}

TEST(PauliPoly, ExpandBounds) {
    PauliPoly a = PauliPoly::from_string("ZXXZIII", 5);
    SymplecticVector e = expand(a, 1, 12);
    EXPECT_EQ(e.to_letters(), "IIIIIZXXZIII");
    EXPECT_THROW(expand(a, 2, 12), std::out_of_range);
}

TEST(PauliPoly, ApplyPoly) {
    PauliPoly a = PauliPoly::from_string("ZZ", 1);
    // (1+D)[a] = a * D[a]
    PauliPoly b = apply_poly(Poly::parse("1+D"), a);
    EXPECT_EQ(b, multiply(a, delay(a, 1)));
}

}  // namespace
}  // namespace qconv
