// Copyright 2026 The lcsgame Authors
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

#include "support.hpp"

namespace lcs {
namespace {

TEST(LinearSystem, RejectsBadShapes) {
    EXPECT_THROW(LinearSystem(4, {{1, 1}}, {0}), Error);
    // b must have one entry per row, not per column
    EXPECT_THROW(LinearSystem(2, {{1, 1}}, {0, 0}), Error);
}

TEST(LinearSystem, ReducesEntries) {
    const LinearSystem s(3, {{4, -1}}, {5});
    EXPECT_EQ(s.a()(0, 0), 1u);
    EXPECT_EQ(s.a()(0, 1), 2u);
    EXPECT_EQ(s.b()[0], 2u);
}

TEST(RowSupport, Examples) {
    const LinearSystem s(2, {{1, 1, 0}, {0, 1, 1}}, {0, 0});
    EXPECT_EQ(row_support(s, 1), (IndexSet{1, 2}));
    EXPECT_EQ(row_support(builtin::magic_square(), 6), (IndexSet{3, 6, 9}));
    const LinearSystem z(2, {{0, 0}}, {0});
    EXPECT_EQ(row_support(z, 1), IndexSet{});
    EXPECT_THROW(row_support(s, 3), Error);
    EXPECT_THROW(row_support(s, 0), Error);
}

TEST(RowSolutions, Examples) {
    EXPECT_EQ(row_solutions(builtin::one_eq(), 1), (std::vector<ZpVector>{ZpVector(2, {0, 0}), ZpVector(2, {1, 1})}));
    EXPECT_EQ(row_solutions(builtin::p3_demo(), 1),
              (std::vector<ZpVector>{ZpVector(3, {0, 2, 0}), ZpVector(3, {1, 0, 0}), ZpVector(3, {2, 1, 0})}));

    const auto ms = builtin::magic_square();
    const auto s1 = row_solutions(ms, 1);
    ASSERT_EQ(s1.size(), 4u);
    for (const auto &x : s1) {
        EXPECT_EQ((x[0] + x[1] + x[2]) % 2, 0u);
        for (std::size_t k = 3; k < 9; ++k) EXPECT_EQ(x[k], 0u);
    }
}

TEST(RowSolutions, ZeroRows) {
    EXPECT_EQ(row_solutions(LinearSystem(2, {{0, 0}}, {0}), 1).size(), 1u);
    EXPECT_TRUE(row_solutions(LinearSystem(2, {{0, 0}}, {1}), 1).empty());
}

TEST(Compatible, Examples) {
    const auto s = builtin::p3_demo();
    const auto sol = row_solutions(s, 1);
    EXPECT_TRUE(compatible(s, 1, 1, sol[0], sol[0]));
    EXPECT_FALSE(compatible(s, 1, 1, sol[0], sol[1]));

    const LinearSystem t(2, {{1, 1, 0}, {1, 0, 1}}, {0, 0});
    EXPECT_TRUE(compatible(t, 1, 2, ZpVector(2, {1, 1, 0}), ZpVector(2, {1, 0, 1})));
    EXPECT_FALSE(compatible(t, 1, 2, ZpVector(2, {0, 0, 0}), ZpVector(2, {1, 0, 1})));
    try {
        compatible(t, 1, 2, ZpVector(2, {1, 0, 0}), ZpVector(2, {1, 0, 0}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotASolution);
    }
}

TEST(Validate, Examples) {
    const auto ms = validate_system(builtin::magic_square());
    EXPECT_TRUE(ms.ok());
    ASSERT_NE(ms.find("classical_solvability"), nullptr);
    EXPECT_EQ(ms.find("classical_solvability")->verdict, Verdict::Warn);

    const auto p4 = validate_system(4, {{1, 1}}, {0});
    EXPECT_FALSE(p4.ok());
    EXPECT_EQ(p4.find("modulus_prime")->verdict, Verdict::Fail);

    const auto zero = validate_system(2, {{1, 1}, {0, 0}}, {0, 1});
    EXPECT_TRUE(zero.ok());
    EXPECT_EQ(zero.find("zero_rows")->verdict, Verdict::Warn);

    EXPECT_FALSE(validate_system(2, {{1, 1}, {1}}, {0, 0}).ok());
    EXPECT_FALSE(validate_system(2, {{1, 1}}, {0, 0}).ok());
}

TEST(Digest, StableAndSensitive) {
    const auto d = system_digest(builtin::magic_square());
    EXPECT_EQ(d.size(), 16u);
    EXPECT_EQ(d, system_digest(builtin::magic_square()));
    EXPECT_NE(d, system_digest(builtin::magic_square().homogeneous()));
    // reduction happens before hashing
    EXPECT_EQ(system_digest(LinearSystem(3, {{4, -1}}, {5})), system_digest(LinearSystem(3, {{1, 2}}, {2})));
}

TEST(Builtins, Names) {
    for (const auto &n : builtin::names()) EXPECT_NO_THROW(builtin::by_name(n));
    try {
        builtin::by_name("nope");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownExample);
    }
}

// |S_i| = p^(|V_i|-1), and S_i equals the brute-force set.
TEST(RowSolutionsProperty, CardinalityAgainstBruteForce) {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 200) {
        const std::int64_t p = std::array<std::int64_t, 3>{2, 3, 5}[rng() % 3];
        const std::size_t n = 1 + rng() % 5;
        auto rs = testing::random_system(rng, p, 1, n);
        const auto sys = rs.system();
        const auto v = row_support(sys, 1);
        if (v.empty()) continue;
        ++checked;
        const auto s = row_solutions(sys, 1);
        std::uint64_t expect = 1;
        for (std::size_t k = 1; k < v.size(); ++k) expect *= static_cast<std::uint64_t>(p);
        EXPECT_EQ(s.size(), expect);
        const auto brute = testing::brute_row_solutions(rs.a[0], rs.b[0], p);
        ASSERT_EQ(s.size(), brute.size());
        for (std::size_t k = 0; k < s.size(); ++k) {
            EXPECT_EQ(s[k], ZpVector(static_cast<Elem>(p), brute[k]));  // both lexicographic
        }
    }
}

}  // namespace
}  // namespace lcs
