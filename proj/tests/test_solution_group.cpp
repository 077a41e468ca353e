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

std::vector<std::string> texts(const GroupPresentation &p) {
    std::vector<std::string> out;
    for (const auto &r : p.relations) out.push_back(r.text);
    return out;
}

TEST(Presentation, OneRowSevenRelations) {
    const auto pres = build_presentation(LinearSystem(2, {{1, 1}}, {1}));
    EXPECT_EQ(texts(pres),
              (std::vector<std::string>{"g1^2", "g2^2", "J^2", "[g1,J]", "[g2,J]", "[g1,g2]", "g1 g2 J^-1"}));
}

TEST(Presentation, MagicSquareCounts) {
    const auto pres = build_presentation(builtin::magic_square());
    EXPECT_EQ(pres.relations.size(), 43u);
    EXPECT_EQ(pres.count(RelationFamily::OrderG), 9u);
    EXPECT_EQ(pres.count(RelationFamily::OrderJ), 1u);
    EXPECT_EQ(pres.count(RelationFamily::CentralJ), 9u);
    EXPECT_EQ(pres.count(RelationFamily::RowCommutation), 18u);
    EXPECT_EQ(pres.count(RelationFamily::RowProduct), 6u);
    EXPECT_EQ(pres.relations.back().text, "g3 g6 g9 J^-1");
}

TEST(Presentation, CommutatorsDeduplicatedAcrossRows) {
    const auto pres = build_presentation(LinearSystem(3, {{1, 1, 0}, {2, 1, 0}, {0, 1, 1}}, {0, 0, 0}));
    EXPECT_EQ(pres.count(RelationFamily::RowCommutation), 2u);  // {1,2} twice, {2,3}
}

TEST(Presentation, ZeroRowGivesEmptyWord) {
    const auto pres = build_presentation(LinearSystem(2, {{1, 1}, {0, 0}}, {0, 0}));
    const auto &last = pres.relations.back();
    EXPECT_EQ(last.family, RelationFamily::RowProduct);
    EXPECT_TRUE(last.word.empty());
    EXPECT_EQ(last.text, "1");
}

TEST(Presentation, ExponentsUseCoefficients) {
    const auto pres = build_presentation(builtin::p3_demo());
    EXPECT_EQ(pres.relations.back().text, "g1 g2^2 J^-1");
    EXPECT_EQ(pres.relations.back().word.normalized(3).str(), "g1 g2^2 J^2");
}

TEST(RelationResiduals, ScalarRepresentationIsExact) {
    const auto one = scalar_rep_from_solution(builtin::one_eq(), ZpVector(2, {1, 1}));
    EXPECT_EQ(one.image(1)(0, 0), Cyclotomic(-1));
    const auto r1 = relation_residuals(one, build_presentation(builtin::one_eq()));
    EXPECT_TRUE(r1.all_pass());
    EXPECT_EQ(r1.max_residual(), 0.0);

    const auto p3 = scalar_rep_from_solution(builtin::p3_demo(), ZpVector(3, {1, 0, 0}));
    EXPECT_EQ(p3.image(1)(0, 0), Cyclotomic::root(3, 1));
    EXPECT_EQ(relation_residuals(p3, build_presentation(builtin::p3_demo())).max_residual(), 0.0);
}

TEST(RelationResiduals, ScalarRepresentationRequiresSolution) {
    EXPECT_THROW(scalar_rep_from_solution(builtin::p3_demo(), ZpVector(3, {0, 0, 0})), Error);
}

TEST(RelationResiduals, PauliMagicSquare) {
    const auto rep = pauli_magic_square_rep();
    const auto r = relation_residuals(rep, build_presentation(builtin::magic_square()));
    EXPECT_EQ(r.suite("relations").checks.size(), 43u);
    EXPECT_LE(r.max_residual(), 1e-12);
    for (std::size_t j = 1; j <= 9; ++j) {
        EXPECT_EQ(distance(rep.image(j) * rep.image(j), ComplexMatrix::identity(4)), 0.0);
    }
    const auto col3 = rep.image(3) * rep.image(6) * rep.image(9);
    EXPECT_LE(distance(col3, ComplexMatrix::scalar(4, -1.0)), 1e-12);
}

TEST(RelationResiduals, PerturbationIsDetected) {
    auto rep = pauli_magic_square_rep();
    rep.g[4] *= Complex(1.01);
    const auto r = relation_residuals(rep, build_presentation(builtin::magic_square()));
    ASSERT_NE(r.first_failure(), nullptr);
    const auto *ord = r.find("relations", "order-g:g5^2");
    ASSERT_NE(ord, nullptr);
    EXPECT_FALSE(ord->pass());
    EXPECT_FALSE(r.find("unitarity", "g5")->pass());
}

TEST(RelationResiduals, ScalarRepsOfRandomSystemsAreExact) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        const auto sys = testing::random_system(rng, 2 + (t % 2), 1 + rng() % 5, 1 + rng() % 5).system();
        const auto sol = gauss_solve(sys.a(), sys.b());
        if (!sol) continue;
        const auto rep = scalar_rep_from_solution(sys, sol->particular);
        EXPECT_EQ(relation_residuals(rep, build_presentation(sys)).max_residual(), 0.0);
    }
}

}  // namespace
}  // namespace lcs
