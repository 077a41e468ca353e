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

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return ErrorKind::InvariantViolation;
}

TEST(SystemFile, RoundTrip) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        const auto sys = testing::random_system(rng, std::array<std::int64_t, 3>{2, 3, 5}[t % 3], 1 + rng() % 5,
                                                1 + rng() % 5)
                             .system();
        const auto text = system_file_text(sys);
        const auto back = parse_system(text);
        ASSERT_TRUE(back.validate().ok());
        EXPECT_EQ(system_digest(back.to_system()), system_digest(sys));
        EXPECT_EQ(system_file_text(back.to_system()), text);
        EXPECT_EQ(parse_system(system_to_json(sys).dump()).to_system().a(), sys.a());
    }
}

TEST(SystemFile, ParseErrors) {
    EXPECT_EQ(kind_of([] { parse_system("{\"p\":2,\"A\":[[1,1],[1]],\"b\":[0,0]}"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_system("{\"p\":2,\"A\":[[1,1]]}"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_system("{\"p\":2,\"A\":[[1,0.5]],\"b\":[0]}"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_system("not json"); }), ErrorKind::ParseError);
}

TEST(SystemFile, StructuralFailuresAreValidationNotParse) {
    const auto sf = parse_system("{\"p\":6,\"A\":[[1]],\"b\":[0]}");
    EXPECT_FALSE(sf.validate().ok());
    EXPECT_EQ(sf.validate().find("modulus_prime")->verdict, Verdict::Fail);
}

TEST(RepresentationFile, PauliRoundTripIsBitIdentical) {
    const auto rep = pauli_magic_square_rep();
    const auto text = representation_to_json(rep).dump();
    const auto back = parse_representation(text);
    ASSERT_EQ(back.num_vars(), 9u);
    for (std::size_t j = 1; j <= 9; ++j) {
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(back.image(j)(r, c), rep.image(j)(r, c));
        }
    }
    EXPECT_TRUE(back.j_identified);
}

TEST(RepresentationFile, RandomUnitaryRoundTrip) {
    std::mt19937_64 rng(5);
    const auto rep = conjugate(pauli_magic_square_rep(), testing::random_unitary(rng, 4));
    const auto back = parse_representation(representation_to_json(rep).dump());
    for (std::size_t j = 1; j <= 9; ++j) EXPECT_EQ(distance(back.image(j), rep.image(j)), 0.0);
}

TEST(RepresentationFile, Rejections) {
    auto j = representation_to_json(pauli_magic_square_rep());
    auto nonsquare = j;
    nonsquare["generators"]["g1"][0].erase(0);
    EXPECT_EQ(kind_of([&] { parse_representation(nonsquare.dump()); }), ErrorKind::ParseError);

    auto noj = j;
    noj["generators"].erase("J");
    EXPECT_EQ(kind_of([&] { parse_representation(noj.dump()); }), ErrorKind::ParseError);

    auto scaled = j;
    scaled["generators"]["g2"][0][1][0] = 2.0;
    EXPECT_EQ(kind_of([&] { parse_representation(scaled.dump()); }), ErrorKind::UnitarityViolation);
}

TEST(RepresentationFile, JIdentityIsNotOmega) {
    auto j = representation_to_json(pauli_magic_square_rep());
    j["generators"]["J"] = matrix_to_json(ComplexMatrix::identity(4));
    EXPECT_EQ(kind_of([&] { parse_representation(j.dump()); }), ErrorKind::JNotIdentified);
    LoadOptions warn;
    warn.quotient = QuotientPolicy::Warn;
    const auto rep = parse_representation(j.dump(), warn);
    EXPECT_FALSE(rep.j_identified);
    ASSERT_EQ(rep.warnings.size(), 1u);
    EXPECT_NE(rep.warnings[0].find("JNotIdentified"), std::string::npos);
}

TEST(Presentation, JsonShape) {
    const auto j = presentation_to_json(build_presentation(builtin::one_eq()));
    EXPECT_EQ(j["relations"].size(), 7u);
    EXPECT_EQ(j["generators"].back(), "J");
    EXPECT_EQ(j["relations"][6]["relator"], "g1 g2");
}

TEST(Graph, JsonAdjacency) {
    const auto j = graph_to_json(build_game_graph(builtin::one_eq(), false));
    EXPECT_EQ(j["adjacency"].dump(), "[[1],[0]]");
}

TEST(RuleTable, SmallGameAndCap) {
    const auto lg = build_synclcs_game(builtin::one_eq());
    const auto j = rule_table_to_json(lg.game);
    EXPECT_EQ(j["winning"].size(), 2u);  // each solution with itself
    EXPECT_EQ(kind_of([&] { rule_table_to_json(build_synclcs_game(builtin::magic_square()).game, 100); }),
              ErrorKind::EnumerationTooLarge);
}

}  // namespace
}  // namespace lcs
