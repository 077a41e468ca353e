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

constexpr double kTol = 1e-9;

TEST(Cyclotomic, FieldIdentities) {
    for (Elem p : {2u, 3u, 5u, 7u}) {
        const auto w = Cyclotomic::root(p, 1);
        Cyclotomic acc(1), sum(0);
        for (Elem k = 0; k < p; ++k) {
            sum += Cyclotomic::root(p, k);
            acc *= w;
        }
        EXPECT_TRUE(sum.is_zero()) << p;
        EXPECT_EQ(acc, Cyclotomic(1)) << p;
        EXPECT_EQ(w * w.conj(), Cyclotomic(1)) << p;
        EXPECT_NEAR(std::abs(w.to_complex() - complex_root(p, 1)), 0.0, 1e-15);
    }
    EXPECT_EQ(Cyclotomic::root(2, 1), Cyclotomic(-1));
}

TEST(Spectral, ScalarIndicator) {
    const auto rep = scalar_rep_from_solution(builtin::p3_demo(), ZpVector(3, {1, 0, 0}));
    for (Elem s = 0; s < 3; ++s) {
        EXPECT_EQ(f_projection(rep, 1, s)(0, 0), Cyclotomic(s == 1 ? 1 : 0));
        EXPECT_EQ(f_projection(rep, 2, s)(0, 0), Cyclotomic(s == 0 ? 1 : 0));
    }
}

TEST(Spectral, IdentityGenerator) {
    const auto id = ComplexMatrix::identity(3);
    EXPECT_EQ(distance(spectral_projection(id, 5, 0), id), 0.0);
    for (std::int64_t s = 1; s < 5; ++s) EXPECT_LE(frobenius(spectral_projection(id, 5, s)), 1e-15);
}

TEST(Spectral, PauliHalves) {
    const auto rep = pauli_magic_square_rep();
    const auto id = ComplexMatrix::identity(4);
    for (std::size_t j = 1; j <= 9; ++j) {
        const auto f0 = f_projection(rep, j, 0), f1 = f_projection(rep, j, 1);
        EXPECT_LE(distance(f0, 0.5 * (id + rep.image(j))), 1e-15);
        EXPECT_EQ(distance(f0 + f1, id), 0.0);
    }
    EXPECT_TRUE(spectral_checks(rep).all_pass());
}

TEST(Psi, ScalarIndicators) {
    const auto sys = builtin::p3_demo();
    const auto rep = scalar_rep_from_solution(sys, ZpVector(3, {1, 0, 0}));
    for (const auto &x : row_solutions(sys, 1)) {
        EXPECT_EQ(psi_image(rep, sys, 1, x)(0, 0), Cyclotomic(x == ZpVector(3, {1, 0, 0}) ? 1 : 0));
    }
}

TEST(Psi, SingleVariableRow) {
    const LinearSystem sys(2, {{1, 0}, {1, 1}}, {1, 1});
    const auto rep = scalar_rep_from_solution(sys, ZpVector(2, {1, 0}));
    for (const auto &x : row_solutions(sys, 1)) {
        EXPECT_EQ(psi_image(rep, sys, 1, x), f_projection(rep, 1, x[0]));
    }
}

TEST(Psi, PauliRankOneProjections) {
    const auto sys = builtin::magic_square();
    const auto rep = pauli_magic_square_rep();
    for (std::size_t i = 1; i <= 6; ++i) {
        for (const auto &x : row_solutions(sys, i)) {
            const auto e = psi_image(rep, sys, i, x);
            Complex trace{0, 0};
            for (std::size_t k = 0; k < 4; ++k) trace += e(k, k);
            EXPECT_NEAR(trace.real(), 1.0, 1e-12);
            EXPECT_NEAR(trace.imag(), 0.0, 1e-12);
        }
    }
}

TEST(ProjectionFamily, PauliInvariants) {
    const auto fam = build_projection_family(pauli_magic_square_rep(), builtin::magic_square());
    const auto r = projection_family_checks(fam);
    EXPECT_TRUE(r.all_pass());
    EXPECT_LE(r.max_residual(), kTol);
    EXPECT_EQ(r.find("projection_family", "row_sum_identity")->count, 6u);
}

TEST(ProjectionFamily, ScalarIsZeroOne) {
    const auto sys = builtin::p3_demo();
    const ZpVector xs(3, {2, 1, 0});
    const auto fam = build_projection_family(scalar_rep_from_solution(sys, xs), sys);
    for (const auto &x : row_solutions(sys, 1)) EXPECT_EQ(fam.at(1, x)(0, 0), Cyclotomic(x == xs ? 1 : 0));
}

TEST(ProjectionFamily, RejectsUnidentifiedJ) {
    auto rep = pauli_magic_square_rep();
    rep.j_identified = false;
    try {
        build_projection_family(rep, builtin::magic_square());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::JNotIdentified);
    }
}

TEST(ProjectionFamily, NonCommutingRowRejected) {
    auto rep = pauli_magic_square_rep();
    std::swap(rep.g[0], rep.g[3]);  // X(x)I and I(x)Z now meet I(x)X and Z(x)I in a row
    try {
        make_projection_family(rep, builtin::magic_square());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonCommutingFactors);
    }
}

TEST(Phi, RecoversPauliGenerators) {
    const auto rep = pauli_magic_square_rep();
    const auto fam = build_projection_family(rep, builtin::magic_square());
    for (std::size_t j = 1; j <= 9; ++j) {
        const auto img = phi_image(fam, j);
        EXPECT_LE(distance(img.image, rep.image(j)), kTol);
        EXPECT_LE(img.discrepancy, kTol);
        EXPECT_NE(img.worst_row, 0u);  // every magic-square variable is in two rows
    }
    EXPECT_TRUE(phi_checks(fam).all_pass());
}

TEST(Phi, ScalarImages) {
    const auto sys = builtin::p3_demo();
    const auto fam = build_projection_family(scalar_rep_from_solution(sys, ZpVector(3, {1, 0, 0})), sys);
    EXPECT_EQ(phi_image(fam, 1).image(0, 0), Cyclotomic::root(3, 1));
    EXPECT_EQ(phi_image(fam, 2).image(0, 0), Cyclotomic(1));
    try {
        phi_image(fam, 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::VariableUnused);
    }
    EXPECT_EQ(fam.unused_variables(), IndexSet{3});
}

TEST(MutualInverse, ScalarExactAndPauliTight) {
    const auto sys = builtin::p3_demo();
    const auto srep = scalar_rep_from_solution(sys, ZpVector(3, {1, 0, 0}));
    EXPECT_EQ(check_mutual_inverse(srep, sys).max_residual(), 0.0);

    const auto r = check_mutual_inverse(pauli_magic_square_rep(), builtin::magic_square());
    EXPECT_TRUE(r.all_pass());
    EXPECT_LE(r.max_residual(), kTol);
}

TEST(MutualInverse, CorruptedFamilyIsNamed) {
    const auto sys = builtin::magic_square();
    const auto rep = pauli_magic_square_rep();
    const auto good = make_projection_family(rep, sys);
    auto entries = good.entries();
    entries[1][2] = ComplexMatrix::identity(4);
    const ProjectionFamily<Complex> bad(sys, 4, entries);
    const auto r = check_mutual_inverse(rep, bad);
    const auto *f = r.first_failure();
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->suite, "mutual_inverse");
    EXPECT_FALSE(r.find("mutual_inverse", "phi_psi_projections")->pass());
    EXPECT_FALSE(projection_family_checks(bad).all_pass());
}

TEST(IsoImages, PauliPartitionsAndRelations) {
    const auto sys = builtin::magic_square();
    const auto fam = build_projection_family(pauli_magic_square_rep(), sys);
    const auto iso = iso_generator_images(fam);
    EXPECT_EQ(iso.G.size(), 24u);
    EXPECT_EQ(iso.H.size(), 24u);
    const auto parts = iso_partition_checks(iso, fam);
    EXPECT_TRUE(parts.all_pass());
    EXPECT_LE(parts.max_residual(), kTol);

    const auto rel = check_iso_relations(iso, kTol, false);
    EXPECT_TRUE(rel.all_pass());
    EXPECT_EQ(rel.find("iso_relations", "rule_zero_products")->count, count_rule_zero_quadruples(iso.G, iso.H));
    // skipping exact zeros changes the work, not the verdict or the count
    const auto fast = check_iso_relations(iso, kTol, true);
    EXPECT_EQ(fast.find("iso_relations", "rule_zero_products")->count,
              rel.find("iso_relations", "rule_zero_products")->count);
    EXPECT_TRUE(fast.all_pass());
}

// Rule-zero count against a direct loop over all (g, h, g', h').
TEST(IsoImages, RuleZeroCountMatchesLoop) {
    const auto sys = builtin::magic_square();
    const auto G = build_game_graph(sys, false), H = build_game_graph(sys, true);
    std::uint64_t n = 0;
    for (std::size_t g = 0; g < G.size(); ++g) {
        for (std::size_t h = 0; h < H.size(); ++h) {
            for (std::size_t g2 = 0; g2 < G.size(); ++g2) {
                for (std::size_t h2 = 0; h2 < H.size(); ++h2) {
                    const bool same_g = g == g2, same_h = h == h2;
                    const bool adj_g = G.adjacent(g, g2), adj_h = H.adjacent(h, h2);
                    n += (same_g != same_h || adj_g != adj_h) ? 1 : 0;
                }
            }
        }
    }
    EXPECT_EQ(count_rule_zero_quadruples(G, H), n);
}

TEST(IsoImages, K2ScalarFamilyIsExact) {
    const auto sys = builtin::one_eq();
    const auto fam = build_projection_family(scalar_rep_from_solution(sys, ZpVector(2, {1, 1})), sys);
    const auto iso = iso_generator_images(fam);
    EXPECT_EQ(iso_partition_checks(iso, fam).max_residual(), 0.0);
    EXPECT_EQ(check_iso_relations(iso, kTol, false).max_residual(), 0.0);
}

TEST(IsoImages, CrossRowEntriesAreStructuralZeros) {
    const auto sys = builtin::magic_square();
    const auto iso = iso_generator_images(build_projection_family(pauli_magic_square_rep(), sys));
    for (std::size_t g = 0; g < iso.G.size(); ++g) {
        for (std::size_t h = 0; h < iso.H.size(); ++h) {
            EXPECT_EQ(iso.at(g, h).has_value(), iso.G.vertex(g).row == iso.H.vertex(h).row);
        }
    }
}

TEST(RunAllChecks, ConjugationInvariance) {
    std::mt19937_64 rng(31337);
    const auto sys = builtin::magic_square();
    const auto base = run_all_checks(pauli_magic_square_rep(), sys);
    for (int t = 0; t < 3; ++t) {
        const auto u = testing::random_unitary(rng, 4);
        ASSERT_LE(unitarity_residual(u), 1e-12);
        const auto moved = run_all_checks(conjugate(pauli_magic_square_rep(), u), sys);
        ASSERT_EQ(moved.checks.size(), base.checks.size());
        for (std::size_t k = 0; k < base.checks.size(); ++k) {
            EXPECT_EQ(moved.checks[k].pass(), base.checks[k].pass()) << base.checks[k].name;
            EXPECT_LE(std::abs(moved.checks[k].residual - base.checks[k].residual), 1e-9) << base.checks[k].name;
        }
    }
}

TEST(RunAllChecks, ScalarRepsOfRandomSystemsAreExact) {
    std::mt19937_64 rng(8);
    int used = 0;
    for (int t = 0; t < 60; ++t) {
        const std::int64_t p = 2 + t % 2;
        const auto sys = testing::random_system(rng, p, 1 + rng() % 4, 1 + rng() % 4).system();
        const auto sol = gauss_solve(sys.a(), sys.b());
        if (!sol) continue;
        ++used;
        const auto r = run_all_checks(scalar_rep_from_solution(sys, sol->particular), sys);
        EXPECT_EQ(r.max_residual(), 0.0) << "trial " << t;
        EXPECT_TRUE(r.all_pass());
    }
    EXPECT_GT(used, 10);
}

}  // namespace
}  // namespace lcs
