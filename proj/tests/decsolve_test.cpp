#include "decmat/decsolve.hpp"

#include <gtest/gtest.h>

namespace decmat {
namespace {

TEST(DecSolve, ModelSkeleton) {
    const DecModel m3 = build_model(3, EllCase::Case3);
    EXPECT_EQ(m3.size(), 10);
    const DecModel m2 = build_model(2, EllCase::Case3);
    EXPECT_EQ(m2.size(), 5);
    // unitriangular frame: fixed diagonal, zero above, open below
    for (int r = 0; r < m3.size(); ++r)
        for (int c = 0; c < m3.size(); ++c) {
            const EntryBound& e = m3.entry(r, c);
            if (c > r) {
                EXPECT_TRUE(e.fixed());
                EXPECT_EQ(e.lo, Affine(0));
            } else if (c == r) {
                EXPECT_TRUE(e.fixed());
                EXPECT_EQ(e.lo, Affine(1));
            } else {
                EXPECT_FALSE(e.hi.has_value());
                EXPECT_EQ(e.lo, Affine(0));
            }
        }
    EXPECT_EQ(m3.rows()[0].name(), "[3,-,1]");
    EXPECT_TRUE(m3.entry(0, 0).fixed());
}

std::vector<ProjColumn> columns_for(int rank, EllCase c) {
    if (rank == 2) return psi_columns(2, c, nullptr);
    const SolveResult so5 = solve(2, c);
    const LeviPims pims = levi_pims_from(so5);
    return psi_columns(3, c, &pims);
}

TEST(DecSolve, ProjectiveColumnsGiveUpperBounds) {
    DecModel model = build_model(2, EllCase::Case5);
    apply_projective_columns(model, columns_for(2, EllCase::Case5));
    // the parabolic column bounds the Steinberg-row entry by m_exp = 2
    ASSERT_TRUE(model.entry(4, 1).hi.has_value());
    EXPECT_EQ(*model.entry(4, 1).hi, Affine(2));

    DecModel m3 = build_model(3, EllCase::Large);
    apply_projective_columns(m3, columns_for(3, EllCase::Large));
    ASSERT_TRUE(m3.entry(9, 7).hi.has_value());
    EXPECT_EQ(*m3.entry(9, 7).hi, Affine::unknown(Unknown::MExp));
}

TEST(DecSolve, SeriesMatchingPinsTheCuspidalSteinbergColumn) {
    DecModel model = build_model(3, EllCase::Case3);
    const auto cols = columns_for(3, EllCase::Case3);
    for (int i = 0; i < 4; ++i) {
        apply_projective_columns(model, cols);
        apply_cuspidal_support(model, cols);
    }
    // entry([-,1^3,1], phi7) = 1 since Psi7 collapses onto its own series
    EXPECT_TRUE(model.entry(9, 6).fixed());
    EXPECT_EQ(model.entry(9, 6).lo, Affine(1));
    // and the rank-2 analogue pins entry([-,1^2,1], 5phi3) = 1
    DecModel m2 = build_model(2, EllCase::Case3);
    const auto cols2 = columns_for(2, EllCase::Case3);
    for (int i = 0; i < 4; ++i) {
        apply_projective_columns(m2, cols2);
        apply_cuspidal_support(m2, cols2);
    }
    EXPECT_TRUE(m2.entry(4, 2).fixed());
    EXPECT_EQ(m2.entry(4, 2).lo, Affine(1));
}

TEST(DecSolve, RelationsRaiseLowerBounds) {
    const LusztigContext& ctx = LusztigContext::get(3);
    DecModel model = build_model(3, EllCase::Large);
    const auto cols = columns_for(3, EllCase::Large);
    for (int i = 0; i < 6; ++i) {
        apply_projective_columns(model, cols);
        apply_cuspidal_support(model, cols);
        apply_relations(model, ctx.relation_vectors(EllCase::Large));
        apply_permutation_bound(model);
    }
    // beta >= 3 and gamma >= 2 at the symbolic case
    EXPECT_TRUE(affine_leq(Affine(3), model.entry(9, 7).lo));
    EXPECT_TRUE(affine_leq(Affine(2), model.entry(9, 8).lo));
}

TEST(DecSolve, DudasTightensTheLastUnknowns) {
    const LusztigContext& ctx = LusztigContext::get(2);
    DecModel model = build_model(2, EllCase::Large);
    const auto cols = columns_for(2, EllCase::Large);
    for (int i = 0; i < 6; ++i) {
        apply_projective_columns(model, cols);
        apply_cuspidal_support(model, cols);
        apply_relations(model, ctx.relation_vectors(EllCase::Large));
        apply_permutation_bound(model);
    }
    // alpha sits in [2, m] before the sign bound
    EXPECT_EQ(model.entry(4, 1).lo, Affine(2));
    ASSERT_TRUE(model.entry(4, 1).hi.has_value());
    EXPECT_EQ(*model.entry(4, 1).hi, Affine::unknown(Unknown::MExp));
    EXPECT_FALSE(model.resolved());
    EXPECT_TRUE(apply_dudas(model));
    EXPECT_TRUE(model.entry(4, 1).fixed());
    EXPECT_EQ(model.entry(4, 1).lo, Affine(2));
}

TEST(DecSolve, SteinbergVectorMatchesThePublishedOne) {
    DecModel model = build_model(3, EllCase::Large);
    const auto cols = columns_for(3, EllCase::Large);
    const LusztigContext& ctx = LusztigContext::get(3);
    for (int i = 0; i < 6; ++i) {
        apply_projective_columns(model, cols);
        apply_cuspidal_support(model, cols);
        apply_relations(model, ctx.relation_vectors(EllCase::Large));
        apply_permutation_bound(model);
    }
    const auto phi = steinberg_brauer_vector(model);
    const Affine B = Affine::unknown(Unknown::Beta), G = Affine::unknown(Unknown::Gamma);
    const std::vector<Affine> want = {Affine(-1), Affine(1), B,          G,         -B,
                                      B,          Affine(-1), -B,        -G,        Affine(1)};
    EXPECT_EQ(phi, want);
}

TEST(DecSolve, SolveMatchesThePublishedMatrices) {
    for (int rank : {2, 3}) {
        for (EllCase c : {EllCase::Case3, EllCase::Case5, EllCase::Large}) {
            const SolveResult res = solve(rank, c);
            ASSERT_TRUE(res.resolved) << rank << " " << to_string(c);
            const auto want = published_values(rank, c);
            for (const auto& [u, v] : res.unknown_values)
                EXPECT_EQ(want.at(u), v) << unknown_name(u);
            EXPECT_TRUE(res.audit_passed());
            // the full matrix agrees with the published one
            const auto table = final_table(rank);
            const auto mat = res.model.matrix();
            for (int r = 0; r < res.model.size(); ++r)
                for (int cc = 0; cc < res.model.size(); ++cc) {
                    Affine w = table[r][cc];
                    for (const auto& [u, v] : want) w = w.substitute(u, Affine(v));
                    EXPECT_EQ(mat[r][cc], w.constant());
                }
        }
    }
}

TEST(DecSolve, Case3ResolvesWithoutTheSignBound) {
    SolveOptions no_dudas;
    no_dudas.use_dudas = false;
    EXPECT_TRUE(solve(3, EllCase::Case3, no_dudas).resolved);
    EXPECT_TRUE(solve(2, EllCase::Case3, no_dudas).resolved);
    EXPECT_TRUE(solve(3, EllCase::Case5, no_dudas).resolved);
    EXPECT_FALSE(solve(3, EllCase::Large, no_dudas).resolved);
    EXPECT_FALSE(solve(3, EllCase::Case3).dudas_used);
    EXPECT_TRUE(solve(3, EllCase::Large).dudas_used);
}

TEST(DecSolve, EveryFamilyIsLoadBearingAtTheSymbolicCase) {
    const SolveOptions ablations[] = {
        {false, true, true, true},
        {true, false, true, true},
        {true, true, false, true},
        {true, true, true, false},
    };
    for (const auto& opt : ablations) {
        const SolveResult res = solve(3, EllCase::Large, opt);
        EXPECT_FALSE(res.resolved);
        EXPECT_FALSE(res.model.unresolved_report().empty());
    }
}

TEST(DecSolve, VerifyModeAuditsThePublishedTables) {
    for (int rank : {2, 3})
        for (EllCase c : {EllCase::Case3, EllCase::Case5, EllCase::Large}) {
            const SolveResult res = verify_tables(rank, c);
            EXPECT_TRUE(res.resolved);
            EXPECT_TRUE(res.audit_passed()) << rank << " " << to_string(c);
        }
}

TEST(DecSolve, LoadBearingLogMentionsEveryFamily) {
    const SolveResult res = solve(3, EllCase::Large);
    const auto fams = res.model.load_bearing_families();
    for (const char* f : {"projectives", "cuspidal-support", "relations", "dudas"})
        EXPECT_NE(std::find(fams.begin(), fams.end(), f), fams.end()) << f;
}

TEST(DecSolve, MatrixBeforeResolutionThrows) {
    DecModel model = build_model(3, EllCase::Large);
    EXPECT_THROW(model.matrix(), std::logic_error);
    EXPECT_FALSE(model.resolved());
    EXPECT_FALSE(model.unresolved_report().empty());
}

}  // namespace
}  // namespace decmat
