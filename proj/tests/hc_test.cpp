#include "decmat/hc.hpp"

#include <gtest/gtest.h>

#include "decmat/decsolve.hpp"

namespace decmat {
namespace {

VirtualUniChar vec(int rank, const std::vector<std::pair<const char*, long>>& terms) {
    const auto& set = UniCharSet::enumerate(rank);
    VirtualUniChar v = VirtualUniChar::zero(rank);
    for (const auto& [name, c] : terms) v.coeff[set.index_by_name(name)] = c;
    return v;
}

TEST(HarishChandra, DefectZeroLeviLabel) {
    // the [1,1,1] projective induces to the four middle series labels
    EXPECT_EQ(hc_induce(3, ParabolicSubset{1, 2}, UniLabel{{1}, {1}, 1}),
              vec(3, {{"[2,1,1]", 1}, {"[1,2,1]", 1}, {"[1^2,1,1]", 1}, {"[1,1^2,1]", 1}}));
}

TEST(HarishChandra, CuspidalLeviLabel) {
    EXPECT_EQ(hc_induce(3, ParabolicSubset{1, 2}, UniLabel{{}, {}, 3}),
              vec(3, {{"[1,-,3]", 1}, {"[-,1,3]", 1}}));
}

TEST(HarishChandra, SteinbergLeviLabel) {
    // full answer before the principal-block restriction
    EXPECT_EQ(hc_induce(3, ParabolicSubset{1, 2}, UniLabel{{}, {1, 1}, 1}),
              vec(3, {{"[1,1^2,1]", 1}, {"[-,21,1]", 1}, {"[-,1^3,1]", 1}}));
}

TEST(HarishChandra, ImproperSubsetIsIdentity) {
    const UniLabel l{{2}, {1}, 1};
    EXPECT_EQ(hc_induce(3, ParabolicSubset{1, 2, 3}, l), VirtualUniChar::unit(3, l));
}

TEST(HarishChandra, FrobeniusReciprocityAgainstWeylInduction) {
    const WeylGroup& w3 = WeylGroup::get(3);
    const auto& levi = UniCharSet::enumerate(2);
    const auto& set = UniCharSet::enumerate(3);
    const auto sub = w3.parabolic_elements(ParabolicSubset{1, 2});
    for (int li = 0; li < levi.size(); ++li) {
        if (levi.label(li).defect != 1) continue;
        const VirtualUniChar ind = hc_induce(3, ParabolicSubset{1, 2}, levi.label(li));
        const Bipartition lb{levi.label(li).alpha, levi.label(li).beta};
        for (int gi = 0; gi < set.size(); ++gi) {
            if (set.label(gi).defect != 1) continue;
            const Bipartition gb{set.label(gi).alpha, set.label(gi).beta};
            // <Ind chi_lb, chi_gb> = <chi_lb, Res chi_gb> by direct summation
            Rational rhs(0);
            for (const auto& h : sub) {
                SignedPerm trunc;
                trunc.img = {h.img[0], h.img[1]};
                rhs += Rational(signed_character(lb, trunc)) *
                       w3.character_table()[w3.bipartition_index(gb)][w3.class_of(h)];
            }
            rhs /= Rational(static_cast<long>(sub.size()));
            EXPECT_EQ(ind.coeff[gi], rhs)
                << levi.label(li).name() << " -> " << set.label(gi).name();
        }
    }
}

TEST(HarishChandra, ErrorsOnBadInput) {
    EXPECT_THROW(hc_induce(3, ParabolicSubset{2, 3}, UniLabel{{2}, {}, 1}), std::invalid_argument);
    EXPECT_THROW(hc_induce(2, ParabolicSubset{1}, UniLabel{{}, {}, 3}), std::invalid_argument);
    EXPECT_THROW(psi_columns(3, EllCase::Case3, nullptr), std::invalid_argument);
}

std::vector<ProjColumn> columns_for(int rank, EllCase c) {
    if (rank == 2) return psi_columns(2, c, nullptr);
    const SolveResult so5 = solve(2, c);
    const LeviPims pims = levi_pims_from(so5);
    return psi_columns(3, c, &pims);
}

TEST(HarishChandra, Rank2ColumnsMatchPublishedTable) {
    for (EllCase c : {EllCase::Case3, EllCase::Case5, EllCase::Large}) {
        const auto cols = columns_for(2, c);
        ASSERT_EQ(cols.size(), 5u);
        const Affine m = m_exp_affine(c);
        const std::vector<std::vector<Affine>> want = {
            {Affine(1), Affine(0), Affine(0), Affine(0), Affine(0)},
            {Affine(0), Affine(1), Affine(0), Affine(0), Affine(0)},
            {Affine(1), Affine(0), Affine(1), Affine(0), Affine(0)},
            {Affine(1), Affine(0), Affine(0), Affine(1), Affine(0)},
            {Affine(1), m, Affine(1), Affine(1), Affine(1)},
        };
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t r = 0; r < 5; ++r)
                EXPECT_EQ(cols[j].values[r], want[r][j]) << "col " << j << " row " << r;
    }
}

TEST(HarishChandra, Rank3ColumnsMatchPublishedTable) {
    const auto cols = columns_for(3, EllCase::Large);
    ASSERT_EQ(cols.size(), 10u);
    const auto& set = UniCharSet::enumerate(3);
    auto row_of = [&](const char* name) {
        int r = 0;
        for (int i = 0; i < set.size(); ++i) {
            if (set.block(i) != BlockKind::Principal) continue;
            if (set.label(i).name() == name) return r;
            ++r;
        }
        throw std::logic_error("row not found");
    };
    // the fourth column: cuspidal pair plus alpha on the two Steinberg-side rows
    EXPECT_EQ(cols[3].values[row_of("[1,-,3]")], Affine(1));
    EXPECT_EQ(cols[3].values[row_of("[-,1,3]")], Affine(1));
    EXPECT_EQ(cols[3].values[row_of("[1,1^2,1]")], Affine(2));
    EXPECT_EQ(cols[3].values[row_of("[-,1^3,1]")], Affine(2));
    EXPECT_EQ(cols[3].values[row_of("[3,-,1]")], Affine(0));
    // the two parabolic columns carry the symbolic multiplicity
    EXPECT_EQ(cols[7].values[row_of("[-,1^3,1]")], Affine::unknown(Unknown::MExp));
    EXPECT_EQ(cols[8].values[row_of("[-,1^3,1]")], Affine::unknown(Unknown::MExp));
    EXPECT_EQ(cols[7].values[row_of("[1^3,-,1]")], Affine(1));
    EXPECT_EQ(cols[8].values[row_of("[-,1,3]")], Affine(1));
}

TEST(HarishChandra, ColumnsAreUnitriangularWithExpectedSources) {
    for (EllCase c : {EllCase::Case3, EllCase::Large}) {
        for (int rank : {2, 3}) {
            const auto cols = columns_for(rank, c);
            for (size_t j = 0; j < cols.size(); ++j) {
                EXPECT_EQ(cols[j].diag_row, static_cast<int>(j));
                EXPECT_EQ(cols[j].values[j], Affine(1));
                for (size_t r = 0; r < j; ++r) EXPECT_TRUE(cols[j].values[r].is_zero());
                EXPECT_EQ(cols[j].source_series.has_value(),
                          cols[j].source == PsiSource::HarishChandra);
            }
        }
    }
}

TEST(HarishChandra, DroppedCoefficientsAreLogged) {
    const auto cols = columns_for(3, EllCase::Case3);
    // the first column drops two copies of each cyclic-block label
    ASSERT_EQ(cols[0].dropped.size(), 2u);
    for (const auto& [label, coeff] : cols[0].dropped) EXPECT_EQ(coeff, Rational(2));
    // the Gelfand-Graev column drops nothing
    EXPECT_TRUE(cols[9].dropped.empty());
}

TEST(HarishChandra, PermutationCharacter) {
    const auto p3 = parabolic_permutation_character(3);
    EXPECT_EQ(p3, (std::vector<Rational>{1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
    const auto p2 = parabolic_permutation_character(2);
    EXPECT_EQ(p2, (std::vector<Rational>{1, 0, 1, 0, 0}));
}

}  // namespace
}  // namespace decmat
