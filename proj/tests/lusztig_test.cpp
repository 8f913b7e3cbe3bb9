#include "decmat/lusztig.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

namespace decmat {
namespace {

VirtualUniChar vec(int rank, const std::vector<std::pair<const char*, long>>& terms) {
    const auto& set = UniCharSet::enumerate(rank);
    VirtualUniChar v = VirtualUniChar::zero(rank);
    for (const auto& [name, c] : terms) v.coeff[set.index_by_name(name)] = c;
    return v;
}

TEST(Lusztig, FourierBlocksAreSymmetricInvolutions) {
    for (int rank : {2, 3}) {
        const LusztigContext& ctx = LusztigContext::get(rank);
        for (const auto& blk : ctx.fourier_blocks()) {
            const size_t n = blk.matrix.size();
            EXPECT_TRUE(n == 1 || n == 4);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    EXPECT_EQ(blk.matrix[i][j], blk.matrix[j][i]);
                    Rational s(0);
                    for (size_t k = 0; k < n; ++k) s += blk.matrix[i][k] * blk.matrix[k][j];
                    EXPECT_EQ(s, i == j ? Rational(1) : Rational(0));
                }
        }
    }
}

TEST(Lusztig, IdentityTorusCharacter) {
    // R at the identity twist carries each series label with its Weyl degree
    const LusztigContext& ctx = LusztigContext::get(3);
    EXPECT_EQ(ctx.dl_character(std::vector<int>{}),
              vec(3, {{"[3,-,1]", 1},
                      {"[2,1,1]", 3},
                      {"[-,3,1]", 1},
                      {"[1,2,1]", 3},
                      {"[1^2,1,1]", 3},
                      {"[1,1^2,1]", 3},
                      {"[1^3,-,1]", 1},
                      {"[-,1^3,1]", 1},
                      {"[21,-,1]", 2},
                      {"[-,21,1]", 2}}));
}

TEST(Lusztig, PublishedExpansions) {
    const LusztigContext& l3 = LusztigContext::get(3);
    EXPECT_EQ(l3.dl_character({1, 2, 3}),
              vec(3, {{"[3,-,1]", 1},
                      {"[2,1,1]", -1},
                      {"[1,-,3]", 1},
                      {"[1,1^2,1]", 1},
                      {"[-,1,3]", -1},
                      {"[-,1^3,1]", -1}}));
    EXPECT_EQ(l3.dl_character({1, 2, 1, 2, 3}),
              vec(3, {{"[3,-,1]", 1},
                      {"[21,-,1]", -1},
                      {"[1,-,3]", -1},
                      {"[1,2,1]", -1},
                      {"[1^2,1,1]", 1},
                      {"[-,21,1]", 1},
                      {"[-,1,3]", 1},
                      {"[-,1^3,1]", -1}}));
    const LusztigContext& l2 = LusztigContext::get(2);
    EXPECT_EQ(l2.dl_character({1, 2}),
              vec(2, {{"[2,-,1]", 1}, {"[-,-,3]", 1}, {"[1,1,1]", -1}, {"[-,1^2,1]", 1}}));
}

TEST(Lusztig, InnerProductExamples) {
    const LusztigContext& l3 = LusztigContext::get(3);
    const VirtualUniChar rw1 = l3.dl_character({1, 2, 3});
    const VirtualUniChar rw2 = l3.dl_character({1, 2, 1, 2, 3});
    EXPECT_EQ(rw1.inner(rw1), Rational(6));
    EXPECT_EQ(rw1.inner(rw2), Rational(0));
    EXPECT_EQ(l3.dl_character(std::vector<int>{})
                  .inner(VirtualUniChar::unit(3, UniLabel{{3}, {}, 1})),
              Rational(1));
    VirtualUniChar wrong_rank = VirtualUniChar::zero(2);
    EXPECT_THROW(rw1.inner(wrong_rank), std::invalid_argument);
}

TEST(Lusztig, OrthogonalityOverAllClassPairs) {
    for (int rank : {2, 3}) {
        const LusztigContext& ctx = LusztigContext::get(rank);
        const auto& classes = ctx.weyl().classes();
        for (size_t a = 0; a < classes.size(); ++a)
            for (size_t b = 0; b < classes.size(); ++b)
                EXPECT_EQ(ctx.dl_character_of_class(static_cast<int>(a))
                              .inner(ctx.dl_character_of_class(static_cast<int>(b))),
                          a == b ? Rational(classes[a].centralizer_order) : Rational(0));
    }
}

TEST(Lusztig, DegreeIdentityAllClasses) {
    for (int rank : {2, 3}) {
        const LusztigContext& ctx = LusztigContext::get(rank);
        const PolyQ order = ctx.group_order_prime_part();
        for (const auto& cls : ctx.weyl().classes()) {
            const PolyQ prod =
                ctx.dl_character(cls.min_rep).degree() * ctx.weyl().char_poly(cls.min_rep);
            EXPECT_EQ(prod, order * Rational(ctx.degree_identity_sign(cls.min_rep)))
                << cls.min_rep.to_string();
        }
    }
}

TEST(Lusztig, ClassInvarianceOnRandomConjugates) {
    const LusztigContext& ctx = LusztigContext::get(3);
    std::mt19937 rng(42);
    std::uniform_int_distribution<size_t> pick(0, ctx.weyl().elements().size() - 1);
    for (const auto& cls : ctx.weyl().classes()) {
        const VirtualUniChar base = ctx.dl_character(cls.min_rep);
        for (int t = 0; t < 4; ++t) {
            const SignedPerm x = ctx.weyl().elements()[pick(rng)];
            EXPECT_EQ(ctx.dl_character(x * cls.min_rep * x.inverse()), base);
        }
    }
}

TEST(Lusztig, RelationVectorExamples) {
    const LusztigContext& l3 = LusztigContext::get(3);
    const auto rels = l3.relation_vectors(EllCase::Large);
    ASSERT_EQ(rels.size(), 10u);
    EXPECT_EQ(rels[0].name, "chi9_1");
    EXPECT_EQ(rels[0].vec,
              vec(3, {{"[3,-,1]", 1}, {"[2,1,1]", -1}, {"[-,3,1]", -1}, {"[1,2,1]", 1}}));
    EXPECT_EQ(rels[9].name, "chi32");
    EXPECT_EQ(rels[9].vec, vec(3, {{"[3,-,1]", -1},
                                   {"[2,1,1]", 1},
                                   {"[-,3,1]", 3},
                                   {"[1,-,3]", 2},
                                   {"[1,2,1]", -3},
                                   {"[1^2,1,1]", 3},
                                   {"[1,1^2,1]", -1},
                                   {"[1^3,-,1]", -3},
                                   {"[-,1,3]", -2},
                                   {"[-,1^3,1]", 1}}));
    const LusztigContext& l2 = LusztigContext::get(2);
    const auto rels2 = l2.relation_vectors(EllCase::Case5);
    ASSERT_EQ(rels2.size(), 3u);
    EXPECT_EQ(rels2[2].name, "chi3");
    EXPECT_EQ(rels2[2].vec, vec(2, {{"[2,-,1]", 1},
                                    {"[-,-,3]", -2},
                                    {"[1^2,-,1]", -1},
                                    {"[-,2,1]", -1},
                                    {"[-,1^2,1]", 1}}));
}

TEST(Lusztig, RelationCaseGating) {
    EXPECT_EQ(LusztigContext::get(2).relation_vectors(EllCase::Case3).size(), 2u);
    EXPECT_EQ(LusztigContext::get(2).relation_vectors(EllCase::Case5).size(), 3u);
    EXPECT_EQ(LusztigContext::get(2).relation_vectors(EllCase::Large).size(), 3u);
    EXPECT_EQ(LusztigContext::get(3).relation_vectors(EllCase::Case3).size(), 7u);
    EXPECT_EQ(LusztigContext::get(3).relation_vectors(EllCase::Case5).size(), 9u);
    EXPECT_EQ(LusztigContext::get(3).relation_vectors(EllCase::Large).size(), 10u);
}

TEST(Lusztig, RelationDegreesMatchTheConstructedCharacters) {
    const PolyQ p1 = cyclotomic(1), p3 = cyclotomic(3), p4 = cyclotomic(4), p6 = cyclotomic(6);
    const LusztigContext& l3 = LusztigContext::get(3);
    std::map<std::string, PolyQ> want = {
        {"chi9_1", p1 * p1 * p3 * p4},
        {"chi9_2", PolyQ::q() * p1 * p1 * p1 * p3 * p4},
        {"chi9_3", PolyQ::q_power(3) * p1 * p1 * p3 * p4},
        {"chi13_1", p1 * p3 * p4 * p6},
        {"chi13_2", PolyQ::q() * p1 * p3 * p4 * p6},
        {"chi13_3", PolyQ::q() * p1 * p3 * p4 * p6},
        {"chi13_4", PolyQ::q_power(2) * p1 * p3 * p4 * p6},
        {"chi23_1", p1 * p1 * p3 * p4 * p6},
        {"chi23_2", PolyQ::q() * p1 * p1 * p3 * p4 * p6},
        {"chi32", p1 * p1 * p1 * p3 * p4 * p6},
    };
    for (const auto& rel : l3.relation_vectors(EllCase::Large))
        EXPECT_EQ(rel.vec.degree(), want.at(rel.name)) << rel.name;
    const LusztigContext& l2 = LusztigContext::get(2);
    std::map<std::string, PolyQ> want2 = {
        {"chi1", p1 * p4},
        {"chi2", PolyQ::q() * p1 * p4},
        {"chi3", p1 * p1 * p4},
    };
    for (const auto& rel : l2.relation_vectors(EllCase::Large))
        EXPECT_EQ(rel.vec.degree(), want2.at(rel.name)) << rel.name;
}

TEST(Lusztig, RelationsVanishOutsidePrincipalBlock) {
    const auto& set = UniCharSet::enumerate(3);
    for (const auto& rel : LusztigContext::get(3).relation_vectors(EllCase::Large))
        for (int i = 0; i < set.size(); ++i)
            if (set.block(i) != BlockKind::Principal)
                EXPECT_EQ(rel.vec.coeff[i], Rational(0)) << rel.name;
}

TEST(Lusztig, BrauerPairingExamples) {
    // the published Brauer vectors of the two cuspidal Steinberg columns
    const LusztigContext& l2 = LusztigContext::get(2);
    std::vector<Affine> phi5(5);
    phi5[0] = Affine(1);
    phi5[1] = -Affine::unknown(Unknown::Alpha);
    phi5[2] = Affine(-1);
    phi5[3] = Affine(-1);
    phi5[4] = Affine(1);
    EXPECT_EQ(l2.brauer_pairing(l2.dl_character({1, 2}), phi5),
              Affine(2) - Affine::unknown(Unknown::Alpha));

    const LusztigContext& l3 = LusztigContext::get(3);
    const Affine B = Affine::unknown(Unknown::Beta), G = Affine::unknown(Unknown::Gamma);
    std::vector<Affine> phi10 = {Affine(-1), Affine(1), B, G, -B, B, Affine(-1), -B, -G, Affine(1)};
    EXPECT_EQ(l3.brauer_pairing(l3.dl_character({1, 2, 3}), phi10), G * Rational(2) - Affine(4));
    EXPECT_EQ(l3.brauer_pairing(l3.dl_character({1, 2, 1, 2, 3}), phi10),
              B * Rational(2) - G * Rational(2) - Affine(2));
}

TEST(Lusztig, MinimalNonvanishingScan) {
    const LusztigContext& l2 = LusztigContext::get(2);
    std::vector<Affine> phi5(5);
    phi5[0] = Affine(1);
    phi5[1] = -Affine::unknown(Unknown::Alpha);
    phi5[2] = Affine(-1);
    phi5[3] = Affine(-1);
    phi5[4] = Affine(1);
    const PairingScan scan = l2.minimal_nonvanishing(phi5);
    ASSERT_TRUE(scan.found());
    EXPECT_EQ(scan.length, 2);
    EXPECT_EQ(scan.class_id, l2.weyl().class_of(l2.weyl().word_element({1, 2})));
    EXPECT_EQ(scan.expression, Affine(2) - Affine::unknown(Unknown::Alpha));
    EXPECT_EQ(scan.at_min_length.size(), 1u);
    EXPECT_EQ(scan.vanishing_shorter_classes.size(), 3u);  // identity and the two reflections

    // the trivial unit vector pairs with everything at the identity already
    std::vector<Affine> triv(5);
    triv[0] = Affine(1);
    const PairingScan s2 = l2.minimal_nonvanishing(triv);
    ASSERT_TRUE(s2.found());
    EXPECT_EQ(s2.length, 0);
    EXPECT_EQ(s2.expression, Affine(1));
}

}  // namespace
}  // namespace decmat
