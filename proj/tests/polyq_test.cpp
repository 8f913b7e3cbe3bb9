#include "decmat/polyq.hpp"

#include <gtest/gtest.h>

#include <random>

namespace decmat {
namespace {

TEST(PolyQ, CyclotomicValues) {
    EXPECT_EQ(cyclotomic(1), (PolyQ{Rational(-1), Rational(1)}));
    EXPECT_EQ(cyclotomic(2), (PolyQ{Rational(1), Rational(1)}));
    EXPECT_EQ(cyclotomic(3), (PolyQ{Rational(1), Rational(1), Rational(1)}));
    EXPECT_EQ(cyclotomic(4), (PolyQ{Rational(1), Rational(0), Rational(1)}));
    EXPECT_EQ(cyclotomic(6), (PolyQ{Rational(1), Rational(-1), Rational(1)}));
    EXPECT_THROW(cyclotomic(5), std::invalid_argument);
    EXPECT_THROW(cyclotomic(0), std::invalid_argument);
}

TEST(PolyQ, EvalExamples) {
    // 1/2 * q * phi2^2 at q = 3 is 1/2 * 3 * 16 = 24
    const PolyQ p = PolyQ::q() * cyclotomic(2) * cyclotomic(2) * frac(1, 2);
    EXPECT_EQ(p.eval_at(3), Rational(24));
    EXPECT_EQ(PolyQ::q_power(9).eval_at(1), Rational(1));
    EXPECT_EQ((cyclotomic(1) * cyclotomic(1)).eval_at(1), Rational(0));
    EXPECT_EQ(p.eval_at(frac(1, 2)), frac(1, 2) * frac(1, 2) * frac(9, 4));
}

PolyQ random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 4), num(-6, 6), den(1, 3);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = frac(num(rng), den(rng));
    return PolyQ::from_coeffs(std::move(c));
}

TEST(PolyQ, RingAxiomsOnRandomPolynomials) {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const PolyQ a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, PolyQ::zero());
        EXPECT_EQ(a * PolyQ::one(), a);
    }
}

TEST(PolyQ, CyclotomicIdentities) {
    const PolyQ p1 = cyclotomic(1), p2 = cyclotomic(2), p3 = cyclotomic(3), p4 = cyclotomic(4),
                p6 = cyclotomic(6);
    EXPECT_EQ(p1 * p2 * p3 * p6, PolyQ::q_power(6) - PolyQ::one());
    EXPECT_EQ(p1 * p1 * p2 * p2,
              (PolyQ::q_power(2) - PolyQ::one()) * (PolyQ::q_power(2) - PolyQ::one()));
}

TEST(PolyQ, GroupOrderFromCyclotomicFactors) {
    const PolyQ p1 = cyclotomic(1), p2 = cyclotomic(2), p3 = cyclotomic(3), p4 = cyclotomic(4),
                p6 = cyclotomic(6);
    const PolyQ q6m1 = p1 * p2 * p3 * p6;
    const PolyQ q4m1 = p1 * p2 * p4;
    const PolyQ q2m1 = p1 * p2;
    const PolyQ order = PolyQ::q_power(9) * q6m1 * q4m1 * q2m1;
    PolyQ direct = PolyQ::q_power(9);
    direct *= PolyQ::q_power(6) - PolyQ::one();
    direct *= PolyQ::q_power(4) - PolyQ::one();
    direct *= PolyQ::q_power(2) - PolyQ::one();
    EXPECT_EQ(order, direct);
}

TEST(PolyQ, ExactDivision) {
    const PolyQ prod = cyclotomic(3) * cyclotomic(4) * frac(1, 2);
    auto quot = prod.divide_exact(cyclotomic(4));
    ASSERT_TRUE(quot.has_value());
    EXPECT_EQ(*quot, cyclotomic(3) * frac(1, 2));
    EXPECT_FALSE(prod.divide_exact(cyclotomic(6)).has_value());
    EXPECT_THROW(prod.divide_exact(PolyQ::zero()), std::invalid_argument);
}

TEST(PolyQ, Printing) {
    const PolyQ p = PolyQ::q_power(2) * cyclotomic(3) * cyclotomic(6);
    EXPECT_EQ(p.to_factored_string(), "q^2 phi3 phi6");
    EXPECT_EQ((PolyQ::q() * cyclotomic(4) * frac(1, 2)).to_factored_string(), "1/2 q phi4");
    EXPECT_EQ(PolyQ::one().to_factored_string(), "1");
    EXPECT_EQ(cyclotomic(6).to_string(), "q^2 - q + 1");
    // a polynomial outside the factor list falls back to expanded form
    EXPECT_EQ((PolyQ::q() + PolyQ(Rational(5))).to_factored_string(), "q + 5");
}

TEST(PolyQ, EllCases) {
    EXPECT_EQ(m_exp_value(EllCase::Case3), 1);
    EXPECT_EQ(m_exp_value(EllCase::Case5), 2);
    EXPECT_FALSE(m_exp_value(EllCase::Large).has_value());
    EXPECT_EQ(parse_ell_case("3"), EllCase::Case3);
    EXPECT_EQ(parse_ell_case("large"), EllCase::Large);
    EXPECT_FALSE(parse_ell_case("7").has_value());
}

}  // namespace
}  // namespace decmat
