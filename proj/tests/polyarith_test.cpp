#include <gtest/gtest.h>

#include "qsc/errors.hpp"
#include "support.hpp"

using namespace qsc;
using namespace qsc::test;

TEST(DivRem, DifferenceOfSquares) {
    auto [q, r] = poly_divrem(P{-1, 0, 1}, P{-1, 1});
    EXPECT_EQ(q, (P{1, 1}));
    EXPECT_TRUE(r.is_zero());
}

TEST(DivRem, SelfDivision) {
    auto [q, r] = poly_divrem(P{0, 1}, P{0, 1});
    EXPECT_EQ(q, P::one());
    EXPECT_TRUE(r.is_zero());
}

TEST(DivRem, CubicByQuadratic) {
    auto [q, r] = poly_divrem(P{1, 2, 0, 1}, P{1, 0, 1});
    EXPECT_EQ(q, (P{0, 1}));
    EXPECT_EQ(r, (P{1, 1}));
}

TEST(DivRem, ZeroDivisorThrows) { EXPECT_THROW(poly_divrem(P{1, 1}, P{}), division_by_zero_polynomial); }

TEST(DivRem, RandomReconstruction) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const P a = random_poly(rng, 12), b = random_poly(rng, 6);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divrem(a, b);
        EXPECT_EQ(schoolbook(q, b) + r, a);
        EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
    }
}

TEST(Multiply, MatchesSchoolbook) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const P a = random_poly(rng, 20), b = random_poly(rng, 20);
        EXPECT_EQ(a * b, schoolbook(a, b));
    }
}

TEST(Xgcd, CoprimeLinear) {
    const P a{-1, 1}, b{1, 1};
    auto x = poly_xgcd(a, b);
    EXPECT_EQ(x.g, P::one());
    EXPECT_EQ(x.s * a + x.t * b, P::one());
}

TEST(Xgcd, DivisorCase) { EXPECT_EQ(poly_xgcd(P{-1, 0, 1}, P{-1, 1}).g, (P{-1, 1})); }

TEST(Xgcd, Phi5AndQ) {
    const P phi5{1, 1, 1, 1, 1}, q{0, 1};
    auto x = poly_xgcd(phi5, q);
    EXPECT_EQ(x.g, P::one());
    EXPECT_EQ(x.s * phi5 + x.t * q, P::one());
}

TEST(Xgcd, RandomBezout) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const P common = random_poly(rng, 3, 4);
        const P a = random_poly(rng, 8) * common, b = random_poly(rng, 8) * common;
        if (a.is_zero() || b.is_zero()) continue;
        auto x = poly_xgcd(a, b);
        EXPECT_EQ(x.s * a + x.t * b, x.g);
        EXPECT_TRUE(poly_divrem(a, x.g).second.is_zero());
        EXPECT_TRUE(poly_divrem(b, x.g).second.is_zero());
        if (!common.is_zero()) {
            EXPECT_TRUE(poly_divrem(x.g, common.monic()).second.is_zero());
        }
    }
}

TEST(Evaluate, LaurentAtTwo) {
    const L f = L(P{1, 0, 1}, -1);  // q^{-1} + q
    EXPECT_EQ(f.eval(Q(2)), Q(5, 2));
}

TEST(Evaluate, CancelledQuotient) {
    const R f(L(P{-1, 0, 1}), P{-1, 1});
    EXPECT_TRUE(f.is_laurent());
    EXPECT_EQ(f.eval(Q(3)), Q(4));
}

TEST(Evaluate, NegativePowerAtZero) { EXPECT_THROW(L(P{1}, -1).eval(Q(0)), zero_base_error); }

TEST(Evaluate, PoleThrows) { EXPECT_THROW(R(L(P{1}), P{-1, 1}).eval(Q(1)), pole_error); }

TEST(Laurent, ArithmeticMatchesEvaluation) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const L a(random_poly(rng, 6), static_cast<long>(rng() % 7) - 3);
        const L b(random_poly(rng, 6), static_cast<long>(rng() % 7) - 3);
        for (Q x : {Q(2), Q(-3, 2), Q(5, 7)}) {
            EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
            EXPECT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
            EXPECT_EQ((a - b).eval(x), a.eval(x) - b.eval(x));
        }
    }
}

TEST(RationalFunctionTest, FieldOperationsMatchEvaluation) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        const R a(L(random_poly(rng, 4), -1), P{2, 1}), b(L(random_poly(rng, 4), 1), P{3, 0, 1});
        for (Q x : {Q(1), Q(2, 3), Q(-5)}) {
            EXPECT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
            EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
            if (!b.is_zero() && b.eval(x) != 0) {
                EXPECT_EQ((a / b).eval(x), a.eval(x) / b.eval(x));
            }
        }
    }
}

TEST(RationalFunctionTest, NormalFormIsCanonical) {
    const R a(L(P{-1, 0, 1}), P{-1, 1});
    const R b(L(P{1, 1}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(R(L(P{0, 0, 2}), P{0, 4}), R(L(P::monomial(Q(1, 2), 1))));
}

TEST(PrimeField, ArithmeticAgreesWithReduction) {
    PrimeFieldScope scope(1000003);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        const P a = random_poly(rng, 8), b = random_poly(rng, 8);
        const auto fa = convert<ModP>(a), fb = convert<ModP>(b);
        EXPECT_EQ(fa * fb, convert<ModP>(a * b));
        EXPECT_EQ(fa + fb, convert<ModP>(a + b));
    }
    EXPECT_EQ(coeff_traits<ModP>::from_rational(Q(1, 2)) * coeff_traits<ModP>::from_rational(Q(2)), coeff_traits<ModP>::from_int(1));
}
