#include <gtest/gtest.h>

#include "qsc/qobjects.hpp"
#include "support.hpp"

using namespace qsc;
using namespace qsc::test;

TEST(Pochhammer, TwoFactorExample) {
    // (q^{-1}; q^2)_2 = (1 - q^{-1})(1 - q) = 2 - q - q^{-1}
    EXPECT_EQ(q_pochhammer_laurent(QMonomial<Q>::power(-1), 2, 2), L(P{-1, 2, -1}, -1));
}

TEST(Pochhammer, EmptyProduct) {
    for (long e : {-3, 0, 4})
        for (long step : {1, 3}) EXPECT_EQ(q_pochhammer(QMonomial<Q>::power(e), step, 0), R(L::one()));
}

TEST(Pochhammer, NegativeIndexExample) {
    // (q^3; q^2)_{-1} = 1/(1 - q)
    EXPECT_EQ(q_pochhammer(QMonomial<Q>::power(3), 2, -1), R(L::one(), P{1, -1}));
}

// (x; q)_{-m} (x q^{-m}; q)_m = 1
TEST(Pochhammer, NegativeAndPositiveAgree) {
    for (long e = -4; e <= 6; ++e)
        for (long step = 1; step <= 3; ++step)
            for (long m = 1; m <= 4; ++m) {
                const long shifted = e - step * m;
                bool degenerate = false;
                for (long j = 1; j <= m; ++j) degenerate |= e - step * j == 0;
                if (degenerate) {
                    EXPECT_THROW(q_pochhammer(QMonomial<Q>::power(e), step, -m), degenerate_error);
                    continue;
                }
                const auto neg = q_pochhammer(QMonomial<Q>::power(e), step, -m);
                const auto pos = q_pochhammer(QMonomial<Q>::power(shifted), step, m);
                EXPECT_EQ(neg * pos, R(L::one())) << e << " " << step << " " << m;
            }
}

TEST(Pochhammer, SplitsAtAnyLength) {
    // (x; q)_{a+b} = (x; q)_a (x q^{a}; q)_b
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b) {
            const auto whole = q_pochhammer_laurent(QMonomial<Q>::power(2), 3, a + b);
            const auto split = q_pochhammer_laurent(QMonomial<Q>::power(2), 3, a) *
                               q_pochhammer_laurent(QMonomial<Q>::power(2 + 3 * a), 3, b);
            EXPECT_EQ(whole, split);
        }
}

TEST(QBinomial, Examples) {
    EXPECT_EQ(q_binomial(7, 0), P::one());
    EXPECT_EQ(q_binomial(4, 2), (P{1, 1, 2, 1, 1}));
    EXPECT_TRUE(q_binomial(3, 5).is_zero());
    EXPECT_TRUE(q_binomial(3, -1).is_zero());
}

// [n k] = [n-1 k-1] + q^k [n-1 k]
TEST(QBinomial, PascalRecurrence) {
    for (long n = 1; n <= 18; ++n)
        for (long k = 0; k <= n; ++k)
            EXPECT_EQ(q_binomial(n, k), q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(static_cast<std::size_t>(k)))
                << n << " " << k;
}

TEST(QBinomial, SymmetricAndClassicalAtOne) {
    for (long n = 0; n <= 14; ++n)
        for (long k = 0; k <= n; ++k) {
            EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            EXPECT_EQ(q_binomial(n, k).eval(Q(1)), Q(c));
        }
}
