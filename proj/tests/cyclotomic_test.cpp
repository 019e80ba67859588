#include <gtest/gtest.h>

#include "qsc/cyclotomic.hpp"
#include "support.hpp"

using namespace qsc;
using namespace qsc::test;

TEST(Cyclotomic, Examples) {
    EXPECT_EQ(cyclotomic(1), (P{-1, 1}));
    EXPECT_EQ(cyclotomic(5), (P{1, 1, 1, 1, 1}));
    EXPECT_EQ(cyclotomic(6), (P{1, -1, 1}));
}

// q^n - 1 = prod_{m | n} Phi_m, checked by repeated exact division.
TEST(Cyclotomic, DivisorProductUpTo60) {
    for (long n = 1; n <= 60; ++n) {
        P rest = P::q_power_minus_one(static_cast<std::size_t>(n));
        for (long m : divisors(n)) rest = divide_exact(rest, cyclotomic(m));
        EXPECT_EQ(rest, P::one()) << "n = " << n;
    }
}

TEST(Cyclotomic, InvariantsUpTo60) {
    for (long n = 1; n <= 60; ++n) {
        const P phi = cyclotomic(n);
        EXPECT_EQ(phi.degree(), euler_phi(n)) << n;
        EXPECT_EQ(phi.leading(), 1) << n;
        for (const auto& c : phi.coefficients()) EXPECT_TRUE(c.get_den() == 1) << n;
        if (n == 1) continue;
        // palindromic
        const auto& c = phi.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i], c[c.size() - 1 - i]) << n;
        // Phi_n(1) = p for n = p^e, else 1
        const auto f = factorize(n);
        EXPECT_EQ(phi.eval(Q(1)), f.size() == 1 ? Q(f.front().first) : Q(1)) << n;
    }
}

TEST(Cyclotomic, PairwiseCoprime) {
    for (long a = 2; a <= 20; ++a)
        for (long b = a + 1; b <= 20; ++b) EXPECT_EQ(poly_gcd(cyclotomic(a), cyclotomic(b)), P::one()) << a << "," << b;
}

TEST(QInteger, Examples) {
    EXPECT_EQ(q_integer(1), P::one());
    EXPECT_EQ(q_integer(4), (P{1, 1, 1, 1}));
    P prod = P::one();
    for (long m : divisors(12))
        if (m > 1) prod = prod * cyclotomic(m);
    EXPECT_EQ(q_integer(12), prod);
}

TEST(NumberTheory, Examples) {
    EXPECT_EQ(euler_phi(6), 2);
    EXPECT_EQ(mobius(4), 0);
    EXPECT_EQ(mobius(30), -1);
    EXPECT_EQ(mobius(1), 1);
}

TEST(NumberTheory, MobiusSumsToZero) {
    for (long n = 2; n <= 200; ++n) {
        long s = 0, phi_sum = 0;
        for (long m : divisors(n)) s += mobius(m), phi_sum += euler_phi(m);
        EXPECT_EQ(s, 0) << n;
        EXPECT_EQ(phi_sum, n) << n;
    }
}

TEST(Cyclotomic, PrimeFieldCopyMatches) {
    PrimeFieldScope scope(998244353);
    for (long n = 1; n <= 30; ++n) EXPECT_EQ(cyclotomic<ModP>(n), convert<ModP>(cyclotomic(n)));
}
