#include <gtest/gtest.h>

#include "qsc/padic.hpp"

using namespace qsc;

namespace {

PadicResidue res(std::int64_t p, std::int64_t v) { return PadicResidue::make(p, 2, v); }

}  // namespace

TEST(PadicGamma, Examples) {
    EXPECT_EQ(padic_gamma(5, 2, res(5, 1)).value, 24);
    EXPECT_EQ(padic_gamma(5, 2, res(5, 0)).value, 1);
    EXPECT_EQ(padic_gamma(5, 2, res(5, 3)).value, 23);
    EXPECT_EQ(padic_gamma(7, 2, ExactRational(1)).value, 48);
}

TEST(PadicGamma, FunctionalEquation) {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        for (std::int64_t m = 1; m + 1 < p * p; ++m) {
            const auto next = padic_gamma(p, 2, res(p, m + 1)), here = padic_gamma(p, 2, res(p, m));
            const auto factor = m % p ? res(p, m) : res(p, 1);
            EXPECT_EQ(next, -(factor * here)) << p << " " << m;
        }
    }
}

// Gamma_p(x) Gamma_p(1 - x) = (-1)^{a}, a in [1, p] with a = x (mod p)
TEST(PadicGamma, Reflection) {
    for (std::int64_t p : {5, 7, 11})
        for (long num = -7; num <= 7; ++num)
            for (long den : {1, 2, 3, 4}) {
                if (den % p == 0) continue;
                const ExactRational x(num, den);
                const auto rx = residue_of(x, p, 2);
                std::int64_t a = rx.value % p;
                if (a == 0) a = p;
                const auto prod = padic_gamma(p, 2, x) * padic_gamma(p, 2, ExactRational(1) - x);
                EXPECT_EQ(prod, res(p, a % 2 ? -1 : 1)) << p << " " << x.get_str();
            }
}

// Gamma_p(x + p) = Gamma_p(x) (mod p)
TEST(PadicGamma, LowPrecisionIsReduction) {
    for (std::int64_t v = 0; v < 49; ++v)
        EXPECT_EQ(padic_gamma(7, 1, PadicResidue::make(7, 1, v)).value, padic_gamma(7, 2, res(7, v)).value % 7) << v;
}

TEST(Rising, Examples) {
    EXPECT_EQ(rising_factorial_mod(ExactRational(3, 7), 0, 5).value, 1);
    EXPECT_EQ(rising_factorial_mod(ExactRational(1), 4, 5).value, 24);
    EXPECT_EQ(rising_factorial_mod(ExactRational(1, 2), 2, 5).value, 7);
}

TEST(Residue, RationalsAndErrors) {
    EXPECT_EQ(residue_of(ExactRational(1, 4), 5).value, 19);
    EXPECT_EQ((residue_of(ExactRational(2, 3), 7) * res(7, 3)).value, 2);
    EXPECT_THROW(residue_of(ExactRational(1, 5), 5), std::domain_error);
    EXPECT_THROW(residue_of(ExactRational(1), 9), invalid_prime);
    EXPECT_THROW(residue_of(ExactRational(1), 2), invalid_prime);
}

TEST(Classical, Examples) {
    EXPECT_EQ(verify_classical(ClassicalId::rv_11, {0, 0, 0, 5}).status, Status::holds);
    EXPECT_EQ(hypergeometric_sum_mod({{ExactRational(1, 2), 2}}, 2, 5).value, 1);
    EXPECT_EQ(verify_classical(ClassicalId::cor41_ii, {3, 1, 0, 5}).status, Status::holds);
    EXPECT_EQ(verify_classical(ClassicalId::wlt_integrality, {3, 0, 5, 0}).status, Status::holds);
}

TEST(Classical, Preconditions) {
    EXPECT_EQ(verify_classical(ClassicalId::rv_11, {0, 0, 0, 9}).status, Status::skipped_precondition);
    EXPECT_EQ(verify_classical(ClassicalId::deines_12, {3, 0, 0, 5}).status, Status::skipped_precondition);
    EXPECT_EQ(verify_classical(ClassicalId::cor41_i, {4, 1, 0, 5}).status, Status::skipped_precondition);
    EXPECT_EQ(verify_classical(ClassicalId::wlt_integrality, {3, 0, 4, 0}).status, Status::skipped_precondition);
}

TEST(Classical, RvHoldsForOddPrimesBelow100) {
    for (std::int64_t p = 3; p < 100; ++p)
        if (is_prime(p)) {
            EXPECT_EQ(verify_classical(ClassicalId::rv_11, {0, 0, 0, p}).status, Status::holds) << p;
        }
}

TEST(Classical, WrongRightHandSideIsDetected) {
    // the sum is (-1)^{(p-1)/2}, so it differs from +1 at p = 7
    EXPECT_NE(hypergeometric_sum_mod({{ExactRational(1, 2), 2}}, 2, 7), res(7, 1));
}

TEST(QOneShadow, Grid) {
    for (auto [d, r, p] : {std::tuple{3L, 1L, 5L}, std::tuple{4L, 1L, 7L}, std::tuple{5L, 2L, 13L}})
        EXPECT_EQ(verify_q1_shadow(d, r, p).status, Status::holds);
}
