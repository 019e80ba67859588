#include <gtest/gtest.h>

#include "qsc/identities.hpp"
#include "qsc/parametric.hpp"
#include "qsc/qobjects.hpp"
#include "qsc/theorems.hpp"
#include "support.hpp"

using namespace qsc;
using namespace qsc::test;

namespace {

using Ring = ResidueRing<Q>;

R poch(long e, long step, long k) { return q_pochhammer(QMonomial<Q>::power(e), step, k); }

L poch_l(long e, long step, long k) { return q_pochhammer_laurent(QMonomial<Q>::power(e), step, k); }

L pow_l(const L& x, long m) {
    L acc = L::one();
    for (long i = 0; i < m; ++i) acc = acc * x;
    return acc;
}

/// The truncated sum as one unreduced fraction num/den, built term by term by
/// cross-multiplication.
struct Fraction {
    L num, den = L::one();
};

Fraction whole_sum(SumFamily f, long d, long r, long n) {
    const auto spec = family_summand(f, d, r);
    Fraction total;
    for (long k = 0; k < n; ++k) {
        L tn = L::monomial(Q(1), d * k), td = L::one();
        for (const auto& x : spec.numerator) tn = tn * pow_l(poch_l(x.beta, d, k), x.mult);
        for (const auto& x : spec.denominator) td = td * pow_l(poch_l(x.beta, d, k), x.mult);
        total.num = total.num * td + tn * total.den;
        total.den = total.den * td;
    }
    return total;
}

RingElement<Q> reduce(const R& f, const Ring& ring) {
    return ring.reduce(f.numerator()) * ring.reduce(f.denominator()).inverse();
}

RingElement<Q> reduce(const Fraction& f, const Ring& ring) { return ring.reduce(f.num) * ring.reduce(f.den).inverse(); }

}  // namespace

TEST(LhsSum, SquaredTwoTermsByHand) {
    auto ring = Ring::make(2, ModulusKind::phi_squared);
    // 1 + (q^4;q^3)_1 (q;q^3)_1^2 q^3 / (q^3;q^3)_1^3
    const R hand = R(L::one()) + R(L(P{1, 0, 0, 0, -1}) * L(P{1, -1}) * L(P{1, -1}) * L::monomial(Q(1), 3),
                                   P{1, 0, 0, -1} * P{1, 0, 0, -1} * P{1, 0, 0, -1});
    EXPECT_EQ(lhs_sum(SumFamily::f3_squared, 3, 1, 2, *ring), reduce(hand, *ring));
}

TEST(LhsSum, AgreesWithWholeSumOracle) {
    const std::vector<std::tuple<SumFamily, long, long, long>> cases = {
        {SumFamily::f1_base, 2, 1, 3},       {SumFamily::f1_base, 3, 1, 7},    {SumFamily::f2_mixed, 3, 1, 5},
        {SumFamily::f3_squared, 5, 1, 4},   {SumFamily::f4_lemma, 4, 1, 7},  {SumFamily::f5_thm41, 5, 2, 8},
        {SumFamily::f6_thm42, 3, 2, 4},     {SumFamily::f7_divisibility, 2, 1, 5}};
    for (auto [f, d, r, n] : cases) {
        auto ring = Ring::make(n, ModulusKind::phi_squared);
        const auto incremental = lhs_sum(f, d, r, n, *ring);
        EXPECT_EQ(incremental, reduce(whole_sum(f, d, r, n), *ring)) << d << " " << r << " " << n;
        EXPECT_EQ(incremental, (lhs_sum_oracle<Integer>(f, d, r, n, *ring)));
    }
}

TEST(LhsSum, LemmaSumIsZero) {
    auto ring = Ring::make(7, ModulusKind::phi_squared);
    EXPECT_TRUE(lhs_sum(SumFamily::f4_lemma, 4, 1, 7, *ring).is_zero());
    EXPECT_TRUE(reduce(whole_sum(SumFamily::f4_lemma, 4, 1, 7), *ring).is_zero());
}

TEST(RhsClosedForm, BaseFamilyAtTwoThree) {
    // (q^2;q^2)_1 q^2 / ((q^2;q^2)_1)^1 with sign (-1)^1 is -q^2
    auto ring = Ring::make(3, ModulusKind::phi_squared);
    EXPECT_EQ(rhs_closed_form(TheoremId::eq13, 2, 1, 3, *ring), ring->reduce(L::monomial(Q(-1), 2)));
    EXPECT_EQ(lhs_sum(SumFamily::f1_base, 2, 1, 3, *ring), ring->reduce(L::monomial(Q(-1), 2)));
}

TEST(RhsClosedForm, LemmaIsZero) {
    auto ring = Ring::make(9, ModulusKind::phi_squared);
    EXPECT_TRUE(rhs_closed_form(TheoremId::lemma21, 5, 1, 9, *ring).is_zero());
}

TEST(Exponent, Examples) {
    EXPECT_EQ(a_exponent(3, 5, 1), 17);
    EXPECT_EQ(a_exponent(2, 3, 1), 5);
}

TEST(Theorem, Examples) {
    EXPECT_EQ(verify_theorem<ExactMode>(TheoremId::thm12, 3, 1, 5).status, Status::holds);
    EXPECT_EQ(verify_theorem<ExactMode>(TheoremId::thm11, 4, 1, 7).status, Status::holds);
    EXPECT_EQ(verify_theorem<ExactMode>(TheoremId::thm11, 4, 1, 6).status, Status::skipped_precondition);
}

TEST(Theorem, BoundaryCaseCarriesNote) {
    const auto o = verify_theorem<ExactMode>(TheoremId::thm12, 3, 1, 2);
    EXPECT_EQ(o.status, Status::holds);
    ASSERT_TRUE(o.note);
    EXPECT_NE(o.note->find("n = 2"), std::string::npos);
}

TEST(Theorem, MutationsFail) {
    for (auto m : {Mutation::flip_sign, Mutation::bump_exponent}) {
        const auto o = verify_theorem<ExactMode>(TheoremId::thm12, 3, 1, 5, m);
        EXPECT_EQ(o.status, Status::fails);
        EXPECT_TRUE(o.witness);
    }
    // a zero closed form has nothing to perturb
    EXPECT_EQ(verify_theorem<ExactMode>(TheoremId::lemma21, 4, 1, 7, Mutation::flip_sign).status, Status::holds);
}

TEST(Theorem, FastModeAgrees) {
    PrimeFieldScope scope(2305843009213693951ULL);
    EXPECT_EQ(verify_theorem<FastMode>(TheoremId::thm41, 5, 2, 8).status, Status::holds);
    EXPECT_EQ(verify_theorem<FastMode>(TheoremId::thm12, 3, 1, 5, Mutation::flip_sign).status, Status::fails);
}

TEST(Divisibility, Examples) {
    EXPECT_EQ(verify_divisibility<ExactMode>(2, 3).status, Status::holds);
    EXPECT_EQ(verify_divisibility<ExactMode>(3, 5).status, Status::holds);
    EXPECT_EQ(verify_divisibility<ExactMode>(3, 4).status, Status::skipped_precondition);
}

TEST(Divisibility, ExpressionMatchesPrefactorTimesSum) {
    for (auto [d, n] : {std::pair{2L, 5L}, std::pair{3L, 5L}}) {
        const auto e = divisibility_expression<Integer>(d, n);
        const auto sum = whole_sum(SumFamily::f7_divisibility, d, 1, n);
        const R expected = R(pow_l(poch_l(d, d, n - 1), d) * sum.num) / R(pow_l(L(P{1, -1}), d * (n - 1)) * sum.den);
        ASSERT_TRUE(expected.is_laurent());
        EXPECT_EQ(convert<Q>(e), expected.numerator());
    }
}

TEST(Parametric, Examples) {
    EXPECT_EQ(verify_parametric<ExactMode>(ParametricId::p1_24, 4, 1, 7).status, Status::holds);
    EXPECT_EQ(verify_parametric<ExactMode>(ParametricId::p4_33, 3, 1, 5).status, Status::holds);
    EXPECT_EQ(verify_parametric<ExactMode>(ParametricId::p6_44, 2, 1, 3).status, Status::holds);
}

TEST(Parametric, LemmaFamilySumsVanishAtBothPoints) {
    const auto spec = parametric_summand(ParametricId::p1_24, 4, 1);
    for (long s : {7L, -7L}) {
        const auto sum = cleared_sum<Integer>(substitute(spec, s), parametric_upper(ParametricId::p1_24, 4, 1, 7));
        EXPECT_TRUE(sum.expanded_numerator().is_zero()) << s;
    }
}

TEST(Parametric, MutationFails) {
    EXPECT_EQ(verify_parametric<ExactMode>(ParametricId::p4_33, 3, 1, 5, Mutation::flip_sign).status, Status::fails);
    EXPECT_EQ(verify_parametric<ExactMode>(ParametricId::p7_45, 5, 1, 9, Mutation::bump_exponent).status, Status::fails);
}

TEST(ShiftedSummation, Examples) {
    EXPECT_EQ(verify_shifted_summation(1, {0}, 5, 42).status, Status::holds);
    EXPECT_EQ(verify_shifted_summation(2, {1, 1}, 5, 42).status, Status::holds);
    EXPECT_EQ(verify_shifted_summation(3, {2, 0, 1}, 5, 42).status, Status::holds);
}

TEST(ShiftedSummation, SidesAgreeAtSamples) {
    // q = 2, b = 3: the m = 1 case is the q-Chu-Vandermonde sum
    for (std::int64_t n1 = 0; n1 <= 4; ++n1) {
        const auto s = shifted_sum_sides({n1}, {Q(2), {Q(3)}});
        ASSERT_TRUE(s);
        EXPECT_EQ(s->first, s->second);
    }
    const auto t = shifted_sum_sides({2, 1}, {Q(1, 3), {Q(5, 7), Q(11, 2)}});
    ASSERT_TRUE(t);
    EXPECT_EQ(t->first, t->second);
    // q = 1 is a pole of (q;q)_N
    EXPECT_FALSE(shifted_sum_sides({1}, {Q(1), {Q(3)}}));
}

TEST(QBinomialVanishing, Examples) {
    EXPECT_EQ(verify_qbinomial_vanishing<ExactMode>(1).status, Status::holds);
    EXPECT_EQ(verify_qbinomial_vanishing<ExactMode>(5).status, Status::holds);
    const auto diag = verify_qbinomial_vanishing<ExactMode>(2, 2);
    EXPECT_EQ(diag.status, Status::holds);
    ASSERT_TRUE(diag.note);
    EXPECT_NE(diag.note->find("nonvanishing"), std::string::npos);
}

TEST(QBinomialVanishing, DirectExpansionForSmallN) {
    for (long n = 1; n <= 8; ++n)
        for (long j = 0; j < n; ++j) {
            P s;
            for (long k = 0; k <= n; ++k) {
                P t = q_binomial(n, k).shifted(static_cast<std::size_t>(choose2(n - k) + j * k));
                if (k % 2) t = -t;
                s += t;
            }
            EXPECT_TRUE(s.is_zero()) << n << " " << j;
        }
}

TEST(ProofSteps, ExponentIdentityExample) {
    // d = 4, r = 1, n = 7, k = 3: N = 7 - 1 - 2 = 4
    const long lhs = 4 * 3 + (7 + 8 + 1 - 28) * 3;
    const long rhs = 4 * choose2(1) - 4 * choose2(4);
    EXPECT_EQ(lhs, -24);
    EXPECT_EQ(rhs, -24);
    EXPECT_EQ(verify_proof_step<ExactMode>(ProofStep::exponent_identity, {4, 1, 7, 0, 3}).status, Status::holds);
}

TEST(ProofSteps, PochhammerSplitGeneralExample) {
    EXPECT_EQ(verify_proof_step<ExactMode>(ProofStep::pochhammer_split_general, {5, 2, 0, 0, 3}).status, Status::holds);
    // the same identity written out with RationalFunction arithmetic
    const R lhs = poch(7, 5, 3) * poch(-3, 5, 3);
    const R ratio = R(L(P{1, 1, 1}), P{1, 1});
    const R bracket = R(L::one()) + R(L(P{1, 0, 0, 0, 0, -1}), P{0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1});
    const R rhs = R(L::monomial(Q(-1), 2)) * ratio * bracket * poch(2, 5, 3) * poch(2, 5, 3);
    EXPECT_EQ(lhs, rhs);
}

TEST(ProofSteps, BracketFactorization) {
    EXPECT_EQ(verify_proof_step<ExactMode>(ProofStep::bracket_factorization, {0, 0, 12, 0, 0}).status, Status::holds);
    EXPECT_EQ(verify_proof_step<ExactMode>(ProofStep::bracket_factorization, {0, 0, 1, 0, 0}).status,
              Status::skipped_precondition);
}

TEST(ProofSteps, AllHoldOnLemmaSetting) {
    for (auto step : all_proof_steps) {
        StepArgs a{5, 2, 8, 0, 3};
        if (step == ProofStep::ratio_shift_generic) a.j = 4;
        if (step == ProofStep::ratio_shift_central) a.j = 2;
        if (step == ProofStep::bracket_factorization) a.n = 12;
        EXPECT_EQ(verify_proof_step<ExactMode>(step, a).status, Status::holds) << to_string(step);
    }
}

TEST(ProofSteps, RatioShiftRejectsWrongBand) {
    EXPECT_EQ(verify_proof_step<ExactMode>(ProofStep::ratio_shift_central, {5, 2, 8, 4, 3}).status,
              Status::skipped_precondition);
    EXPECT_EQ(verify_proof_step<ExactMode>(ProofStep::ratio_shift_generic, {5, 2, 8, 2, 3}).status,
              Status::skipped_precondition);
}

TEST(CrossChecks, CollapseAndOracle) {
    EXPECT_EQ(verify_r1_collapse<ExactMode>(5, 9).status, Status::holds);
    EXPECT_EQ(verify_r1_collapse<ExactMode>(4, 7).status, Status::holds);
    EXPECT_EQ(verify_lhs_oracle<ExactMode>(SumFamily::f3_squared, 5, 1, 9).status, Status::holds);
    EXPECT_EQ(verify_small_d_vanishing<ExactMode>(2, 5).status, Status::holds);
    EXPECT_EQ(verify_small_d_vanishing<ExactMode>(3, 8).status, Status::holds);
}
