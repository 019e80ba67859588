#pragma once

// Congruence instances modulo Phi_n(q)^2, the [n]^2 divisibility, and the r = 1
// collapse of the two-parameter closed forms.

#include <string>
#include <vector>

#include "qsc/check_result.hpp"
#include "qsc/cyclotomic.hpp"
#include "qsc/families.hpp"
#include "qsc/residue.hpp"
#include "qsc/summand.hpp"

namespace qsc {

/// Perturbations for negative controls.
enum class Mutation { none, flip_sign, bump_exponent };

inline ClosedForm mutate(ClosedForm f, Mutation m) {
    if (f.zero) return f;
    if (m == Mutation::flip_sign) f.sign = -f.sign;
    if (m == Mutation::bump_exponent) f.q_exponent += 1;
    return f;
}

template <FieldCoefficient F>
RingElement<F> lhs_sum(SumFamily f, long d, long r, long n, const ResidueRing<F>& ring) {
    return ring_sum(substitute(family_summand(f, d, r), 0), n - 1, ring);
}

/// The whole sum built as one fraction over I, reduced once.
template <Coefficient I, FieldCoefficient F>
RingElement<F> lhs_sum_oracle(SumFamily f, long d, long r, long n, const ResidueRing<F>& ring) {
    const auto whole = cleared_sum<I>(substitute(family_summand(f, d, r), 0), n - 1);
    const auto num = ring.reduce(convert<F>(whole.expanded_numerator()));
    const auto den = ring.reduce(convert<F>(whole.expanded_denominator()));
    return num * den.inverse();
}

template <FieldCoefficient F>
RingElement<F> rhs_closed_form(TheoremId id, long d, long r, long n, const ResidueRing<F>& ring,
                               Mutation m = Mutation::none) {
    return ring_closed_form(mutate(theorem_rhs(id, d, r, n), m), ring);
}

template <FieldCoefficient F>
std::string ring_witness(const RingElement<F>& lhs, const RingElement<F>& rhs) {
    return "lhs - rhs = " + clip((lhs - rhs).to_string()) + " (mod " + clip(lhs.ring().modulus().to_string(), 160) +
           ")";
}

template <class Mode>
Outcome verify_theorem(TheoremId id, long d, long r, long n, Mutation m = Mutation::none) {
    using F = typename Mode::Field;
    if (!uses_r(id)) r = 1;
    if (auto why = theorem_precondition(id, d, r, n)) return Outcome::skipped(*why);
    const auto ring = ResidueRing<F>::make(n, ModulusKind::phi_squared);
    const auto lhs = lhs_sum(family_of(id), d, r, n, *ring);
    const auto rhs = rhs_closed_form(id, d, r, n, *ring, m);
    if (!(lhs == rhs)) return Outcome::fails(ring_witness(lhs, rhs));
    if (id == TheoremId::lemma21 && r == 1) {
        // the r = 1 statement is written with (q, q^{1-d}; q^d)_k
        const auto special = lhs_sum(SumFamily::f7_divisibility, d, 1, n, *ring);
        if (!special.is_zero()) return Outcome::fails("r = 1 form: " + ring_witness(special, ring->zero()));
    }
    if (id == TheoremId::thm12 && n == 2) return Outcome::holds("boundary case n = 2");
    return Outcome::holds();
}

/// The r = 1 congruences for d = 2, 3, where the lemma's range d >= 3 + r does not apply.
template <class Mode>
Outcome verify_small_d_vanishing(long d, long n) {
    using F = typename Mode::Field;
    if (d == 2 ? (n < 3 || n % 2 == 0) : d == 3 ? (n < 5 || floor_mod(n, 3) != 2) : true)
        return Outcome::skipped("needs d = 2 with odd n >= 3, or d = 3 with n >= 5, n = 2 (mod 3)");
    const auto ring = ResidueRing<F>::make(n, ModulusKind::phi_squared);
    const auto lhs = lhs_sum(SumFamily::f7_divisibility, d, 1, n, *ring);
    return Outcome::verdict(lhs.is_zero(), ring_witness(lhs, ring->zero()));
}

/// Incremental ring evaluation against the one-shot fraction.
template <class Mode>
Outcome verify_lhs_oracle(SumFamily f, long d, long r, long n) {
    using F = typename Mode::Field;
    if (n < 2 || d < 2 || r < 1 || r >= d || gcd_long(d, n) != 1)
        return Outcome::skipped("needs n >= 2, d > r >= 1, gcd(d, n) = 1");
    const auto ring = ResidueRing<F>::make(n, ModulusKind::phi_squared);
    const auto fast = lhs_sum(f, d, r, n, *ring);
    const auto slow = lhs_sum_oracle<typename Mode::Integral>(f, d, r, n, *ring);
    return Outcome::verdict(fast == slow, ring_witness(fast, slow));
}

// ---------------------------------------------------------------------------

namespace detail {

/// t *= (1 - q^e)/(1 - q) for any integer e.
template <Coefficient T>
void mul_q_integer(LaurentPolynomial<T>& t, long e) {
    if (e == 0) {
        t = {};
        return;
    }
    if (t.is_zero()) return;
    t.mul_binomial(coeff_traits<T>::from_int(1), e);
    std::vector<T> v = t.body().coefficients();
    for (std::size_t i = 1; i < v.size(); ++i) v[i] += v[i - 1];
    if (!coeff_traits<T>::is_zero(v.back())) throw std::logic_error("mul_q_integer: inexact division by 1 - q");
    t = LaurentPolynomial<T>(DensePolynomial<T>(std::move(v)), t.min_exponent());
}

}  // namespace detail

/// prefactor * sum as one Laurent polynomial: against (q^d;q^d)_{n-1}^d the
/// k-th denominator leaves prod_{i=k+1}^{n-1} (1 - q^{di})^d, and the d(n-1)
/// binomials of each term pair off with the (1 - q)^{d(n-1)}.
template <Coefficient I>
LaurentPolynomial<I> divisibility_expression(long d, long n) {
    const auto c = substitute(family_summand(SumFamily::f7_divisibility, d), 0);
    LaurentPolynomial<I> total;
    for (long k = 0; k <= n - 1; ++k) {
        std::vector<long> exps;
        for (long i = k + 1; i <= n - 1; ++i)
            for (long j = 0; j < d; ++j) exps.push_back(d * i);
        for (auto [x, m] : c.num_bases)
            for (long i = 0; i < k; ++i)
                for (int j = 0; j < m; ++j) exps.push_back(x + d * i);
        if (static_cast<long>(exps.size()) != d * (n - 1))
            throw std::logic_error("divisibility: binomial count differs from d(n-1)");
        auto t = LaurentPolynomial<I>::monomial(coeff_traits<I>::from_int(1), d * k);
        for (long e : exps) detail::mul_q_integer(t, e);
        total += t;
    }
    return total;
}

template <class Mode>
Outcome verify_divisibility(long d, long n) {
    using I = typename Mode::Integral;
    if (d < 2 || floor_mod(n, d) != d - 1 || n < 2 * d - 1) return Outcome::skipped("needs d >= 2, n = -1 (mod d), n >= 2d-1");
    const auto expr = divisibility_expression<I>(d, n);
    const auto bracket = q_integer<I>(n);
    // q is prime to [n], so the power of q in front is irrelevant
    const auto rem = poly_divrem(expr.body(), bracket * bracket).second;
    return Outcome::verdict(rem.is_zero(), "remainder mod [n]^2: " + clip(rem.to_string()));
}

// ---------------------------------------------------------------------------

/// The r = 1 cases of the two-parameter congruences against the single-parameter
/// statements: closed forms exactly, their ring classes, and the summands termwise.
template <class Mode>
Outcome verify_r1_collapse(long d, long n) {
    using F = typename Mode::Field;
    using I = typename Mode::Integral;
    struct Pair {
        TheoremId general, special;
    };
    std::vector<Pair> pairs;
    const TheoremId f2_partner = d % 2 ? TheoremId::eq14 : TheoremId::thm11;
    const TheoremId f3_partner = d % 2 ? TheoremId::thm12 : TheoremId::eq15;
    if (!theorem_precondition(TheoremId::thm41, d, 1, n) && !theorem_precondition(f2_partner, d, 1, n))
        pairs.push_back({TheoremId::thm41, f2_partner});
    if (!theorem_precondition(TheoremId::thm42, d, 1, n) && !theorem_precondition(f3_partner, d, 1, n))
        pairs.push_back({TheoremId::thm42, f3_partner});
    if (pairs.empty()) return Outcome::skipped("no r = 1 statement shares this (d, n) with a single-parameter one");

    const auto ring = ResidueRing<F>::make(n, ModulusKind::phi_squared);
    for (const auto& [general, special] : pairs) {
        const std::string tag = to_string(general) + " vs " + to_string(special) + ": ";
        const auto a = theorem_rhs(general, d, 1, n).template substitute<I>(0);
        const auto b = theorem_rhs(special, d, 1, n).template substitute<I>(0);
        if (!equal(a, b)) return Outcome::fails(tag + "closed forms differ, " + describe_nonzero(cross_difference(a, b)));
        const auto ra = rhs_closed_form(general, d, 1, n, *ring);
        const auto rb = rhs_closed_form(special, d, 1, n, *ring);
        if (!(ra == rb)) return Outcome::fails(tag + ring_witness(ra, rb));
        const auto sa = substitute(family_summand(family_of(general), d, 1), 0);
        const auto sb = substitute(family_summand(family_of(special), d, 1), 0);
        for (long k = 0; k < n; ++k) {
            const auto ta = summand_term<I>(sa, k), tb = summand_term<I>(sb, k);
            if (!equal(ta, tb))
                return Outcome::fails(tag + "summands differ at k = " + std::to_string(k) + ", " +
                                      describe_nonzero(cross_difference(ta, tb)));
        }
    }
    return Outcome::holds();
}

}  // namespace qsc
