#pragma once

// Parametric congruences modulo (1 - a q^n)(a - q^n): exact equality at
// a = q^n and a = q^{-n}, plus the structural checks that pin the exponent
// lists (a <-> 1/a symmetry, termwise collapse at a = 1).

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "qsc/check_result.hpp"
#include "qsc/families.hpp"
#include "qsc/summand.hpp"
#include "qsc/theorems.hpp"

namespace qsc {

namespace detail {

inline auto sorted_terms(std::vector<SummandTerm> v) {
    std::vector<std::tuple<int, long, int, int>> t;
    for (const auto& x : v) t.emplace_back(x.alpha, x.beta, x.offset, x.mult);
    std::sort(t.begin(), t.end());
    return t;
}

inline auto sorted_factors(const std::vector<ClosedFactor>& v) {
    std::vector<std::tuple<int, long, long, long, int>> t;
    for (const auto& x : v) t.emplace_back(x.alpha, x.beta, x.step, x.length, x.mult);
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace detail

/// The a = 1 consistency of a parametric family; nullopt when it passes.
template <Coefficient I>
std::optional<std::string> parametric_collapse_failure(ParametricId id, long d, long r, long n) {
    const long upper = parametric_upper(id, d, r, n);
    const auto spec = parametric_summand(id, d, r);

    const auto mirrored = spec.mirrored();
    if (detail::sorted_terms(spec.numerator) != detail::sorted_terms(mirrored.numerator) ||
        detail::sorted_terms(spec.denominator) != detail::sorted_terms(mirrored.denominator))
        return "summand is not symmetric under a -> 1/a";
    const auto rhs = parametric_rhs(id, d, r, n);
    const auto rhs_m = rhs.mirrored();
    if (detail::sorted_factors(rhs.numerator) != detail::sorted_factors(rhs_m.numerator) ||
        detail::sorted_factors(rhs.denominator) != detail::sorted_factors(rhs_m.denominator))
        return "closed form is not symmetric under a -> 1/a";

    const auto target = parametric_collapse_target(id, d, r);
    const auto at_one = substitute(spec, 0);
    const auto expected = substitute(target.summand, 0);
    for (long k = 0; k <= upper; ++k) {
        const auto a = summand_term<I>(at_one, k), b = summand_term<I>(expected, k);
        if (!equal(a, b))
            return "a = 1 summand differs at k = " + std::to_string(k) + ", " + describe_nonzero(cross_difference(a, b));
    }

    if (id == ParametricId::p1_24 || id == ParametricId::p2_25) {
        // the reduced summand times (1 - q^{r-d})(1 - q^r)^{r+1} is the lemma's term
        const auto lemma = substitute(family_summand(SumFamily::f4_lemma, d, r), 0);
        for (long k = 0; k < n; ++k) {
            auto a = summand_term<I>(expected, k);
            a.mul_binomial(r - d).mul_binomial(r, static_cast<int>(r + 1));
            const auto b = summand_term<I>(lemma, k);
            if (!equal(a, b))
                return "reduced summand does not match the lemma's at k = " + std::to_string(k) + ", " +
                       describe_nonzero(cross_difference(a, b));
        }
    } else {
        const auto a = rhs.template substitute<I>(0);
        const auto b = theorem_rhs(*target.theorem, d, r, n).template substitute<I>(0);
        if (!equal(a, b))
            return "closed form at a = 1 differs from " + to_string(*target.theorem) + ", " +
                   describe_nonzero(cross_difference(a, b));
    }
    return std::nullopt;
}

template <class Mode>
Outcome verify_parametric(ParametricId id, long d, long r, long n, Mutation m = Mutation::none) {
    using I = typename Mode::Integral;
    if (auto why = parametric_precondition(id, d, r, n)) return Outcome::skipped(*why);
    const long upper = parametric_upper(id, d, r, n);
    const auto spec = parametric_summand(id, d, r);
    const auto rhs = mutate(parametric_rhs(id, d, r, n), m);
    for (long s : {n, -n}) {
        const auto lhs = cleared_sum<I>(substitute(spec, s), upper);
        const auto closed = rhs.template substitute<I>(s);
        if (!equal(lhs, closed))
            return Outcome::fails("a = q^" + std::to_string(s) + ": " + describe_nonzero(cross_difference(lhs, closed)));
    }
    if (auto why = parametric_collapse_failure<I>(id, d, r, n)) return Outcome::fails(*why);
    return Outcome::holds();
}

}  // namespace qsc
