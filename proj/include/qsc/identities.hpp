#pragma once

// Exact identities: the terminating summation with integer parameter shifts at random rational
// points, the terminating q-binomial theorem, and the identities used inside
// the proofs.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qsc/check_result.hpp"
#include "qsc/cyclotomic.hpp"
#include "qsc/families.hpp"
#include "qsc/qobjects.hpp"
#include "qsc/summand.hpp"

namespace qsc {

// ---------------------------------------------------------------------------
// integer parameter shifts

namespace detail {

/// (x; q)_k at exact rational points.
inline ExactRational pochhammer_value(const ExactRational& x, const ExactRational& q, long k) {
    ExactRational r = 1, t = x;
    for (long j = 0; j < k; ++j) {
        r *= 1 - t;
        t *= q;
    }
    return r;
}

inline ExactRational power(const ExactRational& x, long e) {
    ExactRational r = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= x;
    return e < 0 ? 1 / r : r;
}

}  // namespace detail

struct ShiftedSample {
    ExactRational q;
    std::vector<ExactRational> b;
};

/// Both sides at one point; nullopt when a denominator vanishes there.
inline std::optional<std::pair<ExactRational, ExactRational>> shifted_sum_sides(
    const std::vector<std::int64_t>& n_list, const ShiftedSample& s) {
    using detail::pochhammer_value;
    using detail::power;
    long N = 0;
    for (auto nj : n_list) N += nj;
    const auto& q = s.q;
    if (pochhammer_value(q, q, N) == 0) return std::nullopt;
    for (std::size_t j = 0; j < n_list.size(); ++j)
        if (pochhammer_value(s.b[j], q, std::max<long>(N, n_list[j])) == 0) return std::nullopt;

    ExactRational lhs = 0;
    for (long k = 0; k <= N; ++k) {
        ExactRational num = pochhammer_value(power(q, -N), q, k), den = pochhammer_value(q, q, k);
        for (std::size_t j = 0; j < n_list.size(); ++j) {
            num *= pochhammer_value(s.b[j] * power(q, n_list[j]), q, k);
            den *= pochhammer_value(s.b[j], q, k);
        }
        lhs += num / den * power(q, k);
    }
    ExactRational rhs = pochhammer_value(q, q, N);
    if (N % 2) rhs = -rhs;
    long e = 0;
    for (std::size_t j = 0; j < n_list.size(); ++j) {
        rhs *= power(s.b[j], n_list[j]) / pochhammer_value(s.b[j], q, n_list[j]);
        e += choose2(n_list[j]);
    }
    rhs *= power(q, e);
    return std::make_pair(lhs, rhs);
}

inline std::mt19937_64 shifted_sum_rng(std::uint64_t seed, long m, const std::vector<std::int64_t>& n_list) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                     static_cast<std::uint32_t>(m)};
    for (auto nj : n_list) words.push_back(static_cast<std::uint32_t>(nj));
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

inline Outcome verify_shifted_summation(long m, const std::vector<std::int64_t>& n_list, long trials,
                                      std::uint64_t seed) {
    if (m < 1) return Outcome::skipped("needs m >= 1");
    if (static_cast<long>(n_list.size()) != m) return Outcome::skipped("n_list must have m entries");
    for (auto nj : n_list)
        if (nj < 0) return Outcome::skipped("n_j must be nonnegative");
    auto rng = shifted_sum_rng(seed, m, n_list);
    std::uniform_int_distribution<long> draw(2, 100);
    auto sample = [&] { return make_rational(draw(rng), draw(rng)); };
    for (long t = 0; t < trials; ++t) {
        int misses = 0;
        for (;;) {
            ShiftedSample s{sample(), {}};
            for (long j = 0; j < m; ++j) s.b.push_back(sample());
            auto sides = shifted_sum_sides(n_list, s);
            if (!sides) {
                if (++misses == 100) throw resample_exhausted("100 consecutive degenerate samples");
                continue;
            }
            if (sides->first != sides->second) {
                std::string pt = "q = " + s.q.get_str();
                for (long j = 0; j < m; ++j) pt += ", b" + std::to_string(j + 1) + " = " + s.b[j].get_str();
                return Outcome::fails("trial " + std::to_string(t) + " at " + pt + ": lhs = " +
                                      clip(sides->first.get_str(), 120) + ", rhs = " +
                                      clip(sides->second.get_str(), 120));
            }
            break;
        }
    }
    return Outcome::holds();
}

// ---------------------------------------------------------------------------
// Terminating q-binomial theorem

template <Coefficient T>
std::vector<DensePolynomial<T>> q_binomial_row(long n) {
    std::vector<DensePolynomial<T>> row;
    for (long k = 0; k <= n; ++k) row.push_back(q_binomial<T>(n, k));
    return row;
}

/// sum_k (-1)^k [n k] q^{C(n-k,2) + jk} over a precomputed row
template <Coefficient T>
DensePolynomial<T> qbinomial_alternating_sum(const std::vector<DensePolynomial<T>>& row, long j) {
    const long n = static_cast<long>(row.size()) - 1;
    DensePolynomial<T> total;
    for (long k = 0; k <= n; ++k) {
        const auto t = row[static_cast<std::size_t>(k)].shifted(static_cast<std::size_t>(choose2(n - k) + j * k));
        if (k % 2)
            total -= t;
        else
            total += t;
    }
    return total;
}

/// Without `j`: vanishing for every 0 <= j <= n-1. With `j` outside that range
/// the sum is expected not to vanish, and HOLDS reports exactly that.
template <class Mode>
Outcome verify_qbinomial_vanishing(long n, std::optional<long> j = std::nullopt) {
    using I = typename Mode::Integral;
    if (n < 1) return Outcome::skipped("needs n >= 1");
    if (j) {
        if (*j < 0) return Outcome::skipped("needs j >= 0");
        const auto s = qbinomial_alternating_sum(q_binomial_row<I>(n), *j);
        if (*j < n) return Outcome::verdict(s.is_zero(), "sum = " + clip(s.to_string()));
        if (s.is_zero()) return Outcome::fails("sum vanishes for j = " + std::to_string(*j) + " >= n");
        return Outcome::holds("expected nonvanishing outside 0 <= j <= n-1: sum = " + clip(s.to_string(), 200));
    }
    const auto row = q_binomial_row<I>(n);
    for (long jj = 0; jj < n; ++jj) {
        const auto s = qbinomial_alternating_sum(row, jj);
        if (!s.is_zero()) return Outcome::fails("j = " + std::to_string(jj) + ": sum = " + clip(s.to_string()));
    }
    return Outcome::holds();
}

// ---------------------------------------------------------------------------
// Proof steps

enum class ProofStep {
    ratio_shift_generic,
    ratio_shift_central,
    qbinom_rewrite,
    exponent_identity,
    sum_decomposition,
    sum_decomposition_r,
    pochhammer_split_r1,
    pochhammer_split_general,
    lemma_reduction,
    prefactor_divisibility,
    bracket_factorization
};

inline constexpr ProofStep all_proof_steps[] = {
    ProofStep::ratio_shift_generic, ProofStep::ratio_shift_central,     ProofStep::qbinom_rewrite,
    ProofStep::exponent_identity,   ProofStep::sum_decomposition,       ProofStep::sum_decomposition_r,
    ProofStep::pochhammer_split_r1, ProofStep::pochhammer_split_general, ProofStep::lemma_reduction,
    ProofStep::prefactor_divisibility, ProofStep::bracket_factorization};

inline std::string to_string(ProofStep s) {
    static const char* names[] = {"ratio_shift_generic", "ratio_shift_central",    "qbinom_rewrite",
                                  "exponent_identity",   "sum_decomposition",      "sum_decomposition_r",
                                  "pochhammer_split_r1", "pochhammer_split_general", "lemma_reduction",
                                  "prefactor_divisibility", "bracket_factorization"};
    return names[static_cast<int>(s)];
}

/// Arguments of a proof step; unused ones are ignored.
struct StepArgs {
    long d = 0, r = 0, n = 0, j = 0, k = 0;
};

namespace detail {

/// The lemma's standing assumptions on (d, r, n).
inline std::optional<std::string> lemma_setting(long d, long r, long n) {
    if (r < 1 || d < 3 + r || gcd_long(d, r) != 1 || floor_mod(n + r, d) != 0 || n < 2 * d - r)
        return "needs d >= 3+r, gcd(d,r) = 1, n = -r (mod d), n >= 2d-r";
    return std::nullopt;
}

/// j in the central band (d-r-1)/2 <= j <= (d+r-1)/2.
inline bool central(long d, long r, long j) { return 2 * j >= d - r - 1 && 2 * j <= d + r - 1; }

template <Coefficient I>
Outcome fraction_verdict(const FactoredFraction<I>& a, const FactoredFraction<I>& b) {
    return Outcome::verdict(equal(a, b), describe_nonzero(cross_difference(a, b)));
}

template <FieldCoefficient F>
RationalFunction<F> rf_monomial(long c, long e) {
    return RationalFunction<F>(LaurentPolynomial<F>::monomial(coeff_traits<F>::from_int(c), e));
}

/// 1 - q^e as a rational function
template <FieldCoefficient F>
RationalFunction<F> rf_binomial(long e) {
    return RationalFunction<F>(LaurentPolynomial<F>::binomial(coeff_traits<F>::from_int(1), e));
}

template <FieldCoefficient F>
RationalFunction<F> rf_pochhammer(long base, long step, long k) {
    return q_pochhammer(QMonomial<F>::power(base), step, k);
}

template <FieldCoefficient F>
RationalFunction<F> rf_bracket(long m) {
    return RationalFunction<F>(LaurentPolynomial<F>(q_integer<F>(m)));
}

/// (q^{d+r}, q^{r-d}; q^d)_k against -q^r [d-r]/[r] (1 + (1-q^d)/(q^d - q^{dk+r})) (q^r; q^d)_k^2.
template <FieldCoefficient F>
Outcome pochhammer_split(long d, long r, long k) {
    const auto lhs = rf_pochhammer<F>(d + r, d, k) * rf_pochhammer<F>(r - d, d, k);
    const auto inner = rf_monomial<F>(1, 0) + rf_binomial<F>(d) / (rf_monomial<F>(1, d) - rf_monomial<F>(1, d * k + r));
    const auto rhs = rf_monomial<F>(-1, r) * rf_bracket<F>(d - r) / rf_bracket<F>(r) * inner *
                     rf_pochhammer<F>(r, d, k) * rf_pochhammer<F>(r, d, k);
    return Outcome::verdict(lhs == rhs, "lhs = " + clip(lhs.to_string(), 200) + ", rhs = " + clip(rhs.to_string(), 200));
}

}  // namespace detail

template <class Mode>
Outcome verify_proof_step(ProofStep step, const StepArgs& a) {
    using I = typename Mode::Integral;
    using F = typename Mode::Field;
    const long d = a.d, r = a.r, n = a.n, j = a.j, k = a.k;
    switch (step) {
        case ProofStep::ratio_shift_generic:
        case ProofStep::ratio_shift_central: {
            if (auto why = detail::lemma_setting(d, r, n)) return Outcome::skipped(*why);
            if (k < 0) return Outcome::skipped("needs k >= 0");
            const bool want_central = step == ProofStep::ratio_shift_central;
            if (j < 1 || j > d - 1 || detail::central(d, r, j) != want_central)
                return Outcome::skipped(want_central ? "needs (d-r-1)/2 <= j <= (d+r-1)/2"
                                                     : "needs 1 <= j <= d-1 outside the central band");
            const long m = (n + r) / d;
            const long y = d - (d - 2 * j) * n;
            const long top = d + r - (d - 2 * j - 1) * n;
            const long shift = want_central ? 2 : 0;
            FactoredFraction<I> lhs, rhs;
            lhs.mul_pochhammer(top, d, k - shift).div_pochhammer(y, d, k);
            rhs.mul_pochhammer(y + d * k, d, m - shift).div_pochhammer(y, d, m);
            return detail::fraction_verdict(lhs, rhs);
        }
        case ProofStep::qbinom_rewrite: {
            if (auto why = detail::lemma_setting(d, r, n)) return Outcome::skipped(*why);
            if (k < 0) return Outcome::skipped("needs k >= 0");
            const long N = n - 1 - (n + r) / d;
            FactoredFraction<I> lhs;
            lhs.mul_pochhammer(d + r - (d - 1) * n, d, k).div_pochhammer(d, d, k).mul_monomial(1, d * k);
            LaurentPolynomial<I> binom(q_binomial<I>(N, k).substitute_power(static_cast<std::size_t>(d)));
            binom.mul_monomial(coeff_traits<I>::from_int(parity_sign(k)), d * choose2(k) + (n + 2 * d + r - d * n) * k);
            return detail::fraction_verdict(lhs, FactoredFraction<I>(binom));
        }
        case ProofStep::exponent_identity: {
            if (auto why = detail::lemma_setting(d, r, n)) return Outcome::skipped(*why);
            if (k < 0) return Outcome::skipped("needs k >= 0");
            const long N = n - 1 - (n + r) / d;
            const long lhs = d * choose2(k) + (n + 2 * d + r - d * n) * k;
            const long rhs = d * choose2(N - k) - d * choose2(N);
            return Outcome::verdict(lhs == rhs, "lhs = " + std::to_string(lhs) + ", rhs = " + std::to_string(rhs));
        }
        case ProofStep::sum_decomposition:
        case ProofStep::sum_decomposition_r: {
            // F2 = [d] F7 - q [d-1] F3, and for general r
            // F5 = [d]/[r] F4 - q^r [d-r]/[r] F6, cleared by [r]
            const long rr = step == ProofStep::sum_decomposition ? 1 : r;
            if (d < 2 || rr < 1 || rr >= d || n < 1) return Outcome::skipped("needs d > r >= 1, n >= 1");
            const auto whole = [&](SumFamily f) { return cleared_sum<I>(substitute(family_summand(f, d, rr), 0), n - 1); };
            const auto s5 = whole(step == ProofStep::sum_decomposition ? SumFamily::f2_mixed : SumFamily::f5_thm41);
            const auto s4 = whole(step == ProofStep::sum_decomposition ? SumFamily::f7_divisibility : SumFamily::f4_lemma);
            const auto s6 = whole(step == ProofStep::sum_decomposition ? SumFamily::f3_squared : SumFamily::f6_thm42);
            if (s5.denominator_binomials() != s4.denominator_binomials() ||
                s5.denominator_binomials() != s6.denominator_binomials())
                throw std::logic_error("sum_decomposition: cleared denominators differ");
            using L = LaurentPolynomial<I>;
            const L lhs = L(q_integer<I>(rr)) * s5.expanded_numerator();
            L rhs = L(q_integer<I>(d)) * s4.expanded_numerator();
            L second = L(q_integer<I>(d - rr)) * s6.expanded_numerator();
            second.shift(rr);
            rhs -= second;
            return Outcome::verdict(lhs == rhs, describe_nonzero(lhs - rhs));
        }
        case ProofStep::pochhammer_split_r1:
            if (d < 2 || k < 0) return Outcome::skipped("needs d >= 2, k >= 0");
            return detail::pochhammer_split<F>(d, 1, k);
        case ProofStep::pochhammer_split_general:
            if (r < 1 || d <= r || k < 0) return Outcome::skipped("needs d > r >= 1, k >= 0");
            return detail::pochhammer_split<F>(d, r, k);
        case ProofStep::lemma_reduction: {
            // (q^r)_k^r (q^{r-d})_k = (1-q^{r-d})(1-q^r)^{r+1} (q^{d+r})_{k-2}^{r+1} (1-q^{dk-d+r})^r
            if (r < 1 || d <= r || k < 0) return Outcome::skipped("needs d > r >= 1, k >= 0");
            FactoredFraction<I> lhs, rhs;
            lhs.mul_pochhammer(r, d, k, static_cast<int>(r)).mul_pochhammer(r - d, d, k);
            rhs.mul_binomial(r - d).mul_binomial(r, static_cast<int>(r + 1));
            rhs.mul_pochhammer(d + r, d, k - 2, static_cast<int>(r + 1)).mul_binomial(d * k - d + r, static_cast<int>(r));
            return detail::fraction_verdict(lhs, rhs);
        }
        case ProofStep::prefactor_divisibility: {
            if (d < 2 || n < 2) return Outcome::skipped("needs d >= 2, n >= 2");
            auto prefactor = DensePolynomial<I>::one();
            for (long m = 1; m < n; ++m)
                for (long i = 0; i < d; ++i) prefactor *= q_integer<I>(m * d);
            auto modulus = DensePolynomial<I>::one();
            for (long m : divisors(n))
                if (m > 1 && m < n) modulus *= cyclotomic<I>(m) * cyclotomic<I>(m);
            const auto rem = poly_divrem(prefactor, modulus).second;
            return Outcome::verdict(rem.is_zero(), "remainder: " + clip(rem.to_string()));
        }
        case ProofStep::bracket_factorization: {
            if (n < 2) return Outcome::skipped("needs n >= 2");
            auto product = cyclotomic<I>(n);
            for (long m : divisors(n))
                if (m > 1 && m < n) product *= cyclotomic<I>(m);
            const auto bracket = q_integer<I>(n);
            return Outcome::verdict(product == bracket, "product = " + clip(product.to_string()));
        }
    }
    throw std::logic_error("verify_proof_step");
}

}  // namespace qsc
