#pragma once

// The catalog of summands and closed forms: the seven non-parametric sum
// families, the congruence statements built on them, and the eight a-parametric
// families checked at a = q^{+-n}.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsc/summand.hpp"

namespace qsc {

enum class SumFamily { f1_base, f2_mixed, f3_squared, f4_lemma, f5_thm41, f6_thm42, f7_divisibility };

enum class TheoremId { eq13, eq14, eq15, thm11, thm12, lemma21, thm41, thm42 };

enum class ParametricId { p1_24, p2_25, p3_32, p4_33, p5_43, p6_44, p7_45, p8_46 };

inline constexpr TheoremId all_theorems[] = {TheoremId::eq13,  TheoremId::eq14,    TheoremId::eq15,
                                             TheoremId::thm11, TheoremId::thm12,   TheoremId::lemma21,
                                             TheoremId::thm41, TheoremId::thm42};

inline constexpr ParametricId all_parametric[] = {ParametricId::p1_24, ParametricId::p2_25, ParametricId::p3_32,
                                                  ParametricId::p4_33, ParametricId::p5_43, ParametricId::p6_44,
                                                  ParametricId::p7_45, ParametricId::p8_46};

inline std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::eq13: return "eq13";
        case TheoremId::eq14: return "eq14";
        case TheoremId::eq15: return "eq15";
        case TheoremId::thm11: return "thm11";
        case TheoremId::thm12: return "thm12";
        case TheoremId::lemma21: return "lemma21";
        case TheoremId::thm41: return "thm41";
        case TheoremId::thm42: return "thm42";
    }
    return "?";
}

inline std::string to_string(ParametricId id) {
    static const char* names[] = {"p1_24", "p2_25", "p3_32", "p4_33", "p5_43", "p6_44", "p7_45", "p8_46"};
    return names[static_cast<int>(id)];
}

inline bool uses_r(TheoremId id) {
    return id == TheoremId::lemma21 || id == TheoremId::thm41 || id == TheoremId::thm42;
}

// ---------------------------------------------------------------------------

/// A(d,n,r) = [d(d+n)(n+r) + dn(r-1) - (n+r)^2]/(2d) - r(r+1)/2
inline long a_exponent(long d, long n, long r) {
    const long num = d * (d + n) * (n + r) + d * n * (r - 1) - (n + r) * (n + r);
    return exact_quotient(num, 2 * d, "A(d,n,r)") - r * (r + 1) / 2;
}

/// (d(d+n)(n+1) - (n+1)^2)/(2d), the q-power shared by the r = 1 closed forms.
inline long r1_exponent(long d, long n) {
    return exact_quotient(d * (d + n) * (n + 1) - (n + 1) * (n + 1), 2 * d, "(d(d+n)(n+1)-(n+1)^2)/(2d)");
}

namespace detail {

inline SummandTerm term(int alpha, long beta, int mult, int offset = 0) { return {alpha, beta, offset, mult}; }

inline void drop_empty(std::vector<SummandTerm>& v) {
    std::erase_if(v, [](const SummandTerm& t) { return t.mult == 0; });
}

/// (q^d; q^d)_length ^ mult
inline ClosedFactor qd(long d, long length, int mult = 1) { return {0, d, d, length, mult}; }

/// (1 - a^alpha q^beta) ^ mult
inline ClosedFactor binomial(long beta, int mult = 1, int alpha = 0) { return {alpha, beta, 1, 1, mult}; }

inline bool congruent(long a, long b, long m) { return floor_mod(a - b, m) == 0; }

}  // namespace detail

/// Summand of a non-parametric family (every Pochhammer in base q^d).
inline SummandSpec family_summand(SumFamily f, long d, long r = 1) {
    using detail::term;
    SummandSpec s;
    s.step = d;
    s.q_per_k = d;
    s.denominator = {term(0, d, static_cast<int>(d))};
    const int di = static_cast<int>(d), ri = static_cast<int>(r);
    switch (f) {
        case SumFamily::f1_base: s.numerator = {term(0, d - 1, di)}; break;
        case SumFamily::f2_mixed: s.numerator = {term(0, d + 1, di - 1), term(0, 1 - d, 1)}; break;
        case SumFamily::f3_squared: s.numerator = {term(0, d + 1, di - 2), term(0, 1, 2)}; break;
        case SumFamily::f4_lemma:
            s.numerator = {term(0, d + r, di - ri - 1), term(0, r, ri), term(0, r - d, 1)};
            break;
        case SumFamily::f5_thm41:
            s.numerator = {term(0, d + r, di - ri), term(0, r, ri - 1), term(0, r - d, 1)};
            break;
        case SumFamily::f6_thm42: s.numerator = {term(0, d + r, di - ri - 1), term(0, r, ri + 1)}; break;
        case SumFamily::f7_divisibility:
            s.numerator = {term(0, d + 1, di - 2), term(0, 1, 1), term(0, 1 - d, 1)};
            break;
    }
    detail::drop_empty(s.numerator);
    return s;
}

/// The lemma's summand with (q^r)_k^r (q^{r-d})_k traded for
/// (q^{d+r})_{k-2}^{r+1} (1 - q^{dk-d+r})^r; differs from f4_lemma's term by the
/// constant factor (1 - q^{r-d})(1 - q^r)^{r+1}.
inline SummandSpec lemma_reduced_summand(long d, long r) {
    using detail::term;
    SummandSpec s;
    s.step = d;
    s.q_per_k = d;
    s.numerator = {term(0, d + r, static_cast<int>(d - r - 1)), term(0, d + r, static_cast<int>(r + 1), -2)};
    s.denominator = {term(0, d, static_cast<int>(d))};
    s.linear = {{r - d, static_cast<int>(r)}};
    detail::drop_empty(s.numerator);
    return s;
}

inline SumFamily family_of(TheoremId id) {
    switch (id) {
        case TheoremId::eq13: return SumFamily::f1_base;
        case TheoremId::eq14:
        case TheoremId::thm11: return SumFamily::f2_mixed;
        case TheoremId::eq15:
        case TheoremId::thm12: return SumFamily::f3_squared;
        case TheoremId::lemma21: return SumFamily::f4_lemma;
        case TheoremId::thm41: return SumFamily::f5_thm41;
        case TheoremId::thm42: return SumFamily::f6_thm42;
    }
    throw std::logic_error("family_of");
}

/// Why (d, r, n) lies outside the statement, or nullopt when it is in range.
inline std::optional<std::string> theorem_precondition(TheoremId id, long d, long r, long n) {
    using detail::congruent;
    if (n < 2) return "n >= 2 required";
    const bool lemma_range = r >= 1 && d >= 3 + r && gcd_long(d, r) == 1 && congruent(n, -r, d) && n >= 2 * d - r;
    switch (id) {
        case TheoremId::eq13:
            if (d < 2 || !congruent(n, 1, d)) return "needs d > 1 and n = 1 (mod d)";
            return std::nullopt;
        case TheoremId::eq14:
            if (d < 3 || d % 2 == 0 || !congruent(n, -1, d) || n < 2 * d - 1)
                return "needs odd d >= 3, n = -1 (mod d), n >= 2d-1";
            return std::nullopt;
        case TheoremId::eq15:
            if (d < 4 || d % 2 != 0 || !congruent(n, -1, d)) return "needs even d >= 4, n = -1 (mod d)";
            return std::nullopt;
        case TheoremId::thm11:
            if (d < 4 || d % 2 != 0 || !congruent(n, -1, d) || n < 2 * d - 1)
                return "needs even d >= 4, n = -1 (mod d), n >= 2d-1";
            return std::nullopt;
        case TheoremId::thm12:
            if (d < 3 || d % 2 == 0 || !congruent(n, -1, d)) return "needs odd d >= 3, n = -1 (mod d)";
            return std::nullopt;
        case TheoremId::lemma21:
            if (!lemma_range) return "needs d >= 3+r, gcd(d,r) = 1, n = -r (mod d), n >= 2d-r";
            return std::nullopt;
        case TheoremId::thm41:
            if (lemma_range) return std::nullopt;
            if (r == 1 && (d == 2 || d == 3) && congruent(n, -1, d) && n >= 2 * d - 1) return std::nullopt;
            return "needs the lemma range, or d in {2,3} with r = 1, n = -1 (mod d), n >= 2d-1";
        case TheoremId::thm42:
            if (r < 1 || d <= r || gcd_long(d, r) != 1 || !congruent(n, -r, d))
                return "needs d > r >= 1, gcd(d,r) = 1, n = -r (mod d), n > 1";
            return std::nullopt;
    }
    return "unknown theorem";
}

/// Right-hand side of the congruence as a ClosedForm in base q^d.
inline ClosedForm theorem_rhs(TheoremId id, long d, long r, long n) {
    using detail::binomial;
    using detail::qd;
    const int di = static_cast<int>(d), ri = static_cast<int>(r);
    ClosedForm f;
    switch (id) {
        case TheoremId::eq13: {
            const long top = exact_quotient((d - 1) * (n - 1), d, "(d-1)(n-1)/d");
            const long low = exact_quotient(n - 1, d, "(n-1)/d");
            f.sign = parity_sign(top);
            f.numerator = {qd(d, top)};
            f.denominator = {qd(d, low, di - 1)};
            f.q_exponent = exact_quotient((d - 1) * (n - 1) * (d + n - 1), 2 * d, "(d-1)(n-1)(d+n-1)/(2d)");
            return f;
        }
        case TheoremId::eq14:
        case TheoremId::thm11: {
            const long m = exact_quotient(n + 1, d, "(n+1)/d");
            f.sign = id == TheoremId::eq14 ? -1 : -parity_sign(m);
            f.numerator = {binomial(1), binomial(d - 1), qd(d, n - 1 - m)};
            f.denominator = {qd(d, m, di - 1)};
            f.q_exponent = r1_exponent(d, n) - 1;
            return f;
        }
        case TheoremId::eq15:
        case TheoremId::thm12: {
            const long m = exact_quotient(n + 1, d, "(n+1)/d");
            f.sign = id == TheoremId::eq15 ? parity_sign(m) : 1;
            f.numerator = {binomial(1, 2), qd(d, n - 1 - m)};
            f.denominator = {qd(d, m, di - 1)};
            f.q_exponent = r1_exponent(d, n) - 2;
            return f;
        }
        case TheoremId::lemma21: return ClosedForm::zero_form();
        case TheoremId::thm41: {
            const long m = exact_quotient(n + r, d, "(n+r)/d");
            f.sign = -parity_sign(n - 1 - m);
            f.numerator = {binomial(r, ri), binomial(d - r), qd(d, n - 1 - m)};
            f.denominator = {qd(d, m, di - 1)};
            f.q_exponent = a_exponent(d, n, r);
            return f;
        }
        case TheoremId::thm42: {
            const long m = exact_quotient(n + r, d, "(n+r)/d");
            f.sign = parity_sign(n - 1 - m);
            f.numerator = {binomial(r, ri + 1), qd(d, n - 1 - m)};
            f.denominator = {qd(d, m, di - 1)};
            f.q_exponent = a_exponent(d, n, r) - r;
            return f;
        }
    }
    throw std::logic_error("theorem_rhs");
}

// ---------------------------------------------------------------------------
// Parametric families. Numerator a-exponents run over d-1, d-3, ..., 1-d and
// denominator ones over d-2, ..., 2-d (plus a bare (q^d;q^d)_k); each display
// fixes which q-power and which length goes with which exponent.

inline std::optional<std::string> parametric_precondition(ParametricId id, long d, long r, long n) {
    using detail::congruent;
    if (n < 2) return "n >= 2 required";
    if (r < 1 || d <= r) return "needs d > r >= 1";
    if (gcd_long(d, r) != 1) return "needs gcd(d,r) = 1";
    if (!congruent(n, -r, d)) return "needs n = -r (mod d)";
    const bool mixed = (d + r) % 2 == 1;
    const bool both_odd = d % 2 == 1 && r % 2 == 1;
    switch (id) {
        case ParametricId::p1_24:
            if (!mixed || d < 3 + r || n < 2 * d - r) return "needs d+r odd, d >= 3+r, n >= 2d-r";
            return std::nullopt;
        case ParametricId::p2_25:
            if (!both_odd || d < 3 + r || n < 2 * d - r) return "needs d, r odd, d >= 3+r, n >= 2d-r";
            return std::nullopt;
        case ParametricId::p3_32:
            if (r != 1 || d % 2 == 0 || d <= 3) return "needs odd d > 3 and r = 1";
            return std::nullopt;
        case ParametricId::p4_33:
            if (r != 1 || d != 3) return "needs d = 3 and r = 1";
            return std::nullopt;
        case ParametricId::p5_43:
            if (!mixed || d - r < 3) return "needs d+r odd and d-r >= 3";
            return std::nullopt;
        case ParametricId::p6_44:
            if (d - r != 1) return "needs d-r = 1";
            return std::nullopt;
        case ParametricId::p7_45:
            if (!both_odd || d - r < 4) return "needs d, r odd and d-r >= 4";
            return std::nullopt;
        case ParametricId::p8_46:
            if (!both_odd || d - r != 2) return "needs d, r odd and d-r = 2";
            return std::nullopt;
    }
    return "unknown family";
}

inline long parametric_upper(ParametricId id, long d, long r, long n) {
    if (id == ParametricId::p1_24 || id == ParametricId::p2_25)
        return n - 1 - exact_quotient(n + r, d, "(n+r)/d");
    return n - 1;
}

inline SummandSpec parametric_summand(ParametricId id, long d, long r) {
    using detail::term;
    SummandSpec s;
    s.step = d;
    s.q_per_k = d;
    s.denominator.push_back(term(0, d, 1));
    for (long j = 0; j <= d - 2; ++j) s.denominator.push_back(term(static_cast<int>(d - 2 - 2 * j), d, 1));
    for (long j = 0; j <= d - 1; ++j) {
        const int e = static_cast<int>(d - 1 - 2 * j);
        const long ae = std::labs(e);
        switch (id) {
            case ParametricId::p1_24:
                s.numerator.push_back(term(e, d + r, 1, ae <= r ? -2 : 0));
                break;
            case ParametricId::p2_25:
                s.numerator.push_back(term(e, d + r, 1, (ae >= 2 && ae <= r + 1) ? -2 : 0));
                break;
            case ParametricId::p5_43:
            case ParametricId::p6_44:
                s.numerator.push_back(term(e, ae <= r ? r : d + r, 1));
                break;
            case ParametricId::p3_32:
            case ParametricId::p4_33:
            case ParametricId::p7_45:
            case ParametricId::p8_46:
                s.numerator.push_back(term(e, (ae >= 2 && ae <= r + 1) ? r : d + r, 1));
                break;
        }
    }
    if (id == ParametricId::p1_24 || id == ParametricId::p2_25) s.linear = {{r - d, static_cast<int>(r)}};
    return s;
}

inline ClosedForm parametric_rhs(ParametricId id, long d, long r, long n) {
    using detail::binomial;
    using detail::qd;
    if (id == ParametricId::p1_24 || id == ParametricId::p2_25) return ClosedForm::zero_form();
    const long m = exact_quotient(n + r, d, "(n+r)/d");
    ClosedForm f;
    f.numerator = {qd(d, n - 1 - m)};
    for (long j = 0; j <= d - 2; ++j) f.denominator.push_back({static_cast<int>(d - 2 - 2 * j), d, d, m, 1});
    switch (id) {
        case ParametricId::p5_43:
        case ParametricId::p6_44:
            f.sign = parity_sign(n - 1 - m);
            for (long e = r; e >= -r; e -= 2) f.numerator.push_back(binomial(r, 1, static_cast<int>(e)));
            f.q_exponent = a_exponent(d, n, r) - r;
            break;
        case ParametricId::p3_32:
        case ParametricId::p4_33:
        case ParametricId::p7_45:
        case ParametricId::p8_46:
            for (long j = 1; j <= (r + 1) / 2; ++j) {
                f.numerator.push_back(binomial(r, 1, static_cast<int>(2 * j)));
                f.numerator.push_back(binomial(r, 1, static_cast<int>(-2 * j)));
            }
            if (id == ParametricId::p3_32)
                f.q_exponent = r1_exponent(d, n) - 2;
            else if (id == ParametricId::p4_33)
                f.q_exponent = exact_quotient(n * n + 5 * n - 2, 3, "(n^2+5n-2)/3");
            else
                f.q_exponent = a_exponent(d, n, r) - r;
            break;
        default: break;
    }
    return f;
}

/// The non-parametric statement each family collapses to at a = 1.
struct CollapseTarget {
    SummandSpec summand;
    std::optional<TheoremId> theorem;  // nullopt: right-hand side is zero
};

inline CollapseTarget parametric_collapse_target(ParametricId id, long d, long r) {
    switch (id) {
        case ParametricId::p1_24:
        case ParametricId::p2_25: return {lemma_reduced_summand(d, r), std::nullopt};
        case ParametricId::p3_32:
        case ParametricId::p4_33: return {family_summand(SumFamily::f3_squared, d), TheoremId::thm12};
        default: return {family_summand(SumFamily::f6_thm42, d, r), TheoremId::thm42};
    }
}

}  // namespace qsc
