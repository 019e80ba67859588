#pragma once

// Symbolic description of truncated q-hypergeometric summands and closed forms,
// possibly carrying a parameter a, and the three ways they are evaluated:
//   * incrementally inside a residue ring,
//   * as an exact polynomial sum over a common cleared denominator,
//   * at q = 1 (each factor 1 - q^e tends to e times 1 - q).

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/polynomial.hpp"
#include "qsc/residue.hpp"

namespace qsc {

// ---------------------------------------------------------------------------
// Integer helpers for exponent formulas.

inline long exact_quotient(long num, long den, const std::string& what) {
    if (den == 0 || num % den != 0)
        throw integrality_error(what + ": " + std::to_string(num) + "/" + std::to_string(den) + " is not an integer");
    return num / den;
}

/// C(x, 2) = x(x-1)/2 for any integer x.
inline long choose2(long x) { return x * (x - 1) / 2; }

inline long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

inline long gcd_long(long a, long b) {
    a = std::labs(a);
    b = std::labs(b);
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// ---------------------------------------------------------------------------

/// sign * q^e * prod(1 - q^x over numerator) / prod(1 - q^y over denominator),
/// times an optional Laurent cofactor. Binomials stay factored until equality
/// is tested, which keeps every comparison a chain of sparse multiplications.
template <Coefficient T>
class FactoredFraction {
public:
    using Laurent = LaurentPolynomial<T>;
    using traits = coeff_traits<T>;

    FactoredFraction() : cofactor_(Laurent::one()) {}
    explicit FactoredFraction(Laurent cofactor) : cofactor_(std::move(cofactor)) {}

    static FactoredFraction zero() { return FactoredFraction(Laurent{}); }

    bool is_zero() const { return cofactor_.is_zero() || zero_factor_; }
    const Laurent& cofactor() const { return cofactor_; }
    const std::vector<long>& numerator_binomials() const { return num_; }
    const std::vector<long>& denominator_binomials() const { return den_; }

    FactoredFraction& mul_monomial(long coeff, long e) {
        cofactor_.mul_monomial(traits::from_int(coeff), e);
        return *this;
    }
    FactoredFraction& mul_laurent(const Laurent& f) {
        cofactor_ *= f;
        return *this;
    }
    FactoredFraction& mul_binomial(long e, int mult = 1) {
        if (e == 0 && mult > 0) zero_factor_ = true;
        for (int i = 0; i < mult; ++i) num_.push_back(e);
        return *this;
    }
    FactoredFraction& div_binomial(long e, int mult = 1) {
        if (e == 0 && mult > 0) throw degenerate_error("denominator factor 1 - q^0 vanishes identically");
        for (int i = 0; i < mult; ++i) den_.push_back(e);
        return *this;
    }
    /// (q^base; q^step)_length ^ mult, negative lengths included.
    FactoredFraction& mul_pochhammer(long base, long step, long length, int mult = 1) {
        if (length >= 0) {
            for (long j = 0; j < length; ++j) mul_binomial(base + step * j, mult);
        } else {
            for (long j = 1; j <= -length; ++j) div_binomial(base - step * j, mult);
        }
        return *this;
    }
    FactoredFraction& div_pochhammer(long base, long step, long length, int mult = 1) {
        if (length >= 0) {
            for (long j = 0; j < length; ++j) div_binomial(base + step * j, mult);
        } else {
            for (long j = 1; j <= -length; ++j) mul_binomial(base - step * j, mult);
        }
        return *this;
    }
    FactoredFraction& operator*=(const FactoredFraction& o) {
        cofactor_ *= o.cofactor_;
        num_.insert(num_.end(), o.num_.begin(), o.num_.end());
        den_.insert(den_.end(), o.den_.begin(), o.den_.end());
        zero_factor_ = zero_factor_ || o.zero_factor_;
        return *this;
    }

    /// Removes binomials common to numerator and denominator.
    void cancel() {
        std::sort(num_.begin(), num_.end());
        std::sort(den_.begin(), den_.end());
        std::vector<long> n2, d2;
        std::size_t i = 0, j = 0;
        while (i < num_.size() || j < den_.size()) {
            if (j == den_.size() || (i < num_.size() && num_[i] < den_[j])) {
                n2.push_back(num_[i++]);
            } else if (i == num_.size() || den_[j] < num_[i]) {
                d2.push_back(den_[j++]);
            } else {
                ++i;
                ++j;
            }
        }
        num_ = std::move(n2);
        den_ = std::move(d2);
    }

    Laurent expanded_numerator() const {
        if (is_zero()) return {};
        Laurent r = cofactor_;
        for (long e : num_) r.mul_binomial(traits::from_int(1), e);
        return r;
    }

    Laurent expanded_denominator() const { return expand(den_); }

    /// Product of (1 - q^e) over `exps`.
    static Laurent expand(const std::vector<long>& exps) {
        Laurent r = Laurent::one();
        for (long e : exps) r.mul_binomial(traits::from_int(1), e);
        return r;
    }

    friend bool equal(FactoredFraction a, FactoredFraction b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        a.cancel();
        b.cancel();
        // Drop denominator factors shared by both sides before cross-multiplying.
        std::vector<long> da, db;
        std::set_difference(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(da));
        std::set_difference(b.den_.begin(), b.den_.end(), a.den_.begin(), a.den_.end(), std::back_inserter(db));
        Laurent lhs = a.expanded_numerator();
        for (long e : db) lhs.mul_binomial(traits::from_int(1), e);
        Laurent rhs = b.expanded_numerator();
        for (long e : da) rhs.mul_binomial(traits::from_int(1), e);
        return lhs == rhs;
    }

    /// Numerator of a - b over the product of both denominators (for witnesses).
    friend Laurent cross_difference(const FactoredFraction& a, const FactoredFraction& b) {
        Laurent lhs = a.expanded_numerator();
        for (long e : b.den_) lhs.mul_binomial(traits::from_int(1), e);
        Laurent rhs = b.expanded_numerator();
        for (long e : a.den_) rhs.mul_binomial(traits::from_int(1), e);
        return lhs - rhs;
    }

private:
    Laurent cofactor_;
    std::vector<long> num_, den_;
    bool zero_factor_ = false;
};

// ---------------------------------------------------------------------------
// Summands.

/// (a^alpha q^beta ; q^step)_{k + offset} ^ mult
struct SummandTerm {
    int alpha = 0;
    long beta = 0;
    int offset = 0;
    int mult = 1;
    friend bool operator==(const SummandTerm&, const SummandTerm&) = default;
};

/// (1 - q^{step k + shift}) ^ mult
struct LinearTerm {
    long shift = 0;
    int mult = 1;
    friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

/// term_k = prod num / prod den * prod linear * q^{q_per_k k}; all Pochhammers
/// share the base q^step.
struct SummandSpec {
    long step = 1;
    std::vector<SummandTerm> numerator, denominator;
    std::vector<LinearTerm> linear;
    long q_per_k = 0;

    /// The same summand with a -> 1/a.
    SummandSpec mirrored() const {
        SummandSpec m = *this;
        for (auto& t : m.numerator) t.alpha = -t.alpha;
        for (auto& t : m.denominator) t.alpha = -t.alpha;
        return m;
    }
};

/// A SummandSpec after substituting a = q^s and rewriting every shifted
/// Pochhammer (x;Q)_{k+o} as a constant times (x Q^o; Q)_k.
struct ClearedSummand {
    long step = 1;
    std::vector<std::pair<long, int>> num_bases, den_bases;  // (exponent of x, multiplicity)
    std::vector<long> const_num, const_den;
    std::vector<LinearTerm> linear;
    long q_per_k = 0;
};

inline ClearedSummand substitute(const SummandSpec& spec, long s) {
    ClearedSummand c;
    c.step = spec.step;
    c.linear = spec.linear;
    c.q_per_k = spec.q_per_k;
    auto push = [&](const SummandTerm& t, bool numerator) {
        if (t.mult == 0) return;
        const long x = t.beta + static_cast<long>(t.alpha) * s;
        const long shifted = x + spec.step * t.offset;
        (numerator ? c.num_bases : c.den_bases).emplace_back(shifted, t.mult);
        // (x;Q)_{k+o} = (x;Q)_o (xQ^o;Q)_k, with (x;Q)_o a reciprocal product for o < 0.
        auto& into_num = numerator ? c.const_num : c.const_den;
        auto& into_den = numerator ? c.const_den : c.const_num;
        for (int m = 0; m < t.mult; ++m) {
            if (t.offset >= 0) {
                for (long j = 0; j < t.offset; ++j) into_num.push_back(x + spec.step * j);
            } else {
                for (long j = 1; j <= -t.offset; ++j) into_den.push_back(x - spec.step * j);
            }
        }
    };
    for (const auto& t : spec.numerator) push(t, true);
    for (const auto& t : spec.denominator) push(t, false);
    for (long e : c.const_den)
        if (e == 0) throw degenerate_error("shifted Pochhammer produces the factor 1 - q^0 in a denominator");
    return c;
}

/// term_k as a factored fraction.
template <Coefficient T>
FactoredFraction<T> summand_term(const ClearedSummand& c, long k) {
    FactoredFraction<T> f;
    for (long e : c.const_num) f.mul_binomial(e);
    for (long e : c.const_den) f.div_binomial(e);
    for (auto [x, m] : c.num_bases) f.mul_pochhammer(x, c.step, k, m);
    for (auto [x, m] : c.den_bases) f.div_pochhammer(x, c.step, k, m);
    for (const auto& l : c.linear) f.mul_binomial(c.step * k + l.shift, l.mult);
    f.mul_monomial(1, c.q_per_k * k);
    return f;
}

/// sum_{k=0}^{upper} term_k as one fraction whose denominator is
/// const_den * prod den_bases at length `upper`.
template <Coefficient T>
FactoredFraction<T> cleared_sum(const ClearedSummand& c, long upper) {
    using Laurent = LaurentPolynomial<T>;
    const T one = coeff_traits<T>::from_int(1);
    std::vector<long> den_all = c.const_den;
    for (auto [x, m] : c.den_bases)
        for (long i = 0; i < upper; ++i) {
            if (x + c.step * i == 0) throw degenerate_error("denominator Pochhammer vanishes identically");
            for (int r = 0; r < m; ++r) den_all.push_back(x + c.step * i);
        }

    // tails[k] = prod_{i=k}^{upper-1} denominator factors at index i
    std::vector<Laurent> tails(static_cast<std::size_t>(upper + 1));
    tails[static_cast<std::size_t>(upper)] = Laurent::one();
    for (long k = upper - 1; k >= 0; --k) {
        Laurent t = tails[static_cast<std::size_t>(k + 1)];
        for (auto [x, m] : c.den_bases)
            for (int r = 0; r < m; ++r) t.mul_binomial(one, x + c.step * k);
        tails[static_cast<std::size_t>(k)] = std::move(t);
    }

    Laurent total;
    for (long k = 0; k <= upper; ++k) {
        bool vanishes = false;
        for (long e : c.const_num) vanishes = vanishes || e == 0;
        for (auto [x, m] : c.num_bases)
            for (long i = 0; i < k && !vanishes; ++i) vanishes = x + c.step * i == 0;
        for (const auto& l : c.linear) vanishes = vanishes || c.step * k + l.shift == 0;
        if (vanishes) continue;
        Laurent t = std::move(tails[static_cast<std::size_t>(k)]);
        for (long e : c.const_num) t.mul_binomial(one, e);
        for (auto [x, m] : c.num_bases)
            for (long i = 0; i < k; ++i)
                for (int r = 0; r < m; ++r) t.mul_binomial(one, x + c.step * i);
        for (const auto& l : c.linear)
            for (int r = 0; r < l.mult; ++r) t.mul_binomial(one, c.step * k + l.shift);
        t.shift(c.q_per_k * k);
        total += t;
    }
    FactoredFraction<T> f(std::move(total));
    for (long e : den_all) f.div_binomial(e);
    return f;
}

/// Incremental evaluation of sum_{k=0}^{upper} term_k in a residue ring. The
/// partial sum is kept as acc / den with den = const_den * (denominator bases
/// at length k), so there is a single inversion at the end and acc keeps
/// integral coefficients over Q.
template <FieldCoefficient T>
RingElement<T> ring_sum(const ClearedSummand& c, long upper, const ResidueRing<T>& ring) {
    std::map<long, RingElement<T>> binom;
    auto factor = [&](long e) -> const RingElement<T>& {
        auto it = binom.find(e);
        if (it == binom.end()) it = binom.emplace(e, ring.one() - ring.pow_q(e)).first;
        return it->second;
    };
    RingElement<T> num = ring.one(), den = ring.one(), acc = ring.zero();
    for (long e : c.const_num) num *= factor(e);
    for (long e : c.const_den) den *= factor(e);
    for (long k = 0; k <= upper; ++k) {
        RingElement<T> t = num;
        for (const auto& l : c.linear)
            for (int r = 0; r < l.mult; ++r) t *= factor(c.step * k + l.shift);
        acc += t * ring.pow_q(c.q_per_k * k);
        if (k == upper) break;
        for (auto [x, m] : c.num_bases)
            for (int r = 0; r < m; ++r) num *= factor(x + c.step * k);
        for (auto [x, m] : c.den_bases)
            for (int r = 0; r < m; ++r) {
                acc *= factor(x + c.step * k);
                den *= factor(x + c.step * k);
            }
    }
    return acc * den.inverse();
}

/// Limit of term_k at q = 1 as an exact rational: each 1 - q^e contributes e.
/// Requires as many binomials above as below.
inline ExactRational q1_limit(const ClearedSummand& c, long k) {
    Integer num = 1, den = 1;
    long count = 0;
    for (long e : c.const_num) num *= e, ++count;
    for (long e : c.const_den) den *= e, --count;
    for (auto [x, m] : c.num_bases)
        for (long i = 0; i < k; ++i)
            for (int r = 0; r < m; ++r) num *= (x + c.step * i), ++count;
    for (auto [x, m] : c.den_bases)
        for (long i = 0; i < k; ++i)
            for (int r = 0; r < m; ++r) den *= (x + c.step * i), --count;
    for (const auto& l : c.linear)
        for (int r = 0; r < l.mult; ++r) num *= (c.step * k + l.shift), ++count;
    if (count != 0) throw std::domain_error("q = 1 limit: unbalanced binomial count");
    if (den == 0) throw pole_error("q = 1 limit: vanishing denominator");
    return make_rational(num, den);
}

// ---------------------------------------------------------------------------
// Closed forms.

/// (a^alpha q^beta ; q^step)_length ^ mult with an explicit length.
struct ClosedFactor {
    int alpha = 0;
    long beta = 0;
    long step = 1;
    long length = 1;
    int mult = 1;
    friend bool operator==(const ClosedFactor&, const ClosedFactor&) = default;
};

struct ClosedForm {
    bool zero = false;
    int sign = 1;
    std::vector<ClosedFactor> numerator, denominator;
    long q_exponent = 0;

    static ClosedForm zero_form() {
        ClosedForm f;
        f.zero = true;
        return f;
    }

    template <Coefficient T>
    FactoredFraction<T> substitute(long s) const {
        if (zero) return FactoredFraction<T>::zero();
        FactoredFraction<T> f;
        f.mul_monomial(sign, q_exponent);
        for (const auto& p : numerator) f.mul_pochhammer(p.beta + p.alpha * s, p.step, p.length, p.mult);
        for (const auto& p : denominator) f.div_pochhammer(p.beta + p.alpha * s, p.step, p.length, p.mult);
        return f;
    }

    ClosedForm mirrored() const {
        ClosedForm m = *this;
        for (auto& p : m.numerator) p.alpha = -p.alpha;
        for (auto& p : m.denominator) p.alpha = -p.alpha;
        return m;
    }
};

/// A closed form without the parameter a, evaluated in the ring: Pochhammer
/// factors are built from ring classes of q-powers and the sign is applied as
/// an integer.
template <FieldCoefficient T>
RingElement<T> ring_closed_form(const ClosedForm& form, const ResidueRing<T>& ring) {
    if (form.zero) return ring.zero();
    RingElement<T> num = ring.constant(coeff_traits<T>::from_int(form.sign)) * ring.pow_q(form.q_exponent);
    RingElement<T> den = ring.one();
    auto apply = [&](const ClosedFactor& p, RingElement<T>& into_num, RingElement<T>& into_den) {
        if (p.alpha != 0) throw std::logic_error("ring_closed_form: closed form still depends on a");
        if (p.length >= 0) {
            for (long j = 0; j < p.length; ++j)
                for (int r = 0; r < p.mult; ++r) into_num *= ring.one() - ring.pow_q(p.beta + p.step * j);
        } else {
            for (long j = 1; j <= -p.length; ++j)
                for (int r = 0; r < p.mult; ++r) into_den *= ring.one() - ring.pow_q(p.beta - p.step * j);
        }
    };
    for (const auto& p : form.numerator) apply(p, num, den);
    for (const auto& p : form.denominator) apply(p, den, num);
    return num * den.inverse();
}

}  // namespace qsc
