#pragma once

// Residues modulo p^k (k = 1, 2), the p-adic Gamma function at integer
// representatives, and the classical supercongruences modulo p^2.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsc/check_result.hpp"
#include "qsc/cyclotomic.hpp"
#include "qsc/families.hpp"
#include "qsc/scalar.hpp"
#include "qsc/summand.hpp"

namespace qsc {

struct invalid_prime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PadicResidue {
    std::int64_t p = 0;
    int k = 2;
    std::int64_t value = 0;

    std::int64_t modulus() const {
        std::int64_t m = 1;
        for (int i = 0; i < k; ++i) m *= p;
        return m;
    }

    static PadicResidue make(std::int64_t p, int k, std::int64_t v) {
        PadicResidue r{p, k, 0};
        const std::int64_t m = r.modulus();
        r.value = ((v % m) + m) % m;
        return r;
    }

    friend PadicResidue operator*(const PadicResidue& a, const PadicResidue& b) {
        return make(a.p, a.k, static_cast<std::int64_t>(static_cast<__int128>(a.value) * b.value % a.modulus()));
    }
    friend PadicResidue operator+(const PadicResidue& a, const PadicResidue& b) {
        return make(a.p, a.k, a.value + b.value);
    }
    PadicResidue operator-() const { return make(p, k, -value); }
    PadicResidue& operator*=(const PadicResidue& o) { return *this = *this * o; }
    PadicResidue& operator+=(const PadicResidue& o) { return *this = *this + o; }
    friend bool operator==(const PadicResidue& a, const PadicResidue& b) {
        return a.p == b.p && a.k == b.k && a.value == b.value;
    }

    PadicResidue pow(long e) const {
        PadicResidue acc = make(p, k, 1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }
    /// Inverse of a unit (p does not divide value).
    PadicResidue inverse() const {
        if (value % p == 0) throw std::domain_error("residue divisible by p has no inverse");
        // Euler: x^{phi(p^k) - 1}
        return pow(modulus() / p * (p - 1) - 1);
    }

    std::string to_string() const { return std::to_string(value) + " (mod " + std::to_string(modulus()) + ")"; }
};

inline void require_prime(std::int64_t p, int k) {
    if (p < 3 || !is_prime(p)) throw invalid_prime("p = " + std::to_string(p) + " is not an odd prime");
    if (k < 1 || k > 2) throw std::invalid_argument("precision must be 1 or 2");
}

/// a/b mod p^k for p not dividing b.
inline PadicResidue residue_of(const ExactRational& x, std::int64_t p, int k = 2) {
    require_prime(p, k);
    const std::int64_t m = PadicResidue{p, k, 0}.modulus();
    const Integer num = x.get_num(), den = x.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("denominator of " + x.get_str() + " is divisible by p = " + std::to_string(p));
    const auto a = PadicResidue::make(p, k, static_cast<std::int64_t>(mpz_fdiv_ui(num.get_mpz_t(), m)));
    const auto b = PadicResidue::make(p, k, static_cast<std::int64_t>(mpz_fdiv_ui(den.get_mpz_t(), m)));
    return a * b.inverse();
}

/// Gamma_p(x) mod p^k through the representative m of x in [0, p^k):
/// (-1)^m prod_{0<j<m, p does not divide j} j.
inline PadicResidue padic_gamma(std::int64_t p, int k, const PadicResidue& x) {
    require_prime(p, k);
    const std::int64_t m = PadicResidue::make(p, k, x.value).value;
    PadicResidue acc = PadicResidue::make(p, k, 1);
    for (std::int64_t j = 1; j < m; ++j)
        if (j % p) acc *= PadicResidue::make(p, k, j);
    return m % 2 ? -acc : acc;
}

inline PadicResidue padic_gamma(std::int64_t p, int k, const ExactRational& x) {
    return padic_gamma(p, k, residue_of(x, p, k));
}

/// (x)_j = x (x+1) ... (x+j-1) mod p^k.
inline PadicResidue rising_factorial_mod(const ExactRational& x, long j, std::int64_t p, int k = 2) {
    PadicResidue acc = PadicResidue::make(p, k, 1);
    if (j == 0) return acc;
    const PadicResidue base = residue_of(x, p, k);
    for (long i = 0; i < j; ++i) acc *= base + PadicResidue::make(p, k, i);
    return acc;
}

inline PadicResidue factorial_mod(long n, std::int64_t p, int k = 2) { return rising_factorial_mod(1, n, p, k); }

// ---------------------------------------------------------------------------

enum class ClassicalId { rv_11, deines_12, cor41_i, cor41_ii, gamma_factorial, wlt_integrality };

inline constexpr ClassicalId all_classical[] = {ClassicalId::rv_11,    ClassicalId::deines_12,
                                                ClassicalId::cor41_i,  ClassicalId::cor41_ii,
                                                ClassicalId::gamma_factorial, ClassicalId::wlt_integrality};

inline std::string to_string(ClassicalId id) {
    static const char* names[] = {"rv_11", "deines_12", "cor41_i", "cor41_ii", "gamma_factorial", "wlt_integrality"};
    return names[static_cast<int>(id)];
}

/// One Pochhammer power (x)_k^mult inside a hypergeometric term over k!^d.
struct RisingPower {
    ExactRational x;
    long mult;
};

/// sum_{k=0}^{p-1} prod (x)_k^mult / k!^{den_power} mod p^2
inline PadicResidue hypergeometric_sum_mod(const std::vector<RisingPower>& top, long den_power, std::int64_t p) {
    PadicResidue total = PadicResidue::make(p, 2, 0);
    for (long k = 0; k < p; ++k) {
        PadicResidue t = factorial_mod(k, p).pow(den_power).inverse();
        for (const auto& [x, mult] : top) t *= rising_factorial_mod(x, k, p).pow(mult);
        total += t;
    }
    return total;
}

/// The two q = 1 sums f5, f6 (images of the two-parameter congruences).
inline PadicResidue cor41_i_sum(long d, long r, std::int64_t p) {
    return hypergeometric_sum_mod({{make_rational(d + r, d), d - r}, {make_rational(r, d), r - 1}, {make_rational(r - d, d), 1}},
                                  d, p);
}

inline PadicResidue cor41_ii_sum(long d, long r, std::int64_t p) {
    return hypergeometric_sum_mod({{make_rational(d + r, d), d - r - 1}, {make_rational(r, d), r + 1}}, d, p);
}

namespace detail {

inline bool padic_setting(long d, long r, std::int64_t p) {
    return r >= 1 && d > r && gcd_long(d, r) == 1 && p >= 5 && is_prime(p) && floor_mod(p + r, d) == 0;
}

inline Outcome residue_verdict(const PadicResidue& lhs, const PadicResidue& rhs) {
    return Outcome::verdict(lhs == rhs, "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
}

}  // namespace detail

struct ClassicalArgs {
    long d = 0, r = 0, n = 0;
    std::int64_t p = 0;
};

inline Outcome verify_classical(ClassicalId id, const ClassicalArgs& a) {
    const long d = a.d, r = a.r, n = a.n;
    const std::int64_t p = a.p;
    switch (id) {
        case ClassicalId::rv_11: {
            if (p < 3 || !is_prime(p)) return Outcome::skipped("needs an odd prime p");
            const auto lhs = hypergeometric_sum_mod({{make_rational(1, 2), 2}}, 2, p);
            return detail::residue_verdict(lhs, PadicResidue::make(p, 2, (p - 1) / 2 % 2 ? -1 : 1));
        }
        case ClassicalId::deines_12: {
            if (d < 2 || p < 3 || !is_prime(p) || p % d != 1) return Outcome::skipped("needs d > 1 and a prime p = 1 (mod d)");
            const auto lhs = hypergeometric_sum_mod({{make_rational(d - 1, d), d}}, d, p);
            return detail::residue_verdict(lhs, -padic_gamma(p, 2, make_rational(1, d)).pow(d));
        }
        case ClassicalId::cor41_i: {
            if (!detail::padic_setting(d, r, p) || d < 3 + r || p < 2 * d - r)
                return Outcome::skipped("needs d >= 3+r, gcd(d,r) = 1, prime p >= max(5, 2d-r), p = -r (mod d)");
            const auto rhs = residue_of(make_rational(d - r, d), p) * residue_of(make_rational(r, d), p).pow(r) *
                             padic_gamma(p, 2, make_rational(-r, d)).pow(d);
            return detail::residue_verdict(cor41_i_sum(d, r, p), rhs);
        }
        case ClassicalId::cor41_ii: {
            if (!detail::padic_setting(d, r, p))
                return Outcome::skipped("needs d > r >= 1, gcd(d,r) = 1, prime p >= 5, p = -r (mod d)");
            const auto rhs = -(residue_of(make_rational(r, d), p).pow(r + 1) * padic_gamma(p, 2, make_rational(-r, d)).pow(d));
            return detail::residue_verdict(cor41_ii_sum(d, r, p), rhs);
        }
        case ClassicalId::gamma_factorial: {
            if (!detail::padic_setting(d, r, p))
                return Outcome::skipped("needs d > r >= 1, gcd(d,r) = 1, prime p >= 5, p = -r (mod d)");
            const long m = (p + r) / d;
            const auto lhs = factorial_mod(p - 1 - m, p) * factorial_mod(m, p).pow(d - 1).inverse();
            auto rhs = padic_gamma(p, 2, make_rational(-r, d)).pow(d);
            if (m % 2 == 0) rhs = -rhs;
            return detail::residue_verdict(lhs, rhs);
        }
        case ClassicalId::wlt_integrality: {
            if (d < 2 || floor_mod(n + 1, d) != 0 || n < 2 * d - 1)
                return Outcome::skipped("needs d >= 2, n = -1 (mod d), n >= 2d-1");
            const auto rising = [](const ExactRational& x, long k) {
                ExactRational acc = 1;
                for (long i = 0; i < k; ++i) acc *= x + i;
                return acc;
            };
            ExactRational sum = 0;
            for (long k = 0; k < n; ++k) {
                ExactRational t = 1;
                for (long i = 0; i < d - 2; ++i) t *= rising(make_rational(d + 1, d), k);
                t *= rising(make_rational(1, d), k) * rising(make_rational(1 - d, d), k);
                const ExactRational fact = rising(1, k);
                for (long i = 0; i < d; ++i) t /= fact;
                sum += t;
            }
            Integer pre = 1, f = 1;
            for (long i = 1; i < n; ++i) f *= i;
            for (long i = 0; i < d; ++i) pre *= f;
            Integer dp;
            mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d * n - d));
            const ExactRational value = ExactRational(pre * dp) * sum / ExactRational(Integer(n) * n);
            return Outcome::verdict(value.get_den() == 1, "value = " + clip(value.get_str(), 200));
        }
    }
    throw std::logic_error("verify_classical");
}

// ---------------------------------------------------------------------------

/// The q = 1 images of the two-parameter sums at n = p, summed termwise mod p^2,
/// against the closed p-adic sums.
inline Outcome verify_q1_shadow(long d, long r, std::int64_t p) {
    if (!detail::padic_setting(d, r, p)) return Outcome::skipped("needs d > r >= 1, gcd(d,r) = 1, prime p >= 5, p = -r (mod d)");
    auto q1_sum = [&](SumFamily f) {
        const auto c = substitute(family_summand(f, d, r), 0);
        PadicResidue total = PadicResidue::make(p, 2, 0);
        for (long k = 0; k < p; ++k) total += residue_of(q1_limit(c, k), p);
        return total;
    };
    // the sums agree termwise whatever the congruence range
    const auto a5 = q1_sum(SumFamily::f5_thm41), b5 = cor41_i_sum(d, r, p);
    if (!(a5 == b5)) return Outcome::fails("f5: q = 1 sum " + a5.to_string() + ", closed sum " + b5.to_string());
    const auto a6 = q1_sum(SumFamily::f6_thm42), b6 = cor41_ii_sum(d, r, p);
    if (!(a6 == b6)) return Outcome::fails("f6: q = 1 sum " + a6.to_string() + ", closed sum " + b6.to_string());
    return Outcome::holds();
}

}  // namespace qsc
