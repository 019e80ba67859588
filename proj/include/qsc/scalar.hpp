#pragma once

// Coefficient types: arbitrary-precision integers and rationals (GMP) for exact
// mode, and a 64-bit prime field for the optional fast mode.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qsc {

using Integer = mpz_class;
using ExactRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
inline ExactRational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    ExactRational r(num, den);
    r.canonicalize();
    return r;
}

inline ExactRational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// ---------------------------------------------------------------------------
// Prime field Z/PZ, P < 2^63. The modulus is per thread so that sweep workers
// can run different primes side by side; install it with PrimeFieldScope.

class ModP {
public:
    ModP() = default;
    ModP(long long v) : v_(reduce_signed(v)) {}  // NOLINT(implicit)

    static std::uint64_t modulus() { return modulus_ref(); }

    std::uint64_t value() const { return v_; }

    friend ModP operator+(ModP a, ModP b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= modulus()) s -= modulus();
        return from_raw(s);
    }
    friend ModP operator-(ModP a, ModP b) {
        return from_raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + modulus() - b.v_);
    }
    friend ModP operator*(ModP a, ModP b) {
        return from_raw(static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a.v_) * b.v_ % modulus()));
    }
    ModP operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    ModP& operator+=(ModP o) { return *this = *this + o; }
    ModP& operator-=(ModP o) { return *this = *this - o; }
    ModP& operator*=(ModP o) { return *this = *this * o; }

    ModP pow(std::uint64_t e) const {
        ModP base = *this, acc = from_raw(1 % modulus());
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    ModP inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
        return pow(modulus() - 2);
    }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP& operator/=(ModP o) { return *this = *this / o; }

    friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

    static ModP from_raw(std::uint64_t v) {
        ModP r;
        r.v_ = v;
        return r;
    }
    static ModP from_integer(const Integer& z) {
        static_assert(sizeof(unsigned long) == 8);
        return from_raw(mpz_fdiv_ui(z.get_mpz_t(), modulus()));
    }

private:
    friend class PrimeFieldScope;
    static std::uint64_t& modulus_ref() {
        thread_local std::uint64_t p = 0;
        return p;
    }
    static std::uint64_t reduce_signed(long long v) {
        const std::uint64_t p = modulus();
        if (p == 0) throw std::logic_error("ModP used without an active PrimeFieldScope");
        if (v >= 0) return static_cast<std::uint64_t>(v) % p;
        std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % p;  // avoids overflow at LLONG_MIN
        return (p - 1 - m) % p;
    }

    std::uint64_t v_ = 0;
};

/// Installs a prime modulus for ModP on the current thread; restores the
/// previous one on destruction.
class PrimeFieldScope {
public:
    explicit PrimeFieldScope(std::uint64_t p) : saved_(ModP::modulus_ref()) {
        ModP::modulus_ref() = p;
    }
    ~PrimeFieldScope() { ModP::modulus_ref() = saved_; }
    PrimeFieldScope(const PrimeFieldScope&) = delete;
    PrimeFieldScope& operator=(const PrimeFieldScope&) = delete;

private:
    std::uint64_t saved_;
};

// ---------------------------------------------------------------------------

template <class T>
struct coeff_traits;

template <>
struct coeff_traits<ExactRational> {
    static constexpr bool is_field = true;
    static ExactRational from_int(long long v) { return ExactRational(static_cast<long>(v)); }
    static ExactRational from_rational(const ExactRational& x) { return x; }
    static bool is_zero(const ExactRational& x) { return sgn(x) == 0; }
    static bool is_one(const ExactRational& x) { return x == 1; }
    static ExactRational inverse(const ExactRational& x) {
        if (is_zero(x)) throw std::domain_error("inverse of zero rational");
        return 1 / x;
    }
    static std::string to_string(const ExactRational& x) { return x.get_str(); }
};

template <>
struct coeff_traits<Integer> {
    static constexpr bool is_field = false;
    static Integer from_int(long long v) { return Integer(static_cast<long>(v)); }
    static Integer from_rational(const ExactRational& x) {
        if (x.get_den() != 1) throw std::domain_error("non-integral rational in integer ring");
        return x.get_num();
    }
    static bool is_zero(const Integer& x) { return sgn(x) == 0; }
    static bool is_one(const Integer& x) { return x == 1; }
    /// Only the units +-1 are invertible.
    static Integer inverse(const Integer& x) {
        if (x == 1 || x == -1) return x;
        throw std::domain_error("integer " + x.get_str() + " is not a unit");
    }
    static std::string to_string(const Integer& x) { return x.get_str(); }
};

template <>
struct coeff_traits<ModP> {
    static constexpr bool is_field = true;
    static ModP from_int(long long v) { return ModP(v); }
    static ModP from_rational(const ExactRational& x) {
        return ModP::from_integer(x.get_num()) / ModP::from_integer(x.get_den());
    }
    static bool is_zero(const ModP& x) { return x.value() == 0; }
    static bool is_one(const ModP& x) { return x.value() == 1; }
    static ModP inverse(const ModP& x) { return x.inverse(); }
    static std::string to_string(const ModP& x) { return std::to_string(x.value()); }
};

template <class T>
concept Coefficient = requires { coeff_traits<T>::is_field; };

template <class T>
concept FieldCoefficient = Coefficient<T> && coeff_traits<T>::is_field;

/// Exact mode: rationals where division happens, integers where every object is
/// integral by construction. Fast mode runs both over the active prime field.
struct ExactMode {
    using Field = ExactRational;
    using Integral = Integer;
    static constexpr bool is_fast = false;
};

struct FastMode {
    using Field = ModP;
    using Integral = ModP;
    static constexpr bool is_fast = true;
};

// ---------------------------------------------------------------------------
// 64-bit primality and prime sampling for fast mode.

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = detail::powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// A prime in [2^61 - 2^40, 2^61) drawn from `rng`.
template <class Rng>
std::uint64_t random_prime_near_2_61(Rng& rng) {
    constexpr std::uint64_t hi = std::uint64_t{1} << 61;
    constexpr std::uint64_t lo = hi - (std::uint64_t{1} << 40);
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
    for (;;) {
        std::uint64_t c = dist(rng) | 1;
        if (is_prime_u64(c)) return c;
    }
}

}  // namespace qsc
