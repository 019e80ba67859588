#pragma once

// The quotient ring F[q]/(M) for M = Phi_n^2 or [n]^2. Both moduli have
// constant term 1, so q is a unit and Laurent polynomials reduce directly.

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "qsc/cyclotomic.hpp"
#include "qsc/polynomial.hpp"

namespace qsc {

enum class ModulusKind { phi_squared, bracket_squared };

inline const char* to_string(ModulusKind k) {
    return k == ModulusKind::phi_squared ? "Phi_n^2" : "[n]^2";
}

template <FieldCoefficient T>
class RingElement;

namespace detail {

/// r/s with |r|, s <= sqrt(N/2) and r = s c (mod N), if one exists.
inline std::optional<ExactRational> rational_reconstruct(const Integer& c, const Integer& N) {
    Integer bound = sqrt(Integer(N / 2));
    Integer r0 = N, r1 = c, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = std::move(r1), r1 = std::move(r2);
        t0 = std::move(t1), t1 = std::move(t2);
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    Integer g = gcd(r1, t1);
    if (g != 1) return std::nullopt;
    return make_rational(r1, t1);
}

/// Inverse of a modulo the monic integral m: images modulo primes below 2^61,
/// Chinese remaindering, rational reconstruction, then an exact check of
/// a * u = 1 (mod m). Empty when a looks like a non-unit; the caller then
/// falls back to Euclid over Q, which reports the common factor.
inline std::optional<DensePolynomial<ExactRational>> multimodular_inverse(const DensePolynomial<ExactRational>& a,
                                                                          const DensePolynomial<ExactRational>& m) {
    using Q = DensePolynomial<ExactRational>;
    using Z = DensePolynomial<Integer>;
    Integer L = 1;
    for (const auto& c : a.coefficients()) L = lcm(L, Integer(c.get_den()));
    std::vector<Integer> ac, mc;
    for (const auto& c : a.coefficients()) ac.push_back(Integer(c * L));
    for (const auto& c : m.coefficients()) {
        if (c.get_den() != 1) return std::nullopt;
        mc.push_back(c.get_num());
    }
    const Z A(std::move(ac)), M(std::move(mc));
    const std::size_t deg = static_cast<std::size_t>(m.degree());

    std::vector<Integer> U(deg, 0);
    Integer N = 1;
    int good = 0, bad = 0;
    for (std::uint64_t p = (std::uint64_t{1} << 61) - 1; good < 4000; p -= 2) {
        if (!is_prime_u64(p)) continue;
        {
            PrimeFieldScope scope(p);
            const auto Ap = convert<ModP>(A), Mp = convert<ModP>(M);
            if (Ap.is_zero()) {
                if (++bad > 8 && good == 0) return std::nullopt;
                continue;
            }
            auto x = poly_xgcd(Ap, Mp);
            if (x.g.degree() != 0) {
                if (++bad > 8 && good == 0) return std::nullopt;
                continue;
            }
            auto s = poly_divrem(x.s, Mp).second.coefficients();
            s.resize(deg, ModP(0));
            // CRT: U + N * ((s - U) / N mod p)
            const ModP n_inv = ModP::from_integer(N).inverse();
            for (std::size_t i = 0; i < deg; ++i) {
                const ModP delta = (s[i] - ModP::from_integer(U[i])) * n_inv;
                U[i] += N * Integer(static_cast<unsigned long>(delta.value()));
            }
        }
        N *= Integer(static_cast<unsigned long>(p));
        ++good;

        std::vector<ExactRational> cand;
        cand.reserve(deg);
        for (const auto& u : U) {
            auto r = rational_reconstruct(u, N);
            if (!r) break;
            cand.push_back(std::move(*r));
        }
        if (cand.size() != deg) continue;
        Q inv(std::move(cand));
        if (poly_divrem(convert<ExactRational>(A) * inv, m).second == Q::one()) return inv * ExactRational(L);
    }
    return std::nullopt;
}

}  // namespace detail

template <FieldCoefficient T>
class ResidueRing : public std::enable_shared_from_this<ResidueRing<T>> {
public:
    using Dense = DensePolynomial<T>;
    using Laurent = LaurentPolynomial<T>;
    using Element = RingElement<T>;

    static std::shared_ptr<const ResidueRing> make(long n, ModulusKind kind) {
        if (n < 2) throw invalid_ring("residue ring requires n >= 2, got n = " + std::to_string(n));
        Dense base = kind == ModulusKind::phi_squared ? cyclotomic<T>(n) : q_integer<T>(n);
        auto ring = std::shared_ptr<ResidueRing>(new ResidueRing(n, kind, base * base));
        // M = 1 + q M1  =>  q * (-M1) = 1 (mod M)
        const auto& mc = ring->modulus_.coefficients();
        ring->q_inverse_ = -Dense(std::vector<T>(mc.begin() + 1, mc.end()));
        if (!(ring->reduce_dense(Dense{0, 1} * ring->q_inverse_) == Dense::one()))
            throw std::logic_error("q is not a unit modulo " + ring->modulus_.to_string());
        return ring;
    }

    long n() const { return n_; }
    ModulusKind kind() const { return kind_; }
    const Dense& modulus() const { return modulus_; }

    Element zero() const { return Element(this->shared_from_this(), Dense{}); }
    Element one() const { return Element(this->shared_from_this(), Dense::one()); }
    Element constant(const T& c) const { return Element(this->shared_from_this(), Dense::constant(c)); }
    Element q_inverse() const { return Element(this->shared_from_this(), q_inverse_); }

    Element reduce(const Dense& f) const { return Element(this->shared_from_this(), reduce_dense(f)); }

    Element reduce(const Laurent& f) const {
        if (f.is_zero()) return zero();
        return reduce(f.body()) * pow_q(f.min_exponent());
    }

    /// Class of q^e by square-and-multiply; negative e uses the cached inverse.
    Element pow_q(long e) const {
        Element base = e >= 0 ? Element(this->shared_from_this(), reduce_dense(Dense{0, 1})) : q_inverse();
        unsigned long m = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        Element acc = one();
        while (m) {
            if (m & 1) acc = acc * base;
            base = base * base;
            m >>= 1;
        }
        return acc;
    }

    Dense reduce_dense(const Dense& f) const {
        if (f.degree() < modulus_.degree()) return f;
        return poly_divrem(f, modulus_).second;
    }

private:
    ResidueRing(long n, ModulusKind kind, Dense modulus) : n_(n), kind_(kind), modulus_(std::move(modulus)) {}

    long n_;
    ModulusKind kind_;
    Dense modulus_;
    Dense q_inverse_;
};

template <FieldCoefficient T>
class RingElement {
public:
    using Ring = ResidueRing<T>;
    using Dense = DensePolynomial<T>;

    RingElement(std::shared_ptr<const Ring> ring, Dense rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

    const Ring& ring() const { return *ring_; }
    const Dense& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        return RingElement(a.ring_, a.rep_ + b.rep_);
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        return RingElement(a.ring_, a.rep_ - b.rep_);
    }
    RingElement operator-() const { return RingElement(ring_, -rep_); }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        return RingElement(a.ring_, a.ring_->reduce_dense(a.rep_ * b.rep_));
    }
    friend RingElement operator*(const RingElement& a, const T& s) { return RingElement(a.ring_, a.rep_ * s); }
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    friend bool operator==(const RingElement& a, const RingElement& b) { return a.rep_ == b.rep_; }

    /// Inverse by extended Euclid; throws non_unit_error carrying gcd(rep, M).
    RingElement inverse() const {
        if (rep_.is_zero()) throw non_unit_error("zero is not a unit", "M");
        if constexpr (std::is_same_v<T, ExactRational>) {
            if (auto u = detail::multimodular_inverse(rep_, ring_->modulus())) return RingElement(ring_, std::move(*u));
        }
        auto x = poly_xgcd(rep_, ring_->modulus());
        if (x.g.degree() != 0)
            throw non_unit_error("element shares a factor with the modulus", x.g.to_string());
        return RingElement(ring_, ring_->reduce_dense(x.s));
    }

    std::string to_string() const { return rep_.to_string(); }

private:
    std::shared_ptr<const Ring> ring_;
    Dense rep_;
};

template <FieldCoefficient T>
RingElement<T> ring_reduce(const ResidueRing<T>& ring, const LaurentPolynomial<T>& f) {
    return ring.reduce(f);
}

template <FieldCoefficient T>
RingElement<T> ring_invert(const RingElement<T>& x) {
    return x.inverse();
}

template <FieldCoefficient T>
RingElement<T> ring_pow_q(const ResidueRing<T>& ring, long e) {
    return ring.pow_q(e);
}

}  // namespace qsc
