#pragma once

// Univariate polynomials in q: dense, Laurent (dense body plus a tight minimum
// exponent) and rational functions with a monic denominator.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/scalar.hpp"

namespace qsc {

template <Coefficient T>
class DensePolynomial {
public:
    using traits = coeff_traits<T>;

    DensePolynomial() = default;
    explicit DensePolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePolynomial(std::initializer_list<long long> coeffs) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.push_back(traits::from_int(v));
        trim();
    }

    static DensePolynomial constant(const T& c) { return DensePolynomial(std::vector<T>{c}); }
    static DensePolynomial one() { return constant(traits::from_int(1)); }
    static DensePolynomial monomial(const T& c, std::size_t e) {
        std::vector<T> v(e + 1, traits::from_int(0));
        v[e] = c;
        return DensePolynomial(std::move(v));
    }
    /// q^e - 1
    static DensePolynomial q_power_minus_one(std::size_t e) {
        std::vector<T> v(e + 1, traits::from_int(0));
        v[e] = traits::from_int(1);
        v[0] = v[0] - traits::from_int(1);
        return DensePolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coefficients() const { return c_; }
    T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : traits::from_int(0); }
    const T& leading() const { return c_.back(); }

    T eval(const T& x) const {
        T acc = traits::from_int(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Multiplies by q^e.
    DensePolynomial shifted(std::size_t e) const {
        if (is_zero() || e == 0) return *this;
        std::vector<T> v(e, traits::from_int(0));
        v.insert(v.end(), c_.begin(), c_.end());
        DensePolynomial r;
        r.c_ = std::move(v);
        return r;
    }

    /// In-place multiplication by (1 - c q^e), e >= 1.
    DensePolynomial& mul_binomial(const T& c, std::size_t e) {
        if (is_zero() || traits::is_zero(c)) return *this;
        if (e == 0) return *this *= DensePolynomial::constant(traits::from_int(1) - c);
        const std::size_t n = c_.size();
        c_.resize(n + e, traits::from_int(0));
        const bool unit = traits::is_one(c);
        for (std::size_t i = n + e; i-- > e;) {
            if (unit)
                c_[i] -= c_[i - e];
            else
                c_[i] -= c * c_[i - e];
        }
        trim();
        return *this;
    }

    /// f(q^s)
    DensePolynomial substitute_power(std::size_t s) const {
        if (is_zero() || s == 1) return *this;
        std::vector<T> v(static_cast<std::size_t>(degree()) * s + 1, traits::from_int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i * s] = c_[i];
        return DensePolynomial(std::move(v));
    }

    DensePolynomial monic() const {
        if (is_zero()) return *this;
        return *this * traits::inverse(leading());
    }

    DensePolynomial operator-() const {
        DensePolynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    DensePolynomial& operator+=(const DensePolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::from_int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    DensePolynomial& operator-=(const DensePolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), traits::from_int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    DensePolynomial& operator*=(const DensePolynomial& o) { return *this = *this * o; }
    DensePolynomial& operator*=(const T& s) {
        if (traits::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }

    friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
    friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
    friend DensePolynomial operator*(DensePolynomial a, const T& s) { return a *= s; }
    friend DensePolynomial operator*(const T& s, DensePolynomial a) { return a *= s; }
    friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, traits::from_int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (traits::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePolynomial(std::move(v));
    }
    friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) { return a.c_ == b.c_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (traits::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << traits::to_string(c_[i]) << ")";
            if (i > 0) os << "*q^" << i;
        }
        return os.str();
    }

private:
    template <Coefficient U>
    friend class LaurentPolynomial;

    void trim() {
        while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Quotient and remainder; the divisor's leading coefficient must be a unit of T.
template <Coefficient T>
std::pair<DensePolynomial<T>, DensePolynomial<T>> poly_divrem(const DensePolynomial<T>& a,
                                                              const DensePolynomial<T>& b) {
    using traits = coeff_traits<T>;
    if (b.is_zero()) throw division_by_zero_polynomial();
    if (a.degree() < b.degree()) return {DensePolynomial<T>{}, a};
    const T inv_lead = traits::inverse(b.leading());
    const bool monic = traits::is_one(b.leading());
    std::vector<T> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    // cyclotomic divisors are sparse with coefficients mostly +-1
    const T minus_one = traits::from_int(-1);
    std::vector<std::size_t> plus, minus, other;
    for (std::size_t j = 0; j < db; ++j) {
        if (traits::is_zero(bc[j])) continue;
        if (traits::is_one(bc[j])) plus.push_back(j);
        else if (bc[j] == minus_one) minus.push_back(j);
        else other.push_back(j);
    }
    std::vector<T> quot(rem.size() - db, traits::from_int(0));
    for (std::size_t i = rem.size(); i-- > db;) {
        if (traits::is_zero(rem[i])) continue;
        T f = monic ? rem[i] : rem[i] * inv_lead;
        const std::size_t shift = i - db;
        for (std::size_t j : plus) rem[shift + j] -= f;
        for (std::size_t j : minus) rem[shift + j] += f;
        for (std::size_t j : other) rem[shift + j] -= f * bc[j];
        rem[i] = traits::from_int(0);
        quot[shift] = std::move(f);
    }
    rem.resize(db);
    return {DensePolynomial<T>(std::move(quot)), DensePolynomial<T>(std::move(rem))};
}

/// Exact division; throws if b does not divide a.
template <Coefficient T>
DensePolynomial<T> divide_exact(const DensePolynomial<T>& a, const DensePolynomial<T>& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

template <FieldCoefficient T>
struct XgcdResult {
    DensePolynomial<T> g, s, t;
};

/// g = s*a + t*b with g monic and g = gcd(a, b).
template <FieldCoefficient T>
XgcdResult<T> poly_xgcd(const DensePolynomial<T>& a, const DensePolynomial<T>& b) {
    using P = DensePolynomial<T>;
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("xgcd of two zero polynomials");
    P r0 = a, r1 = b, s0 = P::one(), s1{}, t0{}, t1 = P::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        P s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        P t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const T inv = coeff_traits<T>::inverse(r0.leading());
    return {r0 * inv, s0 * inv, t0 * inv};
}

template <FieldCoefficient T>
DensePolynomial<T> poly_gcd(const DensePolynomial<T>& a, const DensePolynomial<T>& b) {
    if (a.is_zero() && b.is_zero()) return {};
    DensePolynomial<T> r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto r = poly_divrem(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.monic();
}

template <Coefficient To, Coefficient From>
DensePolynomial<To> convert(const DensePolynomial<From>& p) {
    if constexpr (std::is_same_v<To, From>) {
        return p;
    } else {
        std::vector<To> v;
        v.reserve(p.coefficients().size());
        for (const auto& c : p.coefficients()) {
            if constexpr (std::is_same_v<From, Integer> && std::is_same_v<To, ModP>)
                v.push_back(ModP::from_integer(c));
            else if constexpr (std::is_same_v<From, Integer>)
                v.push_back(To(c));
            else
                v.push_back(coeff_traits<To>::from_rational(ExactRational(c)));
        }
        return DensePolynomial<To>(std::move(v));
    }
}

// ---------------------------------------------------------------------------

template <Coefficient T>
class LaurentPolynomial {
public:
    using traits = coeff_traits<T>;
    using Dense = DensePolynomial<T>;

    LaurentPolynomial() = default;
    LaurentPolynomial(Dense body, long min_exponent = 0)  // NOLINT(implicit)
        : body_(std::move(body)), min_(min_exponent) {
        normalize();
    }

    static LaurentPolynomial one() { return LaurentPolynomial(Dense::one()); }
    static LaurentPolynomial monomial(const T& c, long e) {
        return LaurentPolynomial(Dense::constant(c), e);
    }
    /// 1 - c q^e
    static LaurentPolynomial binomial(const T& c, long e) {
        LaurentPolynomial r = one();
        r.mul_binomial(c, e);
        return r;
    }

    bool is_zero() const { return body_.is_zero(); }
    const Dense& body() const { return body_; }
    long min_exponent() const { return min_; }
    long max_exponent() const { return min_ + body_.degree(); }
    T coefficient(long e) const {
        return e < min_ ? traits::from_int(0) : body_.coefficient(static_cast<std::size_t>(e - min_));
    }

    /// Multiplies by c q^e.
    LaurentPolynomial& mul_monomial(const T& c, long e) {
        if (is_zero()) return *this;
        body_ *= c;
        min_ += e;
        normalize();
        return *this;
    }
    LaurentPolynomial& shift(long e) {
        if (!is_zero()) min_ += e;
        return *this;
    }

    /// In-place multiplication by (1 - c q^e) for any integer e.
    LaurentPolynomial& mul_binomial(const T& c, long e) {
        if (is_zero() || traits::is_zero(c)) return *this;
        if (e >= 0) {
            body_.mul_binomial(c, static_cast<std::size_t>(e));
            normalize();
            return *this;
        }
        // f (1 - c q^e) = q^e (q^{-e} f - c f)
        const std::size_t s = static_cast<std::size_t>(-e);
        const auto& b = body_.c_;
        std::vector<T> v(b.size() + s, traits::from_int(0));
        for (std::size_t i = 0; i < b.size(); ++i) v[i + s] = b[i];
        const bool unit = traits::is_one(c);
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (unit)
                v[i] -= b[i];
            else
                v[i] -= c * b[i];
        }
        body_ = Dense(std::move(v));
        min_ += e;
        normalize();
        return *this;
    }

    LaurentPolynomial operator-() const { return LaurentPolynomial(-body_, min_); }
    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long m = std::min(a.min_, b.min_);
        Dense r = a.body_.shifted(static_cast<std::size_t>(a.min_ - m));
        r += b.body_.shifted(static_cast<std::size_t>(b.min_ - m));
        return LaurentPolynomial(std::move(r), m);
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a + (-b);
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return LaurentPolynomial(a.body_ * b.body_, a.min_ + b.min_);
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const T& s) {
        return LaurentPolynomial(a.body_ * s, a.min_);
    }
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.min_ == b.min_ && a.body_ == b.body_;
    }

    /// Requires min_exponent() >= 0.
    Dense to_dense() const {
        if (min_ < 0) throw std::domain_error("Laurent polynomial has negative powers");
        return body_.shifted(static_cast<std::size_t>(min_));
    }

    /// f(q^s) for s >= 1.
    LaurentPolynomial substitute_power(long s) const {
        return LaurentPolynomial(body_.substitute_power(static_cast<std::size_t>(s)), min_ * s);
    }

    T eval(const T& x) const {
        if (traits::is_zero(x)) {
            if (min_ < 0 && !is_zero()) throw zero_base_error();
            return min_ == 0 ? body_.coefficient(0) : traits::from_int(0);
        }
        T v = body_.eval(x);
        if (min_ >= 0) return v * pow_int(x, static_cast<unsigned long>(min_));
        return v * traits::inverse(pow_int(x, static_cast<unsigned long>(-min_)));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        const auto& b = body_.coefficients();
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (traits::is_zero(b[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << traits::to_string(b[i]) << ")";
            const long e = min_ + static_cast<long>(i);
            if (e != 0) os << "*q^" << e;
        }
        return os.str();
    }

private:
    static T pow_int(T x, unsigned long e) {
        T acc = traits::from_int(1);
        while (e) {
            if (e & 1) acc = acc * x;
            x = x * x;
            e >>= 1;
        }
        return acc;
    }

    void normalize() {
        if (body_.is_zero()) {
            min_ = 0;
            return;
        }
        auto& b = body_.c_;
        std::size_t z = 0;
        while (traits::is_zero(b[z])) ++z;
        if (z > 0) {
            b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(z));
            min_ += static_cast<long>(z);
        }
    }

    Dense body_;
    long min_ = 0;
};

template <Coefficient To, Coefficient From>
LaurentPolynomial<To> convert(const LaurentPolynomial<From>& p) {
    return LaurentPolynomial<To>(convert<To>(p.body()), p.min_exponent());
}

// ---------------------------------------------------------------------------

/// numerator / denominator with the denominator monic, prime to q and coprime
/// to the numerator body.
template <FieldCoefficient T>
class RationalFunction {
public:
    using traits = coeff_traits<T>;
    using Dense = DensePolynomial<T>;
    using Laurent = LaurentPolynomial<T>;

    RationalFunction() : den_(Dense::one()) {}
    RationalFunction(Laurent num) : num_(std::move(num)), den_(Dense::one()) {}  // NOLINT(implicit)
    RationalFunction(Laurent num, Dense den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero_polynomial();
        normalize();
    }

    const Laurent& numerator() const { return num_; }
    const Dense& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * Laurent(b.den_) + b.num_ * Laurent(a.den_), a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw division_by_zero_polynomial();
        // b = q^m B / D with B(0) != 0, so 1/b = q^{-m} D / B
        return a * RationalFunction(Laurent(b.den_, -b.num_.min_exponent()), b.num_.body());
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    T eval(const T& x) const {
        T d = den_.eval(x);
        if (traits::is_zero(d)) throw pole_error("denominator vanishes at evaluation point");
        return num_.eval(x) * traits::inverse(d);
    }

    std::string to_string() const {
        if (is_laurent()) return num_.to_string();
        return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Dense::one();
            return;
        }
        // Move powers of q out of the denominator.
        const auto& dc = den_.coefficients();
        std::size_t z = 0;
        while (traits::is_zero(dc[z])) ++z;
        if (z > 0) {
            den_ = Dense(std::vector<T>(dc.begin() + static_cast<std::ptrdiff_t>(z), dc.end()));
            num_.shift(-static_cast<long>(z));
        }
        Dense g = poly_gcd(num_.body(), den_);
        if (g.degree() > 0) {
            num_ = Laurent(divide_exact(num_.body(), g), num_.min_exponent());
            den_ = divide_exact(den_, g);
        }
        const T lead_inv = traits::inverse(den_.leading());
        den_ = den_ * lead_inv;
        num_ = num_ * lead_inv;
    }

    Laurent num_;
    Dense den_;
};

template <FieldCoefficient T>
T eval_at_rational(const LaurentPolynomial<T>& f, const T& x) {
    return f.eval(x);
}

template <FieldCoefficient T>
T eval_at_rational(const RationalFunction<T>& f, const T& x) {
    return f.eval(x);
}

}  // namespace qsc
