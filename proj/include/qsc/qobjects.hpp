#pragma once

// q-shifted factorials and Gaussian binomials as exact Laurent objects.

#include <stdexcept>
#include <string>

#include "qsc/polynomial.hpp"

namespace qsc {

/// c * q^e with c != 0.
template <Coefficient T = ExactRational>
struct QMonomial {
    T coefficient = coeff_traits<T>::from_int(1);
    long exponent = 0;

    static QMonomial power(long e) { return {coeff_traits<T>::from_int(1), e}; }

    QMonomial times_q(long e) const { return {coefficient, exponent + e}; }
};

/// (x; q^step)_k for k >= 0 as a Laurent polynomial.
template <Coefficient T>
LaurentPolynomial<T> q_pochhammer_laurent(const QMonomial<T>& x, long step, long k) {
    if (step < 1) throw std::invalid_argument("q_pochhammer: step must be >= 1");
    if (k < 0) throw std::invalid_argument("q_pochhammer_laurent: negative length");
    auto r = LaurentPolynomial<T>::one();
    for (long j = 0; j < k; ++j) r.mul_binomial(x.coefficient, x.exponent + step * j);
    return r;
}

/// (x; q^step)_k for any integer k. Negative lengths follow
/// (x;q)_{-m} = 1 / prod_{j=1}^{m} (1 - x q^{-j}).
template <FieldCoefficient T>
RationalFunction<T> q_pochhammer(const QMonomial<T>& x, long step, long k) {
    if (step < 1) throw std::invalid_argument("q_pochhammer: step must be >= 1");
    if (k >= 0) return RationalFunction<T>(q_pochhammer_laurent(x, step, k));
    auto den = LaurentPolynomial<T>::one();
    for (long j = 1; j <= -k; ++j) {
        const long e = x.exponent - step * j;
        if (e == 0 && coeff_traits<T>::is_one(x.coefficient))
            throw degenerate_error("q_pochhammer: factor 1 - q^0 in negative-index denominator");
        den.mul_binomial(x.coefficient, e);
    }
    // den = q^m * body, so 1/den = q^{-m} / body
    return RationalFunction<T>(LaurentPolynomial<T>::monomial(coeff_traits<T>::from_int(1), -den.min_exponent()),
                               den.body());
}

/// (q;q)_n as a dense polynomial.
template <Coefficient T>
DensePolynomial<T> q_factorial(long n) {
    auto r = DensePolynomial<T>::one();
    for (long j = 1; j <= n; ++j) r.mul_binomial(coeff_traits<T>::from_int(1), static_cast<std::size_t>(j));
    return r;
}

/// Gaussian binomial [n k]_q; zero outside 0 <= k <= n.
template <Coefficient T = ExactRational>
DensePolynomial<T> q_binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("q_binomial: n must be nonnegative");
    if (k < 0 || k > n) return {};
    return divide_exact(q_factorial<T>(n), q_factorial<T>(k) * q_factorial<T>(n - k));
}

}  // namespace qsc
