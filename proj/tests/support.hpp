#pragma once

#include <random>

#include "qsc/polynomial.hpp"

namespace qsc::test {

using Q = ExactRational;
using P = DensePolynomial<Q>;
using L = LaurentPolynomial<Q>;
using R = RationalFunction<Q>;

inline P random_poly(std::mt19937_64& rng, int max_degree, int bound = 9) {
    std::uniform_int_distribution<int> deg(0, max_degree), c(-bound, bound);
    std::vector<Q> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = c(rng);
    return P(std::move(v));
}

/// Coefficientwise product, for checking fast paths against schoolbook.
inline P schoolbook(const P& a, const P& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Q> v(a.coefficients().size() + b.coefficients().size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        for (std::size_t j = 0; j < b.coefficients().size(); ++j) v[i + j] += a.coefficients()[i] * b.coefficients()[j];
    return P(std::move(v));
}

}  // namespace qsc::test
