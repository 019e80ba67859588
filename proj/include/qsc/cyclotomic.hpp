#pragma once

// Cyclotomic polynomials, q-integers and the arithmetic functions behind them.

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsc/polynomial.hpp"

namespace qsc {

/// (prime, multiplicity) pairs by trial division.
inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline int mobius(long n) {
    if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
    int s = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

inline std::vector<long> divisors(long n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> lo, hi;
    for (long m = 1; m * m <= n; ++m) {
        if (n % m) continue;
        lo.push_back(m);
        if (m != n / m) hi.push_back(n / m);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Append-only map n -> Phi_n over the integers. Reads take a shared lock;
/// insertion checks prod_{m|n} Phi_m = q^n - 1 before publishing.
class CyclotomicCache {
public:
    using Poly = DensePolynomial<Integer>;

    static CyclotomicCache& global() {
        static CyclotomicCache cache;
        return cache;
    }

    Poly get(long n) {
        if (n <= 0) throw std::invalid_argument("cyclotomic: n must be positive");
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(n); it != table_.end()) return it->second;
        }
        // Divisors first so the insertion check only reads the table.
        for (long m : divisors(n))
            if (m != n) get(m);
        Poly phi = mobius_product(n);
        Poly prod = phi;
        {
            std::shared_lock lock(mutex_);
            for (long m : divisors(n))
                if (m != n) prod *= table_.at(m);
        }
        if (!(prod == Poly::q_power_minus_one(static_cast<std::size_t>(n))) ||
            phi.degree() != euler_phi(n))
            throw std::logic_error("cyclotomic cache invariant violated at n = " + std::to_string(n));
        std::unique_lock lock(mutex_);
        return table_.emplace(n, std::move(phi)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    /// prod_{m | n} (q^{n/m} - 1)^{mu(m)}, negative factors removed by exact division.
    static Poly mobius_product(long n) {
        Poly num = Poly::one(), den = Poly::one();
        for (long m : divisors(n)) {
            const int mu = mobius(m);
            if (mu == 1) num *= Poly::q_power_minus_one(static_cast<std::size_t>(n / m));
            if (mu == -1) den *= Poly::q_power_minus_one(static_cast<std::size_t>(n / m));
        }
        Poly phi = divide_exact(num, den);
        return phi;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<long, Poly> table_;
};

template <Coefficient T = ExactRational>
DensePolynomial<T> cyclotomic(long n) {
    return convert<T>(CyclotomicCache::global().get(n));
}

/// [n] = 1 + q + ... + q^{n-1}
template <Coefficient T = ExactRational>
DensePolynomial<T> q_integer(long n) {
    if (n <= 0) throw std::invalid_argument("q_integer: n must be positive");
    return DensePolynomial<T>(std::vector<T>(static_cast<std::size_t>(n), coeff_traits<T>::from_int(1)));
}

}  // namespace qsc
