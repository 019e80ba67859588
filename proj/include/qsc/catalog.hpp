#pragma once

// Registry of every check by id: parameter names, a one-line statement, and
// dispatch to exact or prime-field arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsc/check_result.hpp"
#include "qsc/identities.hpp"
#include "qsc/padic.hpp"
#include "qsc/parametric.hpp"
#include "qsc/theorems.hpp"

namespace qsc {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunOptions {
    bool fast_mode = false;
    std::uint64_t seed = 42;
    long trials = 5;
    Mutation mutation = Mutation::none;
};

using CheckBody = std::function<Outcome(const Params&, const RunOptions&)>;

struct CheckInfo {
    std::string id;
    std::string statement;
    std::vector<std::string> required, optional;
    CheckBody exact;
    CheckBody fast;  // empty when the check does no polynomial arithmetic
};

inline std::int64_t int_param(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw usage_error("missing parameter --" + name);
    if (const auto* v = std::get_if<std::int64_t>(&it->second)) return *v;
    throw usage_error("parameter " + name + " must be an integer");
}

inline std::optional<std::int64_t> opt_param(const Params& p, const std::string& name) {
    if (!p.count(name)) return std::nullopt;
    return int_param(p, name);
}

inline std::vector<std::int64_t> list_param(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw usage_error("missing parameter --" + name);
    if (const auto* v = std::get_if<std::vector<std::int64_t>>(&it->second)) return *v;
    return {std::get<std::int64_t>(it->second)};
}

namespace detail {

/// Wraps a generic body `(auto mode, params, options)` into exact and fast variants.
template <class Body>
CheckInfo polynomial_check(std::string id, std::string statement, std::vector<std::string> required,
                           std::vector<std::string> optional, Body body) {
    return {std::move(id), std::move(statement), std::move(required), std::move(optional),
            [body](const Params& p, const RunOptions& o) { return body(ExactMode{}, p, o); },
            [body](const Params& p, const RunOptions& o) { return body(FastMode{}, p, o); }};
}

inline CheckInfo exact_check(std::string id, std::string statement, std::vector<std::string> required,
                             std::vector<std::string> optional, CheckBody body) {
    return {std::move(id), std::move(statement), std::move(required), std::move(optional), std::move(body), {}};
}

inline std::vector<CheckInfo> build_catalog() {
    std::vector<CheckInfo> c;
    const auto theorem = [&](TheoremId id, std::string statement) {
        std::vector<std::string> req = uses_r(id) ? std::vector<std::string>{"d", "r", "n"} : std::vector<std::string>{"d", "n"};
        c.push_back(polynomial_check(to_string(id), std::move(statement), req, {}, [id](auto mode, const Params& p, const RunOptions& o) {
            const long r = uses_r(id) ? int_param(p, "r") : 1;
            return verify_theorem<decltype(mode)>(id, int_param(p, "d"), r, int_param(p, "n"), o.mutation);
        }));
    };
    theorem(TheoremId::eq13, "sum (q^{d-1};q^d)_k^d q^{dk}/(q^d;q^d)_k^d mod Phi_n^2, n = 1 (mod d)");
    theorem(TheoremId::eq14, "mixed sum (q^{d+1})^{d-1}(q^{1-d}), odd d >= 3, n = -1 (mod d), n >= 2d-1");
    theorem(TheoremId::eq15, "squared sum (q^{d+1})^{d-2}(q)^2, even d >= 4, n = -1 (mod d)");
    theorem(TheoremId::thm11, "mixed sum (q^{d+1})^{d-1}(q^{1-d}), even d >= 4, n = -1 (mod d), n >= 2d-1");
    theorem(TheoremId::thm12, "squared sum (q^{d+1})^{d-2}(q)^2, odd d >= 3, n = -1 (mod d)");
    theorem(TheoremId::lemma21, "(q^{d+r})^{d-r-1}(q^r)^r(q^{r-d}) sum vanishes mod Phi_n^2, d >= 3+r, n = -r (mod d)");
    theorem(TheoremId::thm41, "(q^{d+r})^{d-r}(q^r)^{r-1}(q^{r-d}) sum, exponent A(d,n,r); also d = 2, 3 at r = 1");
    theorem(TheoremId::thm42, "(q^{d+r})^{d-r-1}(q^r)^{r+1} sum, exponent A(d,n,r) - r, d > r, n = -r (mod d)");

    c.push_back(polynomial_check("small_d_vanishing", "(q, q^{1-d}) sum vanishes mod Phi_n^2 for d = 2, 3", {"d", "n"}, {},
                                 [](auto mode, const Params& p, const RunOptions&) {
                                     return verify_small_d_vanishing<decltype(mode)>(int_param(p, "d"), int_param(p, "n"));
                                 }));
    c.push_back(polynomial_check("divisibility", "(q^d;q^d)_{n-1}^d/(1-q)^{dn-d} times the (q, q^{1-d}) sum is 0 mod [n]^2",
                                 {"d", "n"}, {}, [](auto mode, const Params& p, const RunOptions&) {
                                     return verify_divisibility<decltype(mode)>(int_param(p, "d"), int_param(p, "n"));
                                 }));

    static const char* parametric_statements[] = {
        "family with parameter a, d+r odd, equality at a = q^{+-n}",
        "family with parameter a, d and r odd",
        "squared family with parameter a, odd d > 3, r = 1",
        "squared family with parameter a, d = 3",
        "two-parameter family, d+r odd, d-r >= 3, closed form B_q",
        "two-parameter family, d-r = 1, closed form B_q",
        "two-parameter family, d and r odd, d-r >= 4, closed form C_q",
        "two-parameter family, d and r odd, d-r = 2, closed form C_q"};
    for (ParametricId id : all_parametric)
        c.push_back(polynomial_check(to_string(id), parametric_statements[static_cast<int>(id)], {"d", "r", "n"}, {},
                                     [id](auto mode, const Params& p, const RunOptions& o) {
                                         return verify_parametric<decltype(mode)>(id, int_param(p, "d"), int_param(p, "r"),
                                                                                  int_param(p, "n"), o.mutation);
                                     }));

    c.push_back(exact_check("km", "terminating summation with integer parameter shifts at seeded random rational points", {"m", "n_list"}, {},
                            [](const Params& p, const RunOptions& o) {
                                return verify_shifted_summation(int_param(p, "m"), list_param(p, "n_list"), o.trials, o.seed);
                            }));
    c.push_back(polynomial_check("qbinom_vanishing", "sum (-1)^k [n k] q^{C(n-k,2)+jk} = 0 for 0 <= j <= n-1", {"n"}, {"j"},
                                 [](auto mode, const Params& p, const RunOptions&) {
                                     auto j = opt_param(p, "j");
                                     return verify_qbinomial_vanishing<decltype(mode)>(
                                         int_param(p, "n"), j ? std::optional<long>(*j) : std::nullopt);
                                 }));

    struct StepDoc {
        ProofStep step;
        const char* statement;
        std::vector<std::string> params;
    };
    const std::vector<StepDoc> steps = {
        {ProofStep::ratio_shift_generic, "(yq^{n+r};q^d)_k/(y;q^d)_k = (yq^{dk};q^d)_m/(y;q^d)_m off the central band", {"d", "r", "n", "j", "k"}},
        {ProofStep::ratio_shift_central, "the same ratio with lengths k-2 and m-2 inside the central band", {"d", "r", "n", "j", "k"}},
        {ProofStep::qbinom_rewrite, "(q^{d+r-(d-1)n};q^d)_k q^{dk}/(q^d;q^d)_k as a signed q^d-binomial", {"d", "r", "n", "k"}},
        {ProofStep::exponent_identity, "d C(k,2) + (n+2d+r-dn) k = d C(N-k,2) - d C(N,2)", {"d", "r", "n", "k"}},
        {ProofStep::sum_decomposition, "mixed sum = [d] (q, q^{1-d}) sum - q [d-1] squared sum", {"d", "n"}},
        {ProofStep::sum_decomposition_r, "[r] (q^{d+r})^{d-r}(q^r)^{r-1}(q^{r-d}) sum = [d] vanishing sum - q^r [d-r] (q^{d+r})^{d-r-1}(q^r)^{r+1} sum", {"d", "r", "n"}},
        {ProofStep::pochhammer_split_r1, "(q^{d+1}, q^{1-d}; q^d)_k = -q [d-1] (1 + (1-q^d)/(q^d-q^{dk+1})) (q;q^d)_k^2", {"d", "k"}},
        {ProofStep::pochhammer_split_general, "(q^{d+r}, q^{r-d}; q^d)_k = -q^r [d-r]/[r] (1 + ...) (q^r;q^d)_k^2", {"d", "r", "k"}},
        {ProofStep::lemma_reduction, "(q^r)_k^r (q^{r-d})_k = (1-q^{r-d})(1-q^r)^{r+1} (q^{d+r})_{k-2}^{r+1} (1-q^{dk-d+r})^r", {"d", "r", "k"}},
        {ProofStep::prefactor_divisibility, "prod_{m<n} [md]^d = 0 mod prod_{1<m<n, m|n} Phi_m^2", {"d", "n"}},
        {ProofStep::bracket_factorization, "[n] = Phi_n prod_{1<m<n, m|n} Phi_m", {"n"}}};
    for (const auto& s : steps) {
        c.push_back(polynomial_check(to_string(s.step), s.statement, s.params, {},
                                     [step = s.step, names = s.params](auto mode, const Params& p, const RunOptions&) {
                                         StepArgs a;
                                         for (const auto& name : names) {
                                             const long v = int_param(p, name);
                                             if (name == "d") a.d = v;
                                             if (name == "r") a.r = v;
                                             if (name == "n") a.n = v;
                                             if (name == "j") a.j = v;
                                             if (name == "k") a.k = v;
                                         }
                                         return verify_proof_step<decltype(mode)>(step, a);
                                     }));
    }

    const std::vector<std::pair<ClassicalId, std::vector<std::string>>> classical = {
        {ClassicalId::rv_11, {"p"}},          {ClassicalId::deines_12, {"d", "p"}},
        {ClassicalId::cor41_i, {"d", "r", "p"}}, {ClassicalId::cor41_ii, {"d", "r", "p"}},
        {ClassicalId::gamma_factorial, {"d", "r", "p"}}, {ClassicalId::wlt_integrality, {"d", "n"}}};
    static const char* classical_statements[] = {
        "sum (1/2)_k^2/k!^2 = (-1)^{(p-1)/2} mod p^2",
        "sum ((d-1)/d)_k^d/k!^d = -Gamma_p(1/d)^d mod p^2, p = 1 (mod d)",
        "q = 1 image of the (q^{d+r})^{d-r}(q^r)^{r-1}(q^{r-d}) sum: (d-r)/d (r/d)^r Gamma_p(-r/d)^d mod p^2",
        "q = 1 image of the (q^{d+r})^{d-r-1}(q^r)^{r+1} sum: -(r/d)^{r+1} Gamma_p(-r/d)^d mod p^2",
        "(p-1-m)!/m!^{d-1} = -(-1)^m Gamma_p(-r/d)^d mod p^2, m = (p+r)/d",
        "(n-1)!^d d^{dn-d} n^{-2} sum ((d+1)/d)_k^{d-2} (1/d)_k ((1-d)/d)_k / k!^d is an integer"};
    for (const auto& [id, names] : classical) {
        c.push_back(exact_check(to_string(id), classical_statements[static_cast<int>(id)], names, {}, [id = id, names = names](const Params& p, const RunOptions&) {
            ClassicalArgs a;
            for (const auto& name : names) {
                const auto v = int_param(p, name);
                if (name == "d") a.d = v;
                if (name == "r") a.r = v;
                if (name == "n") a.n = v;
                if (name == "p") a.p = v;
            }
            return verify_classical(id, a);
        }));
    }

    c.push_back(polynomial_check("r1_collapse", "r = 1 closed forms and summands of the r-families equal the mixed and squared sums", {"d", "n"}, {},
                                 [](auto mode, const Params& p, const RunOptions&) {
                                     return verify_r1_collapse<decltype(mode)>(int_param(p, "d"), int_param(p, "n"));
                                 }));
    c.push_back(exact_check("q1_shadow", "r-family summands at q = 1 and n = p, summed mod p^2, equal the p-adic sums", {"d", "r", "p"}, {},
                            [](const Params& p, const RunOptions&) {
                                return verify_q1_shadow(int_param(p, "d"), int_param(p, "r"), int_param(p, "p"));
                            }));
    c.push_back(polynomial_check("lhs_oracle", "incremental ring sum equals the one-shot fraction (family = 1..7)",
                                 {"family", "d", "r", "n"}, {}, [](auto mode, const Params& p, const RunOptions&) {
                                     const long f = int_param(p, "family");
                                     if (f < 1 || f > 7) return Outcome::skipped("family must be 1..7");
                                     return verify_lhs_oracle<decltype(mode)>(static_cast<SumFamily>(f - 1), int_param(p, "d"),
                                                                              int_param(p, "r"), int_param(p, "n"));
                                 }));
    std::sort(c.begin(), c.end(), [](const CheckInfo& a, const CheckInfo& b) { return a.id < b.id; });
    return c;
}

}  // namespace detail

inline const std::vector<CheckInfo>& catalog() {
    static const std::vector<CheckInfo> c = detail::build_catalog();
    return c;
}

inline const CheckInfo& find_check(const std::string& id) {
    for (const auto& c : catalog())
        if (c.id == id) return c;
    throw usage_error("unknown check id '" + id + "'");
}

/// Throws usage_error on missing or unknown parameter names.
inline void validate_params(const CheckInfo& c, const Params& p) {
    for (const auto& name : c.required)
        if (!p.count(name)) throw usage_error(c.id + ": missing parameter " + name);
    for (const auto& [name, v] : p) {
        const bool known = std::find(c.required.begin(), c.required.end(), name) != c.required.end() ||
                           std::find(c.optional.begin(), c.optional.end(), name) != c.optional.end();
        if (!known) throw usage_error(c.id + ": unexpected parameter " + name);
    }
}

/// Two primes in [2^61 - 2^40, 2^61) derived from the seed.
inline std::pair<std::uint64_t, std::uint64_t> fast_mode_primes(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto p1 = random_prime_near_2_61(rng);
    auto p2 = random_prime_near_2_61(rng);
    while (p2 == p1) p2 = random_prime_near_2_61(rng);
    return {p1, p2};
}

/// Runs one instance. In fast mode a polynomial check runs once per prime and
/// the two statuses must agree.
inline CheckResult run_instance(const CheckInfo& c, const Params& p, const RunOptions& o) {
    return run_check(c.id, p, [&]() -> Outcome {
        if (!o.fast_mode || !c.fast) return c.exact(p, o);
        const auto [p1, p2] = fast_mode_primes(o.seed);
        auto under = [&](std::uint64_t prime) {
            PrimeFieldScope scope(prime);
            try {
                return c.fast(p, o);
            } catch (const std::exception& e) {
                return Outcome::fails(std::string("error: ") + e.what());
            }
        };
        Outcome a = under(p1), b = under(p2);
        const std::string primes = "mod " + std::to_string(p1) + " and " + std::to_string(p2);
        if (a.status != b.status)
            return Outcome::fails(std::string("statuses differ ") + primes + ": " + to_string(a.status) + " vs " +
                                  to_string(b.status));
        if (a.status == Status::fails) a.witness = *a.witness + " (" + primes + ")";
        a.note = a.note ? *a.note + "; " + primes : primes;
        return a;
    });
}

inline CheckResult run_instance(const std::string& id, const Params& p, const RunOptions& o = {}) {
    const auto& c = find_check(id);
    validate_params(c, p);
    return run_instance(c, p, o);
}

}  // namespace qsc
