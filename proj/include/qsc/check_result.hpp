#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/polynomial.hpp"
#include "qsc/scalar.hpp"

namespace qsc {

enum class Status { holds, fails, skipped_precondition };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::holds: return "HOLDS";
        case Status::fails: return "FAILS";
        case Status::skipped_precondition: return "SKIPPED_PRECONDITION";
    }
    return "?";
}

using ParamValue = std::variant<std::int64_t, std::vector<std::int64_t>>;
using Params = std::map<std::string, ParamValue>;

/// "d=3;n=5", lists as "n_list=1|0|2".
inline std::string canonical_params(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ';';
        s += k + "=";
        if (const auto* i = std::get_if<std::int64_t>(&v)) {
            s += std::to_string(*i);
        } else {
            const auto& list = std::get<std::vector<std::int64_t>>(v);
            for (std::size_t j = 0; j < list.size(); ++j) s += (j ? "|" : "") + std::to_string(list[j]);
        }
    }
    return s;
}

/// What a check body reports; run_check adds identity and timing.
struct Outcome {
    Status status = Status::holds;
    std::optional<std::string> witness;
    std::optional<std::string> note;

    static Outcome holds(std::optional<std::string> note = std::nullopt) {
        return {Status::holds, std::nullopt, std::move(note)};
    }
    static Outcome fails(std::string witness) { return {Status::fails, std::move(witness), std::nullopt}; }
    static Outcome skipped(std::string reason) { return {Status::skipped_precondition, std::nullopt, std::move(reason)}; }
    static Outcome verdict(bool ok, const std::string& witness_if_fail) {
        return ok ? holds() : fails(witness_if_fail);
    }
};

struct CheckResult {
    std::string id;
    Params params;
    Status status = Status::holds;
    std::optional<std::string> witness;
    std::optional<std::string> note;
    double elapsed_ms = 0;
};

inline bool result_order(const CheckResult& a, const CheckResult& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.params < b.params;
}

/// Shortens long polynomial witnesses for reports.
inline std::string clip(std::string s, std::size_t max_len = 480) {
    if (s.size() <= max_len) return s;
    const std::size_t total = s.size();
    s.resize(max_len);
    return s + " ... (" + std::to_string(total) + " chars)";
}

template <Coefficient T>
std::string describe_nonzero(const LaurentPolynomial<T>& diff) {
    if (diff.is_zero()) return "0";
    return "difference has exponents [" + std::to_string(diff.min_exponent()) + ", " +
           std::to_string(diff.max_exponent()) + "]: " + clip(diff.to_string());
}

/// Runs `body`, timing it; any exception becomes FAILS with the message as witness.
template <class Body>
CheckResult run_check(std::string id, Params params, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.id = std::move(id);
    r.params = std::move(params);
    try {
        Outcome o = body();
        r.status = o.status;
        r.witness = std::move(o.witness);
        r.note = std::move(o.note);
        if (r.status == Status::fails && !r.witness) r.witness = "(no witness supplied)";
    } catch (const non_unit_error& e) {
        r.status = Status::fails;
        r.witness = std::string(e.what()) + "; gcd = " + clip(e.witness);
    } catch (const std::exception& e) {
        r.status = Status::fails;
        r.witness = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace qsc
