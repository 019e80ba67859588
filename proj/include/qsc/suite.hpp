#pragma once

// Check instances, and the built-in `paper-default` grid.

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qsc/catalog.hpp"

namespace qsc {

struct Instance {
    std::string id;
    Params params;

    friend bool operator<(const Instance& a, const Instance& b) {
        return std::tie(a.id, a.params) < std::tie(b.id, b.params);
    }
    friend bool operator==(const Instance& a, const Instance& b) = default;
};

/// Every n_list of length m with entries in [0, nj_max], for m = 1..m_max.
inline std::vector<std::vector<std::int64_t>> km_lists(long m_max, long nj_max) {
    std::vector<std::vector<std::int64_t>> out;
    for (long m = 1; m <= m_max; ++m) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(m), 0);
        while (true) {
            out.push_back(v);
            std::size_t i = 0;
            while (i < v.size() && v[i] == nj_max) v[i++] = 0;
            if (i == v.size()) break;
            ++v[i];
        }
    }
    return out;
}

inline std::vector<Instance> km_instances(long m_max, long nj_max) {
    std::vector<Instance> out;
    for (auto& l : km_lists(m_max, nj_max))
        out.push_back({"km", {{"m", static_cast<std::int64_t>(l.size())}, {"n_list", l}}});
    return out;
}

struct Triple {
    long d, r, n;
};

namespace grid {

inline const std::vector<std::pair<long, long>> eq13 = {{2, 3}, {2, 5}, {3, 4}, {3, 7}, {4, 5}, {5, 6}};
inline const std::vector<std::pair<long, long>> eq14 = {{3, 5}, {3, 8}, {5, 9}, {5, 14}};
inline const std::vector<std::pair<long, long>> eq15 = {{4, 3}, {4, 7}, {4, 11}, {6, 5}};
inline const std::vector<std::pair<long, long>> thm11 = {{4, 7}, {4, 11}, {6, 11}};
inline const std::vector<std::pair<long, long>> thm12 = {{3, 2}, {3, 5}, {3, 8}, {5, 4}, {5, 9}};
inline const std::vector<Triple> lemma21 = {{4, 1, 7}, {5, 1, 9}, {5, 2, 8}, {5, 2, 13}, {7, 2, 12}, {7, 3, 11}};
inline const std::vector<Triple> thm41_extra = {{2, 1, 3}, {2, 1, 5}, {2, 1, 7}, {3, 1, 5}, {3, 1, 8}};
inline const std::vector<Triple> thm42 = {{2, 1, 3}, {3, 2, 4}, {3, 2, 7}, {4, 3, 5}, {5, 4, 6},
                                          {3, 1, 2}, {4, 1, 3}, {5, 2, 3}, {7, 5, 2}};
inline const std::vector<std::pair<long, long>> divisibility = {{2, 3}, {2, 5}, {3, 5}, {3, 8}, {4, 7}, {5, 9}};
inline const std::vector<std::pair<ParametricId, std::vector<Triple>>> parametric = {
    {ParametricId::p1_24, {{4, 1, 7}, {5, 2, 8}, {7, 2, 12}}},
    {ParametricId::p2_25, {{5, 1, 9}, {7, 3, 11}}},
    {ParametricId::p3_32, {{5, 1, 4}, {5, 1, 9}, {7, 1, 6}}},
    {ParametricId::p4_33, {{3, 1, 2}, {3, 1, 5}, {3, 1, 8}}},
    {ParametricId::p5_43, {{4, 1, 7}, {5, 2, 8}}},
    {ParametricId::p6_44, {{2, 1, 3}, {3, 2, 4}, {4, 3, 5}}},
    {ParametricId::p7_45, {{5, 1, 4}, {5, 1, 9}, {7, 3, 4}, {7, 3, 11}}},
    {ParametricId::p8_46, {{3, 1, 2}, {3, 1, 5}, {5, 3, 2}, {5, 3, 7}}}};
inline const std::vector<std::pair<long, long>> prefactor_extra = {{2, 9}, {3, 8}, {4, 15}};
inline const std::vector<std::pair<long, long>> root_sum = {{3, 7}, {3, 13}, {4, 5}, {4, 13}, {5, 11}, {6, 7}};
inline const std::vector<Triple> cor41_i = {{4, 1, 7}, {4, 1, 11}, {5, 2, 13}, {5, 2, 23}, {7, 2, 19}};
inline const std::vector<Triple> cor41_ii = {{3, 1, 5}, {3, 1, 11}, {4, 3, 5}, {4, 3, 13}, {5, 4, 11}};
inline const std::vector<std::pair<long, long>> wlt = {{2, 3}, {2, 9}, {3, 5}, {3, 11}, {4, 7}};
inline const std::vector<Triple> q1_shadow = {{3, 1, 5}, {4, 1, 7}, {5, 2, 13}};
inline const std::vector<std::pair<long, long>> small_d = {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 8}};

}  // namespace grid

/// (theorem id, d, r, n) for every theorem instance of the default grid.
inline std::vector<std::tuple<TheoremId, long, long, long>> theorem_grid() {
    std::vector<std::tuple<TheoremId, long, long, long>> out;
    const auto pairs = [&](TheoremId id, const auto& g) {
        for (auto [d, n] : g) out.emplace_back(id, d, 1, n);
    };
    pairs(TheoremId::eq13, grid::eq13);
    pairs(TheoremId::eq14, grid::eq14);
    pairs(TheoremId::eq15, grid::eq15);
    pairs(TheoremId::thm11, grid::thm11);
    pairs(TheoremId::thm12, grid::thm12);
    for (auto t : grid::lemma21) out.emplace_back(TheoremId::lemma21, t.d, t.r, t.n);
    for (auto t : grid::lemma21) out.emplace_back(TheoremId::thm41, t.d, t.r, t.n);
    for (auto t : grid::thm41_extra) out.emplace_back(TheoremId::thm41, t.d, t.r, t.n);
    for (auto t : grid::thm42) out.emplace_back(TheoremId::thm42, t.d, t.r, t.n);
    return out;
}

inline Params dn(long d, long n) { return {{"d", d}, {"n", n}}; }
inline Params drn(long d, long r, long n) { return {{"d", d}, {"r", r}, {"n", n}}; }

inline std::vector<Instance> default_suite() {
    std::vector<Instance> s;
    for (auto [id, d, r, n] : theorem_grid())
        s.push_back({to_string(id), uses_r(id) ? drn(d, r, n) : dn(d, n)});
    for (auto [d, n] : grid::divisibility) s.push_back({"divisibility", dn(d, n)});
    for (auto [d, n] : grid::small_d) s.push_back({"small_d_vanishing", dn(d, n)});
    for (const auto& [id, g] : grid::parametric)
        for (auto t : g) s.push_back({to_string(id), drn(t.d, t.r, t.n)});
    for (auto& i : km_instances(3, 4)) s.push_back(i);
    for (long n = 1; n <= 30; ++n) s.push_back({"qbinom_vanishing", {{"n", n}}});

    std::set<long> ds;
    std::set<std::pair<long, long>> drs;
    for (auto t : grid::lemma21) ds.insert(t.d), drs.insert({t.d, t.r});
    for (auto t : grid::lemma21) {
        for (long k = 0; k <= 6; ++k) {
            for (long j = 1; j < t.d; ++j) {
                // each ratio step is listed only on the j it governs
                const bool central_j = detail::central(t.d, t.r, j);
                Params p = drn(t.d, t.r, t.n);
                p["j"] = j;
                p["k"] = k;
                s.push_back({central_j ? "ratio_shift_central" : "ratio_shift_generic", p});
            }
            Params p = drn(t.d, t.r, t.n);
            p["k"] = k;
            s.push_back({"qbinom_rewrite", p});
            s.push_back({"exponent_identity", p});
        }
        s.push_back({"sum_decomposition_r", drn(t.d, t.r, t.n)});
        s.push_back({"sum_decomposition", dn(t.d, t.n)});
        s.push_back({"prefactor_divisibility", dn(t.d, t.n)});
    }
    for (long d : ds)
        for (long k = 0; k <= 6; ++k) s.push_back({"pochhammer_split_r1", {{"d", d}, {"k", k}}});
    for (auto [d, r] : drs)
        for (long k = 0; k <= 6; ++k) {
            s.push_back({"pochhammer_split_general", {{"d", d}, {"r", r}, {"k", k}}});
            s.push_back({"lemma_reduction", {{"d", d}, {"r", r}, {"k", k}}});
        }
    for (auto [d, n] : grid::prefactor_extra) s.push_back({"prefactor_divisibility", dn(d, n)});
    for (long n = 2; n <= 30; ++n) s.push_back({"bracket_factorization", {{"n", n}}});

    for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) s.push_back({"rv_11", {{"p", p}}});
    for (auto [d, p] : grid::root_sum) s.push_back({"deines_12", {{"d", d}, {"p", p}}});
    for (auto t : grid::cor41_i) s.push_back({"cor41_i", {{"d", t.d}, {"r", t.r}, {"p", t.n}}});
    for (auto t : grid::cor41_ii) s.push_back({"cor41_ii", {{"d", t.d}, {"r", t.r}, {"p", t.n}}});
    for (const auto* g : {&grid::cor41_i, &grid::cor41_ii})
        for (auto t : *g) s.push_back({"gamma_factorial", {{"d", t.d}, {"r", t.r}, {"p", t.n}}});
    for (auto [d, n] : grid::wlt) s.push_back({"wlt_integrality", dn(d, n)});

    std::set<std::pair<long, long>> collapse;
    for (auto [id, d, r, n] : theorem_grid())
        if (r == 1 && id != TheoremId::lemma21 && id != TheoremId::eq13) {
            const TheoremId f2 = d % 2 ? TheoremId::eq14 : TheoremId::thm11;
            const TheoremId f3 = d % 2 ? TheoremId::thm12 : TheoremId::eq15;
            const bool shared = (!theorem_precondition(TheoremId::thm41, d, 1, n) && !theorem_precondition(f2, d, 1, n)) ||
                                (!theorem_precondition(TheoremId::thm42, d, 1, n) && !theorem_precondition(f3, d, 1, n));
            if (shared) collapse.insert({d, n});
        }
    for (auto [d, n] : collapse) s.push_back({"r1_collapse", dn(d, n)});
    for (auto t : grid::q1_shadow) s.push_back({"q1_shadow", {{"d", t.d}, {"r", t.r}, {"p", t.n}}});
    for (auto [id, d, r, n] : theorem_grid())
        if (n <= 10) s.push_back({"lhs_oracle", {{"family", static_cast<long>(family_of(id)) + 1}, {"d", d}, {"r", r}, {"n", n}}});

    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace qsc
