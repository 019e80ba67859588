#pragma once

// Sweep plans, the worker pool that runs them, and JSON/CSV reports.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qsc/suite.hpp"

namespace qsc {

inline constexpr const char* tool_version = "1.0.0";

struct write_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepPlan {
    std::string source = "inline";
    std::vector<Instance> instances;
    RunOptions options;
    std::string format = "json";
    std::string out;  // empty: standard output
};

/// "5", "3,5,7", "2:20", "2:20,25" -> sorted distinct values.
inline std::vector<std::int64_t> parse_range(const std::string& text) {
    std::vector<std::int64_t> v;
    std::stringstream ss(text);
    std::string part;
    auto number = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t x = 0;
        try {
            x = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw usage_error("malformed range '" + text + "'");
        return x;
    };
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) {
            v.push_back(number(part));
            continue;
        }
        const auto lo = number(part.substr(0, colon)), hi = number(part.substr(colon + 1));
        if (hi < lo) throw usage_error("empty range '" + part + "'");
        if (hi - lo > 100000) throw usage_error("range '" + part + "' is too large");
        for (auto x = lo; x <= hi; ++x) v.push_back(x);
    }
    if (v.empty()) throw usage_error("empty range '" + text + "'");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Cartesian product of named value lists.
inline std::vector<Params> expand(const std::vector<std::pair<std::string, std::vector<ParamValue>>>& axes) {
    std::vector<Params> out{Params{}};
    for (const auto& [name, values] : axes) {
        std::vector<Params> next;
        for (const auto& p : out)
            for (const auto& v : values) {
                auto q = p;
                q[name] = v;
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

/// Instances of one check from string ranges; km takes m_max and nj_max instead of explicit lists.
inline std::vector<Instance> instances_for(const std::string& id, const std::map<std::string, std::string>& ranges,
                                           std::optional<long> m_max = std::nullopt,
                                           std::optional<long> nj_max = std::nullopt) {
    const auto& check = find_check(id);
    if (id == "km" && (m_max || nj_max) && !ranges.count("n_list")) {
        if (!m_max || !nj_max) throw usage_error("km sweeps need both m_max and nj_max");
        return km_instances(*m_max, *nj_max);
    }
    std::vector<std::pair<std::string, std::vector<ParamValue>>> axes;
    for (const auto& [name, text] : ranges) {
        std::vector<ParamValue> values;
        if (name == "n_list") {
            std::vector<std::int64_t> list;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) list.push_back(parse_range(item).front());
            values.push_back(list);
        } else {
            for (auto x : parse_range(text)) values.push_back(x);
        }
        axes.emplace_back(name, std::move(values));
    }
    std::vector<Instance> out;
    for (auto& p : expand(axes)) {
        validate_params(check, p);
        out.push_back({id, std::move(p)});
    }
    return out;
}

namespace detail {

inline std::vector<ParamValue> json_values(const std::string& name, const nlohmann::json& v) {
    std::vector<ParamValue> out;
    if (v.is_number_integer()) {
        out.push_back(v.get<std::int64_t>());
    } else if (v.is_string()) {
        for (auto x : parse_range(v.get<std::string>())) out.push_back(x);
    } else if (v.is_array() && name == "n_list") {
        if (!v.empty() && v.front().is_array())
            for (const auto& l : v) out.push_back(l.get<std::vector<std::int64_t>>());
        else
            out.push_back(v.get<std::vector<std::int64_t>>());
    } else if (v.is_array()) {
        for (const auto& x : v) out.push_back(x.get<std::int64_t>());
    } else {
        throw usage_error("parameter " + name + " has an unsupported value");
    }
    return out;
}

}  // namespace detail

/// Plan file: {"suite": name} or {"checks": [{"id", "params": {...}} | {"id": "km", "m_max", "nj_max"}]},
/// optionally "fast_mode", "seed", "trials".
inline SweepPlan plan_from_json(const nlohmann::json& j) {
    SweepPlan plan;
    plan.source = "plan";
    try {
        if (!j.is_object()) throw usage_error("plan must be a JSON object");
        if (j.contains("fast_mode")) plan.options.fast_mode = j.at("fast_mode").get<bool>();
        if (j.contains("seed")) plan.options.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("trials")) plan.options.trials = j.at("trials").get<long>();
        if (j.contains("suite")) {
            if (j.at("suite") != "paper-default") throw usage_error("unknown suite " + j.at("suite").dump());
            plan.instances = default_suite();
            plan.source = "suite paper-default";
        }
        const auto checks = j.value("checks", nlohmann::json::array());
        for (const auto& c : checks) {
            const auto id = c.at("id").get<std::string>();
            const auto& check = find_check(id);
            if (c.contains("m_max") || c.contains("nj_max")) {
                for (auto& i : instances_for(id, {}, c.at("m_max").get<long>(), c.at("nj_max").get<long>()))
                    plan.instances.push_back(std::move(i));
                continue;
            }
            std::vector<std::pair<std::string, std::vector<ParamValue>>> axes;
            const auto params = c.value("params", nlohmann::json::object());
            for (const auto& [name, v] : params.items())
                axes.emplace_back(name, detail::json_values(name, v));
            for (auto& p : expand(axes)) {
                validate_params(check, p);
                plan.instances.push_back({id, std::move(p)});
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("malformed plan: ") + e.what());
    }
    return plan;
}

inline SweepPlan plan_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read plan " + path);
    const auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw usage_error("plan " + path + " is not valid JSON");
    return plan_from_json(j);
}

/// Runs every instance on a bounded pool; results come back in (id, params) order.
inline std::vector<CheckResult> run_sweep(const SweepPlan& plan, unsigned jobs = 0) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, plan.instances.size())));
    std::vector<CheckResult> results(plan.instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < plan.instances.size();) {
            const auto& inst = plan.instances[i];
            results[i] = run_instance(find_check(inst.id), inst.params, plan.options);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(results.begin(), results.end(), result_order);
    return results;
}

struct Summary {
    std::size_t holds = 0, fails = 0, skipped = 0;
};

inline Summary summarize(const std::vector<CheckResult>& results) {
    Summary s;
    for (const auto& r : results) {
        if (r.status == Status::holds) ++s.holds;
        if (r.status == Status::fails) ++s.fails;
        if (r.status == Status::skipped_precondition) ++s.skipped;
    }
    return s;
}

inline nlohmann::ordered_json params_json(const Params& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : p) {
        if (const auto* i = std::get_if<std::int64_t>(&v))
            j[k] = *i;
        else
            j[k] = std::get<std::vector<std::int64_t>>(v);
    }
    return j;
}

inline nlohmann::ordered_json result_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["params"] = params_json(r.params);
    j["status"] = to_string(r.status);
    if (r.witness) j["witness"] = *r.witness;
    if (r.note) j["note"] = *r.note;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline nlohmann::ordered_json plan_json(const SweepPlan& plan) {
    nlohmann::ordered_json j;
    j["source"] = plan.source;
    j["instance_count"] = plan.instances.size();
    j["fast_mode"] = plan.options.fast_mode;
    if (plan.options.fast_mode) {
        const auto [p1, p2] = fast_mode_primes(plan.options.seed);
        j["primes"] = {p1, p2};
    }
    j["seed"] = plan.options.seed;
    j["trials"] = plan.options.trials;
    return j;
}

inline nlohmann::ordered_json report_json(const SweepPlan& plan, const std::vector<CheckResult>& results, double total_ms) {
    nlohmann::ordered_json j;
    j["version"] = tool_version;
    j["plan"] = plan_json(plan);
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) j["results"].push_back(result_json(r));
    const auto s = summarize(results);
    j["summary"] = {{"holds", s.holds}, {"fails", s.fails}, {"skipped", s.skipped}};
    j["total_elapsed_ms"] = total_ms;
    return j;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string report_csv(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    out << "id,params,status,elapsed_ms\n";
    for (const auto& r : results)
        out << csv_field(r.id) << ',' << csv_field(canonical_params(r.params)) << ',' << to_string(r.status) << ','
            << r.elapsed_ms << '\n';
    return out.str();
}

inline std::string render_report(const SweepPlan& plan, const std::vector<CheckResult>& results, double total_ms) {
    if (plan.format == "csv") return report_csv(results);
    return report_json(plan, results, total_ms).dump(2) + "\n";
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw write_error("cannot write " + path);
}

}  // namespace qsc
