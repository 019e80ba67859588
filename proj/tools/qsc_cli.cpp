// qsc: run single checks, sweeps and the default grid from the command line.
//
//   qsc verify --check thm12 --d 3 --n 5
//   qsc sweep --suite paper-default --out report.json
//   qsc sweep --check km --m-max 3 --nj-max 4 --trials 5 --seed 42
//   qsc list

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qsc/report.hpp"

namespace {

enum Exit { ok = 0, failures = 1, usage = 2, write_failed = 3 };

const char* param_names[] = {"d", "r", "n", "p", "j", "k", "m", "family"};

qsc::Mutation parse_mutation(const std::string& s) {
    if (s == "none") return qsc::Mutation::none;
    if (s == "sign") return qsc::Mutation::flip_sign;
    if (s == "exponent") return qsc::Mutation::bump_exponent;
    throw qsc::usage_error("--mutate takes none, sign or exponent");
}

int run_verify(const std::string& id, const std::map<std::string, std::optional<long>>& ints, const std::string& n_list,
               const qsc::RunOptions& options) {
    const auto& check = qsc::find_check(id);
    qsc::Params p;
    for (const auto& [name, v] : ints)
        if (v) p[name] = static_cast<std::int64_t>(*v);
    if (!n_list.empty()) {
        std::vector<std::int64_t> list;
        std::stringstream ss(n_list);
        std::string item;
        while (std::getline(ss, item, ',')) list.push_back(qsc::parse_range(item).front());
        p["n_list"] = list;
    }
    qsc::validate_params(check, p);
    const auto r = qsc::run_instance(check, p, options);
    std::cout << qsc::result_json(r).dump(2) << "\n";
    return r.status == qsc::Status::fails ? failures : ok;
}

void print_catalog() {
    std::size_t width = 0;
    for (const auto& c : qsc::catalog()) width = std::max(width, c.id.size());
    for (const auto& c : qsc::catalog()) {
        std::string params;
        for (const auto& n : c.required) params += (params.empty() ? "" : " ") + n;
        for (const auto& n : c.optional) params += (params.empty() ? "[" : " [") + n + "]";
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << c.id << std::setw(18) << params
                  << (c.fast ? "  " : "* ") << c.statement << "\n";
    }
    std::cout << "\n* exact arithmetic only; --fast-mode leaves these unchanged\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of q-supercongruences"};
    app.require_subcommand(1);

    qsc::RunOptions options;
    std::string mutation = "none";
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--fast-mode", options.fast_mode, "Work modulo two random primes near 2^61");
        sub->add_option("--seed", options.seed, "Seed for prime selection and random trials")->capture_default_str();
        sub->add_option("--trials", options.trials, "Random trials per randomized check")->capture_default_str();
    };

    auto* verify = app.add_subcommand("verify", "Run one check and print its result as JSON");
    std::string verify_id, verify_nlist;
    std::map<std::string, std::optional<long>> verify_ints;
    verify->add_option("--check", verify_id, "Check id (see `list`)")->required();
    for (const char* name : param_names) verify_ints[name];
    for (auto& [name, v] : verify_ints) verify->add_option("--" + name, v);
    verify->add_option("--n-list", verify_nlist, "Comma separated n_1,...,n_m");
    verify->add_option("--mutate", mutation, "Perturb the closed form: none, sign, exponent");
    add_common(verify);

    auto* sweep = app.add_subcommand("sweep", "Run a grid of checks and write a report");
    std::string suite, plan_path, sweep_id, sweep_nlist, format = "json", out;
    std::map<std::string, std::string> sweep_ranges;
    std::optional<long> m_max, nj_max;
    unsigned jobs = 0;
    sweep->add_option("--suite", suite, "Built-in suite (paper-default)");
    sweep->add_option("--plan", plan_path, "JSON plan file");
    sweep->add_option("--check", sweep_id, "Check id for an inline sweep");
    for (const char* name : param_names) sweep_ranges[name];
    for (auto& [name, v] : sweep_ranges) sweep->add_option("--" + name, v, "Range such as 5, 3,7 or 2:20");
    sweep->add_option("--n-list", sweep_nlist, "Comma separated n_1,...,n_m");
    sweep->add_option("--m-max", m_max, "km: largest m");
    sweep->add_option("--nj-max", nj_max, "km: largest n_j");
    sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sweep->add_option("--out", out, "Report path (default: standard output)");
    sweep->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
    add_common(sweep);

    app.add_subcommand("list", "Print the check catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        options.mutation = parse_mutation(mutation);
        if (*verify) return run_verify(verify_id, verify_ints, verify_nlist, options);
        if (!*sweep) {
            print_catalog();
            return ok;
        }

        const int sources = !suite.empty() + !plan_path.empty() + !sweep_id.empty();
        if (sources != 1) throw qsc::usage_error("sweep needs exactly one of --suite, --plan, --check");
        qsc::SweepPlan plan;
        if (!plan_path.empty()) {
            plan = qsc::plan_from_file(plan_path);
            if (sweep->count("--fast-mode")) plan.options.fast_mode = true;
            if (sweep->count("--seed")) plan.options.seed = options.seed;
            if (sweep->count("--trials")) plan.options.trials = options.trials;
        } else {
            plan.options = options;
            if (!suite.empty()) {
                if (suite != "paper-default") throw qsc::usage_error("unknown suite '" + suite + "'");
                plan.source = "suite paper-default";
                plan.instances = qsc::default_suite();
            } else {
                std::map<std::string, std::string> ranges;
                for (const auto& [name, text] : sweep_ranges)
                    if (!text.empty()) ranges[name] = text;
                if (!sweep_nlist.empty()) ranges["n_list"] = sweep_nlist;
                plan.instances = qsc::instances_for(sweep_id, ranges, m_max, nj_max);
                plan.source = "check " + sweep_id;
            }
        }
        plan.format = format;
        plan.out = out;

        std::cerr << "instances: " << plan.instances.size() << std::endl;
        const auto start = std::chrono::steady_clock::now();
        const auto results = qsc::run_sweep(plan, jobs);
        const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const auto text = qsc::render_report(plan, results, total);
        if (plan.out.empty())
            std::cout << text << std::flush;
        else
            qsc::write_text(plan.out, text);
        const auto s = qsc::summarize(results);
        std::cerr << "holds " << s.holds << ", fails " << s.fails << ", skipped " << s.skipped << std::endl;
        return s.fails ? failures : ok;
    } catch (const qsc::usage_error& e) {
        std::cerr << "qsc: " << e.what() << "\n";
        return usage;
    } catch (const qsc::write_error& e) {
        std::cerr << "qsc: " << e.what() << "\n";
        return write_failed;
    }
}
