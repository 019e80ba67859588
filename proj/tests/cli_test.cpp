#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsc/report.hpp"

using namespace qsc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("qsc_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run qsc_run(const std::string& args) {
    const auto out = scratch() / "stdout.txt";
    const std::string cmd = std::string(QSC_BINARY) + " " + args + " >" + out.string() + " 2>" + (scratch() / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

/// The report with every elapsed field removed.
nlohmann::json body(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j.erase("total_elapsed_ms");
    for (auto& r : j["results"]) r.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST(Verify, Examples) {
    auto r = qsc_run("verify --check thm12 --d 3 --n 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "HOLDS");
    r = qsc_run("verify --check thm11 --d 4 --n 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "SKIPPED_PRECONDITION");
    EXPECT_EQ(qsc_run("verify --check bogus").code, 2);
}

TEST(Verify, UsageErrors) {
    EXPECT_EQ(qsc_run("verify --check thm12 --d three --n 5").code, 2);
    EXPECT_EQ(qsc_run("verify --check thm12 --d 3").code, 2);
    EXPECT_EQ(qsc_run("verify --check thm12 --d 3 --n 5 --p 7").code, 2);
    EXPECT_EQ(qsc_run("verify").code, 2);
    EXPECT_EQ(qsc_run("frobnicate").code, 2);
}

TEST(Verify, FailsExitsOne) {
    auto r = qsc_run("verify --check thm12 --d 3 --n 5 --mutate sign");
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["status"], "FAILS");
    EXPECT_TRUE(j.contains("witness"));
}

TEST(Verify, ListsAndFastMode) {
    auto r = qsc_run("verify --check km --m 2 --n-list 1,1 --trials 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["params"]["n_list"], nlohmann::json({1, 1}));
    r = qsc_run("verify --check thm41 --d 5 --r 2 --n 8 --fast-mode");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(nlohmann::json::parse(r.out)["note"].get<std::string>().find("mod "), std::string::npos);
}

TEST(Sweep, ShiftedSummationIsDeterministic) {
    const auto a = scratch() / "km_a.json", b = scratch() / "km_b.json";
    EXPECT_EQ(qsc_run("sweep --check km --m-max 3 --nj-max 4 --trials 5 --seed 42 --out " + a.string()).code, 0);
    EXPECT_EQ(qsc_run("sweep --check km --m-max 3 --nj-max 4 --trials 5 --seed 42 --jobs 3 --out " + b.string()).code, 0);
    const auto ja = body(slurp(a)), jb = body(slurp(b));
    EXPECT_EQ(ja.dump(), jb.dump());
    EXPECT_EQ(ja["results"].size(), 155u);
    EXPECT_EQ(ja["summary"]["holds"], 155);
    EXPECT_EQ(ja["plan"]["seed"], 42);
}

TEST(Sweep, InlineRangesAndCsv) {
    auto r = qsc_run("sweep --check thm12 --d 3,5 --n 2:10 --format csv");
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "id,params,status,elapsed_ms");
    int rows = 0, holds = 0;
    while (std::getline(lines, line)) {
        ++rows;
        holds += line.find(",HOLDS,") != std::string::npos;
    }
    EXPECT_EQ(rows, 18);
    EXPECT_EQ(holds, 5);  // (3,2) (3,5) (3,8) (5,4) (5,9)
}

TEST(Sweep, EmptyPlan) {
    const auto plan = scratch() / "empty.json";
    std::ofstream(plan) << "{}";
    auto r = qsc_run("sweep --plan " + plan.string());
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["results"].empty());
    EXPECT_EQ(j["summary"], nlohmann::json({{"holds", 0}, {"fails", 0}, {"skipped", 0}}));
}

TEST(Sweep, PlanFile) {
    const auto plan = scratch() / "plan.json";
    std::ofstream(plan) << R"({"checks": [{"id": "divisibility", "params": {"d": [2, 3], "n": "5"}},
                                          {"id": "km", "m_max": 1, "nj_max": 2}], "seed": 7})";
    auto r = qsc_run("sweep --plan " + plan.string());
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["plan"]["instance_count"], 5);
    EXPECT_EQ(j["plan"]["seed"], 7);
    EXPECT_EQ(j["results"][0]["id"], "divisibility");
}

TEST(Sweep, BadPlansExitTwo) {
    EXPECT_EQ(qsc_run("sweep --plan /nonexistent/plan.json").code, 2);
    const auto bad = scratch() / "bad.json";
    std::ofstream(bad) << "{not json";
    EXPECT_EQ(qsc_run("sweep --plan " + bad.string()).code, 2);
    const auto unknown = scratch() / "unknown.json";
    std::ofstream(unknown) << R"({"checks": [{"id": "nope"}]})";
    EXPECT_EQ(qsc_run("sweep --plan " + unknown.string()).code, 2);
    EXPECT_EQ(qsc_run("sweep --check thm12 --d 3 --n 9:2").code, 2);
    EXPECT_EQ(qsc_run("sweep --suite nightly").code, 2);
    EXPECT_EQ(qsc_run("sweep").code, 2);
}

TEST(Sweep, WriteFailureExitsThree) {
    EXPECT_EQ(qsc_run("sweep --check thm12 --d 3 --n 5 --out /nonexistent/dir/report.json").code, 3);
}

TEST(List, ShowsEveryCheck) {
    auto r = qsc_run("list");
    EXPECT_EQ(r.code, 0);
    for (const auto& c : catalog()) EXPECT_NE(r.out.find(c.id), std::string::npos) << c.id;
}

TEST(Ranges, Parse) {
    EXPECT_EQ(parse_range("5"), (std::vector<std::int64_t>{5}));
    EXPECT_EQ(parse_range("3,5"), (std::vector<std::int64_t>{3, 5}));
    EXPECT_EQ(parse_range("2:4,9,3"), (std::vector<std::int64_t>{2, 3, 4, 9}));
    EXPECT_EQ(parse_range("-2:0"), (std::vector<std::int64_t>{-2, -1, 0}));
    EXPECT_THROW(parse_range(""), usage_error);
    EXPECT_THROW(parse_range("4:2"), usage_error);
    EXPECT_THROW(parse_range("x"), usage_error);
    EXPECT_THROW(parse_range("3,,"), usage_error);
}

TEST(Catalog, RejectsBadParameters) {
    EXPECT_THROW(run_instance("bogus", {}), usage_error);
    EXPECT_THROW(run_instance("thm12", {{"d", 3}}), usage_error);
    EXPECT_THROW(run_instance("thm12", {{"d", 3}, {"n", 5}, {"r", 1}}), usage_error);
}

TEST(Catalog, FastModeUsesTwoPrimes) {
    const auto [p1, p2] = fast_mode_primes(42);
    EXPECT_NE(p1, p2);
    EXPECT_TRUE(is_prime_u64(p1));
    EXPECT_TRUE(is_prime_u64(p2));
    EXPECT_EQ(fast_mode_primes(42), fast_mode_primes(42));
    EXPECT_NE(fast_mode_primes(42), fast_mode_primes(43));
}

TEST(Suite, Composition) {
    const auto s = default_suite();
    std::map<std::string, int> count;
    for (const auto& i : s) ++count[i.id];
    EXPECT_EQ(count["km"], 155);
    EXPECT_EQ(count["qbinom_vanishing"], 30);
    EXPECT_EQ(count["bracket_factorization"], 29);
    EXPECT_EQ(count["rv_11"], 14);
    EXPECT_EQ(count["thm41"], 11);
    EXPECT_EQ(count["thm42"], 9);
    EXPECT_EQ(count["q1_shadow"], 3);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    for (const auto& i : s) EXPECT_NO_THROW(validate_params(find_check(i.id), i.params)) << i.id;
}

TEST(Report, SummaryMatchesResults) {
    SweepPlan plan;
    plan.instances = instances_for("thm11", {{"d", "4"}, {"n", "6:11"}});
    const auto results = run_sweep(plan, 2);
    ASSERT_EQ(results.size(), 6u);
    EXPECT_TRUE(std::is_sorted(results.begin(), results.end(), result_order));
    const auto j = report_json(plan, results, 0);
    EXPECT_EQ(j["summary"]["holds"], 2);
    EXPECT_EQ(j["summary"]["skipped"], 4);
    EXPECT_EQ(j["summary"]["fails"], 0);
    EXPECT_EQ(report_csv(results).substr(0, 27), "id,params,status,elapsed_ms");
}
