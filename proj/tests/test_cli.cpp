#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "cli_harness.hpp"

using namespace deltascat;
using namespace deltascat::testing;

namespace {

double num(const std::string& s) { return std::stod(s); }

}  // namespace

TEST_CASE("number format") {
    CHECK(cli::format_number(4.0) == "4.00000000000000");
    CHECK(cli::format_number(-1.0) == "-1.00000000000000");
    CHECK(cli::format_number(1e-7) == "1.00000000000000e-07");
    CHECK(cli::format_number(kPi) == "3.14159265358979");
}

TEST_CASE("cross-section closed and partial-wave at resonance") {
    const auto closed = run_cli({"cross-section", "--k", "1", "--e0", "-1", "--method", "closed"});
    REQUIRE(closed.code == 0);
    const auto rows = parse_csv(closed.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"k", "e0", "x", "ln_x", "method", "sigma"});
    CHECK(rows[1].back() == "4.00000000000000");
    CHECK(rows[1][4] == "closed");

    const auto pw = run_cli({"cross-section", "--k", "1", "--e0", "-1", "--method", "partial-wave"});
    REQUIRE(pw.code == 0);
    CHECK(parse_csv(pw.out)[1].back() == rows[1].back());
}

TEST_CASE("cross-section by the limit route") {
    const auto r = run_cli({"cross-section", "--k", "1", "--e0", "-1", "--method", "limit"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(num(parse_csv(r.out)[1].back()) - 4.0) <= 4e-8);
}

TEST_CASE("limit-study at resonance") {
    const auto r = run_cli({"limit-study", "--k", "1", "--e0", "-1", "--mode", "full"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"eps", "sigma_eps", "abs_err_vs_closed"});
    for (std::size_t i = 2; i < 6; ++i) CHECK(num(rows[i][2]) < num(rows[i - 1][2]));
    CHECK(rows[6][0] == "limit");
    CHECK(std::abs(num(rows[6][1]) - 4.0) <= 4e-6);
}

TEST_CASE("limit-study in truncated_log mode") {
    const auto r = run_cli({"limit-study", "--k", "1", "--e0", "-7.38905609893065", "--mode",
                            "truncated_log"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    for (std::size_t i = 2; i < 6; ++i) CHECK(rows[i][1] == rows[1][1]);
    CHECK(num(rows[6][1]) == doctest::Approx(9.8696044010).epsilon(1e-10));
}

TEST_CASE("sweep rows") {
    const auto r = run_cli({"sweep", "--e0", "-1", "--k-min", "0.1", "--k-max", "10", "--points", "5"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"k", "ln_x", "delta0", "sigma", "sigma_times_k"});
    // middle row is k = 1, the resonance
    CHECK(rows[3][0] == "1.00000000000000");
    CHECK(rows[3][4] == "4.00000000000000");
    CHECK(rows[3][2] == "1.57079632679490");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].size() == 5);
        CHECK(num(rows[i][4]) <= 4.0);
    }
    // k = mu e^{-a} and k = mu e^{a} mirror each other
    for (std::size_t i = 1; i <= 2; ++i) {
        const std::size_t j = rows.size() - i;
        CHECK(num(rows[i][1]) == doctest::Approx(-num(rows[j][1])).epsilon(1e-13));
        CHECK(num(rows[i][4]) == doctest::Approx(num(rows[j][4])).epsilon(1e-12));
    }
}

TEST_CASE("failure exit codes name the offending input") {
    for (const auto& f : failure_cases()) {
        const auto r = run_cli(f.args);
        CAPTURE(r.err);
        CHECK(r.code == f.expected_code);
        CHECK(r.err.find(f.flag) != std::string::npos);
    }
}

TEST_CASE("--output writes the same bytes as stdout") {
    const auto path = (std::filesystem::temp_directory_path() / "deltascat_sweep_test.csv").string();
    std::vector<std::string> args{"sweep", "--e0", "-2", "--k-min", "0.5", "--k-max", "4", "--points", "7"};
    const auto to_stdout = run_cli(args);
    args.insert(args.end(), {"--output", path});
    const auto to_file = run_cli(args);
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(read_file(path) == to_stdout.out);
    std::remove(path.c_str());

    const auto bad = run_cli({"sweep", "--e0", "-2", "--k-min", "0.5", "--k-max", "4", "--output",
                              "/nonexistent-dir/x.csv"});
    CHECK(bad.code == 2);
}

TEST_CASE("golden outputs") {
    for (const auto& g : golden_cases()) {
        CAPTURE(g.name);
        const auto first = run_cli(g.args);
        const auto second = run_cli(g.args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
        const std::string golden = read_file(std::string(DELTASCAT_GOLDEN_DIR) + "/" + g.name + ".csv");
        CHECK(first.out == golden);
    }
}
