#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

const char* cli_path() { return std::getenv("SUBENT_CLI"); }

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{code, out};
}

}  // namespace

TEST_CASE("cli eval from x-coordinates") {
    if (!cli_path()) return;  // only meaningful under ctest
    RunResult r = run_cli("eval --x 0.6,0.4");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["command"] == "eval");
    CHECK(std::abs(rec["results"]["H_direct"].get<double>() - 0.6730116670092565) < 1e-9);
    CHECK(std::abs(rec["results"]["Q_direct"].get<double>() - 0.1864535372794592) < 1e-9);
    CHECK(rec["results"]["H_max_delta"].get<double>() < 1e-9);
    CHECK(rec["results"]["Q_max_delta"].get<double>() < 1e-9);
}

TEST_CASE("cli eval from e-coordinates") {
    if (!cli_path()) return;
    RunResult r = run_cli("eval --e 1,0.25");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(std::abs(rec["results"]["H_halfaxis"].get<double>() - 0.6931471805599453) < 1e-9);
    CHECK(std::abs(rec["results"]["Q_halfaxis"].get<double>() - 0.1931471805599453) < 1e-9);

    RunResult point = run_cli("eval --x 1,0");
    json prec = json::parse(point.out);
    CHECK(std::abs(prec["results"]["H_direct"].get<double>()) < 1e-12);
    CHECK(std::abs(prec["results"]["Q_direct"].get<double>()) < 1e-12);
}

TEST_CASE("cli eval parse errors") {
    if (!cli_path()) return;
    CHECK(run_cli("eval").exit_code == 2);
    CHECK(run_cli("eval --x 0.5,0.5 --e 1,0.25").exit_code == 2);
    CHECK(run_cli("eval --x 0.5,oops").exit_code == 2);
    CHECK(run_cli("eval --x 0.5,-0.5").exit_code == 3);
}

TEST_CASE("cli grad with closed-form values") {
    if (!cli_path()) return;
    RunResult r = run_cli("grad --e 1,0.25 --order 2");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(std::abs(rec["results"]["dH"].get<double>() - 2.0) < 1e-9);
    CHECK(std::abs(rec["results"]["c_bound_H"].get<double>() - 2.0) < 1e-9);
    CHECK(std::abs(rec["results"]["slack_H"].get<double>()) < 1e-9);

    RunResult r2 = run_cli("grad --e 1,0.25 --order 1,1");
    json rec2 = json::parse(r2.out);
    CHECK(std::abs(rec2["results"]["dH"].get<double>() + 2.0 / 3.0) < 1e-9);
}

TEST_CASE("cli grad reports structured divergence with exit 5") {
    if (!cli_path()) return;
    RunResult r = run_cli("grad --e 1,0 --order 2");
    CHECK(r.exit_code == 5);
    json rec = json::parse(r.out);
    REQUIRE(rec["results"]["dH"].is_object());
    CHECK(rec["results"]["dH"]["divergent"] == true);
    CHECK(rec["results"]["dH"]["direction"] == 1);
    // dQ converges at the same point: integral (tau+1)^{-2} = 1.
    CHECK(std::abs(rec["results"]["dQ"].get<double>() - 1.0) < 1e-9);
}

TEST_CASE("cli bounds") {
    if (!cli_path()) return;
    RunResult r = run_cli("bounds --e1 1 --e2 0.25 --d 2");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(std::abs(rec["results"]["a"].get<double>() - 0.5) < 1e-12);
    CHECK(std::abs(rec["results"]["H_bound"].get<double>() - 0.6931471805599453) < 1e-12);

    RunResult r2 = run_cli("bounds --e1 1 --e2 0.24 --d 2");
    json rec2 = json::parse(r2.out);
    CHECK(std::abs(rec2["results"]["a"].get<double>() - 0.4) < 1e-12);
    CHECK(std::abs(rec2["results"]["b"].get<double>() - 0.6) < 1e-12);
    CHECK(std::abs(rec2["results"]["H_bound"].get<double>() - 0.6730116670092565) < 1e-12);

    CHECK(run_cli("bounds --e1 1 --e2 0.3 --d 2").exit_code == 3);
}

TEST_CASE("cli haar") {
    if (!cli_path()) return;
    RunResult r = run_cli("haar --dim 2 --eigs 0.5,0.5 --samples 100");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["results"]["std_error"].get<double>() == 0.0);
    CHECK(std::abs(rec["results"]["implied_Q"].get<double>() - 0.1931471805599453) < 1e-12);

    RunResult big = run_cli("haar --dim 3 --eigs 0.5,0.3,0.2 --samples 100000 --seed 7 --threads 4");
    CHECK(big.exit_code == 0);
    json brec = json::parse(big.out);
    CHECK(std::abs(brec["results"]["z_score"].get<double>()) < 4.0);

    CHECK(run_cli("haar --dim 2 --eigs 0.6,0.5 --samples 10").exit_code == 3);
}

TEST_CASE("cli lk reconstruction and density export") {
    if (!cli_path()) return;
    RunResult r = run_cli("lk --e 1,0.25");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(std::abs(rec["results"]["H_reconstructed"].get<double>() - 0.6931471805599453) < 1e-4);
    CHECK(rec["results"]["H_halfaxis_delta"].get<double>() < 1e-4);

    RunResult r0 = run_cli("lk --e 1,0");
    json rec0 = json::parse(r0.out);
    CHECK(std::abs(rec0["results"]["H_reconstructed"].get<double>()) < 1e-10);

    CHECK(run_cli("lk --e 0.9,0.2").exit_code == 3);

    std::string path = "/tmp/subent_density_test.csv";
    RunResult rg = run_cli("lk --e 1,0.2,0.05 --grid 8 --out " + path);
    REQUIRE(rg.exit_code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char line[256];
    REQUIRE(fgets(line, sizeof(line), f) != nullptr);
    CHECK(std::string(line) == "r,t_d,weight_H,weight_Q\n");
    int rows = 0;
    while (fgets(line, sizeof(line), f)) ++rows;
    fclose(f);
    std::remove(path.c_str());
    CHECK(rows == 64);
}

TEST_CASE("cli verify pick suite") {
    if (!cli_path()) return;
    RunResult r = run_cli("verify --suite pick --d 2 --samples 10");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["results"]["all_pass"] == true);
}

TEST_CASE("cli verify emits reports and is deterministic across threads") {
    if (!cli_path()) return;
    RunResult r1 = run_cli("verify --suite sum_identities --d 2 --samples 5 --seed 42");
    REQUIRE(r1.exit_code == 0);
    json rec = json::parse(r1.out);
    CHECK(rec["results"]["all_pass"] == true);
    CHECK(rec["inputs"]["registry_version"] == "1");

    RunResult r2 =
        run_cli("verify --suite sum_identities --d 2 --samples 5 --seed 42 --threads 4");
    json rec2 = json::parse(r2.out);
    // The thread count is echoed in inputs; everything else must match bytes.
    rec["inputs"].erase("threads");
    rec2["inputs"].erase("threads");
    CHECK(rec.dump() == rec2.dump());

    CHECK(run_cli("verify --suite not_a_suite").exit_code == 2);

    // An unattainable tolerance forces failures; the exit code is 10 + n.
    RunResult forced =
        run_cli("verify --suite cross_oracle --d 2 --samples 2 --seed 1 --tol 1e-30");
    CHECK(forced.exit_code == 11);
    json frec = json::parse(forced.out);
    CHECK(frec["results"]["all_pass"] == false);
}

TEST_CASE("cli csv format") {
    if (!cli_path()) return;
    RunResult r = run_cli("eval --x 0.5,0.5 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("results.H_direct") != std::string::npos);
    // Header row then data row.
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("cli base conversion is display-only") {
    if (!cli_path()) return;
    RunResult r = run_cli("eval --x 0.5,0.5 --base 2");
    json rec = json::parse(r.out);
    CHECK(std::abs(rec["results"]["H_direct"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("cli records match the published schema shape") {
    if (!cli_path()) return;
    const char* commands[] = {"eval --x 0.6,0.4", "grad --e 1,0.25 --order 2",
                              "bounds --e1 1 --e2 0.2 --d 2",
                              "haar --dim 2 --eigs 0.5,0.5 --samples 10",
                              "lk --e 1,0.25",
                              "verify --suite sum_identities --d 2 --samples 2"};
    for (const char* cmd : commands) {
        json rec = json::parse(run_cli(cmd).out);
        REQUIRE(rec.is_object());
        CHECK(rec["command"].is_string());
        CHECK(rec["inputs"].is_object());
        CHECK(rec["results"].is_object());
        CHECK(rec["diagnostics"].is_object());
    }
}
