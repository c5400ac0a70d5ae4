// End-to-end checks of the command-line interface: exit-code contract,
// output formats, and sweep determinism.

#include "choiwit/json_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = std::string(CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return RunResult{WEXITSTATUS(raw), ss.str()};
}

}  // namespace

TEST_CASE("classify exit codes and output") {
    auto res = run("classify 1 0 1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("v_(1,0,1)") != std::string::npos);
    CHECK(res.output.find("co-spanning Y") != std::string::npos);
    CHECK(res.output.find("spanning N") != std::string::npos);
    CHECK(res.output.find("bi-optimal Y") != std::string::npos);

    res = run("classify 3 0 0");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("e_a") != std::string::npos);
    CHECK(res.output.find("optimal N") != std::string::npos);

    res = run("classify 0.5 0.1 0.1");
    CHECK(res.exit_code == 2);

    res = run("classify -1 0 0");
    CHECK(res.exit_code == 1);

    res = run("classify 1 0");
    CHECK(res.exit_code == 1);
}

TEST_CASE("classify JSON round-trips byte-identically") {
    const auto res = run("classify 0.2 1.6 0.4 --json");
    CHECK(res.exit_code == 0);
    const auto j = choiwit::json::parse(res.output);
    CHECK(j.at("face") == "e_t");
    CHECK(j.dump(2) + "\n" == res.output);
}

TEST_CASE("choi dumps") {
    auto res = run("choi 1 0 1 --json");
    CHECK(res.exit_code == 0);
    const auto j = choiwit::json::parse(res.output);
    CHECK(j.at("dim") == 9);
    const auto m = choiwit::matrix_from_json(j);
    const double diag[9] = {1, 1, 0, 0, 1, 1, 1, 0, 1};
    for (int k = 0; k < 9; ++k) CHECK(m(k, k).real() == diag[k]);
    CHECK(j.at("params") == choiwit::json({1.0, 0.0, 1.0}));

    res = run("choi 0 1 1 --csv");
    CHECK(res.exit_code == 0);
    int lines = 0;
    std::stringstream ss(res.output);
    std::string line;
    while (std::getline(ss, line)) {
        ++lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 8);
        CHECK(line.find('j') != std::string::npos);
    }
    CHECK(lines == 9);

    // gamma moves the (0,4) entry to (1,3)
    res = run("choi 2 0 0 --gamma --json");
    const auto g = choiwit::matrix_from_json(choiwit::json::parse(res.output));
    CHECK(g(1, 3).real() == -1.0);
    CHECK(g(0, 4).real() == 0.0);
}

TEST_CASE("span exit codes") {
    auto res = run("span 0.2 1.6 0.4");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("CERTIFIED") != std::string::npos);
    CHECK(res.output.find("|det M|") != std::string::npos);

    res = run("span 1 0 1");
    CHECK(res.exit_code == 3);
    CHECK(res.output.find("EVIDENCE_ONLY") != std::string::npos);

    res = run("span 1 0 1 --gamma");
    CHECK(res.exit_code == 0);
}

TEST_CASE("positivity output") {
    auto res = run("positivity 2 0 0 --restarts 10");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("# seed: 0") != std::string::npos);
    CHECK(res.output.find("agree: Y") != std::string::npos);

    res = run("positivity 0.5 0.1 0.1 --restarts 10");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("closed-form positive: N") != std::string::npos);
    CHECK(res.output.find("agree: Y") != std::string::npos);
}

TEST_CASE("sweep produces a deterministic CSV with the documented header") {
    const std::string args =
        "sweep --a-min 0 --a-max 3 --a-steps 4 --b-min 0 --b-max 3 --b-steps 4 "
        "--c-min 0 --c-max 3 --c-steps 4";
    const auto res = run(args);
    CHECK(res.exit_code == 0);
    std::stringstream ss(res.output);
    std::string header;
    std::getline(ss, header);
    CHECK(header ==
          "a,b,c,face,t,positive,cp,ccp,decomposable,optimal,co_optimal,"
          "bi_optimal,spanning,co_spanning,bi_spanning");
    int rows = 0;
    std::string line;
    bool saw_v200 = false;
    while (std::getline(ss, line)) {
        ++rows;
        if (line.rfind("2,0,0,", 0) == 0) {
            saw_v200 = true;
            CHECK(line.find("v_(2,0,0)") != std::string::npos);
            // co_optimal column is 1
            CHECK(line.find(",1,1,0,1,0,1,0,0,1,0") != std::string::npos);
        }
    }
    CHECK(rows == 64);
    CHECK(saw_v200);

    const auto res2 = run(args);
    CHECK(res2.output == res.output);
}

TEST_CASE("sweep rows on the boundary curve carry the all-Y profile") {
    // a + b + c = 2 section through (1/3, 4/3, 1/3)
    const auto res = run(
        "sweep --a-min 0.33333333333333331 --a-max 1 --a-steps 2 "
        "--b-min 1.3333333333333333 --b-max 2 --b-steps 2 "
        "--c-min 0.33333333333333331 --c-max 1 --c-steps 2 --tol 1e-9");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("v_curve") != std::string::npos);
    std::stringstream ss(res.output);
    std::string line;
    while (std::getline(ss, line))
        if (line.find("v_curve") != std::string::npos)
            CHECK(line.find("1,1,1,1,1,1") != std::string::npos);
}

TEST_CASE("detect with a state file") {
    choiwit::CMat mixed = choiwit::CMat::Identity(9, 9) / 9.0;
    {
        std::ofstream out("maximally_mixed.json");
        out << choiwit::matrix_to_json(mixed).dump(2) << "\n";
    }
    auto res = run("detect 1 0 1 --state maximally_mixed.json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("not detected") != std::string::npos);
    CHECK(res.output.find("0.66666666666666") != std::string::npos);

    // malformed state: wrong trace
    {
        std::ofstream out("bad_state.json");
        out << choiwit::matrix_to_json(choiwit::CMat::Identity(9, 9)).dump(2) << "\n";
    }
    res = run("detect 1 0 1 --state bad_state.json");
    CHECK(res.exit_code == 4);
    CHECK(res.output.find("trace") != std::string::npos);

    res = run("detect 1 0 1 --state no_such_file.json");
    CHECK(res.exit_code == 4);
}

TEST_CASE("detect search short-circuits for decomposable parameters") {
    const auto res = run("detect 2 0 0 --search");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("NOT_FOUND") != std::string::npos);
    CHECK(res.output.find("decomposable") != std::string::npos);
}

TEST_CASE("detect without mode is a usage error") {
    CHECK(run("detect 1 0 1").exit_code == 1);
}
