#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PADIQ_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli: valuation") {
    auto r = run_cli("valuation --x 45/7 --p 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"vp\": 2") != std::string::npos);
    CHECK(r.output.find("\"abs\": \"1/9\"") != std::string::npos);
    CHECK(r.output.find("\"unit_part\": 2") != std::string::npos);
    CHECK(r.output.find("\"schema\": 1") != std::string::npos);

    CHECK(run_cli("valuation --x 0 --p 5").output.find("\"vp\": \"inf\"") != std::string::npos);
}

TEST_CASE("cli: decide examples") {
    auto r = run_cli("decide sum-of-squares --m 2 --p 13");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"status\": \"Dense\"") != std::string::npos);
    CHECK(r.output.find("\"theorem_tag\": \"Thm SOS(b)\"") != std::string::npos);

    auto r2 = run_cli("decide prime-power-union --p 5 --b 7");
    CHECK(r2.output.find("\"status\": \"NotDense\"") != std::string::npos);

    auto r3 = run_cli("decide prime-power-union --p 7 --b 5");
    CHECK(r3.output.find("\"status\": \"Dense\"") != std::string::npos);
}

TEST_CASE("cli: lucas output shape") {
    auto r = run_cli("lucas --r 1 --s 1 --kind second --p 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"status\": \"NotDense\"") != std::string::npos);
    CHECK(r.output.find("\"tau\"") != std::string::npos);
    CHECK(r.output.find("\"constants\"") != std::string::npos);

    auto r2 = run_cli("lucas --r 1 --s 1 --kind first --p 7 --cross-check");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("\"coverage\": \"COVERED\"") != std::string::npos);
}

TEST_CASE("cli: pairs table matches the published matrix") {
    auto r = run_cli("--format tsv pairs table --pairs 3:5,5:7,3:7,5:11,7:19");
    CHECK(r.exit_code == 0);
    const std::string expect =
        "p\tq\tp<q\tq<p\tp<q^2\tq<p^2\n"
        "3\t5\tT\tT\tT\tT\n"
        "5\t7\tT\tT\tT\tF\n"
        "3\t7\tT\tF\tT\tF\n"
        "5\t11\tF\tF\tF\tF\n"
        "7\t19\tF\tT\tF\tF\n";
    CHECK(r.output == expect);
}

TEST_CASE("cli: exit codes") {
    // domain error: 6 is not prime
    CHECK(run_cli("valuation --x 1/2 --p 6").exit_code == 1);
    // usage error: unknown flag
    CHECK(run_cli("valuation --x 1/2 --p 3 --nonsense").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    // cross-check disagreement: a Dense verdict with a sample too small to
    // cover the grid trips the alarm
    CHECK(run_cli("decide sum-of-squares --m 2 --p 13 --cross-check --bound 60").exit_code == 2);
    // NotDense with a healthy certificate stays clean
    CHECK(run_cli("decide sum-of-squares --m 2 --p 7 --cross-check --bound 10000").exit_code ==
          0);
}

TEST_CASE("cli: construct emits the sample format") {
    auto r = run_cli("construct zero-density --bound 13");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# zero-density") == 0);
    CHECK(r.output.find("\n1\n2\n5\n6\n7\n") != std::string::npos);
}

TEST_CASE("cli: config file supplies defaults, flags win") {
    const std::string path = "/tmp/padiq_cli_config.ini";
    {
        std::ofstream cfg(path);
        cfg << "format=tsv\n";
    }
    auto r = run_cli("--config " + path + " pairs table --pairs 3:5");
    CHECK(r.output.find("p\tq\t") == 0);  // tsv via config
    auto r2 = run_cli("--config " + path + " --format json pairs table --pairs 3:5");
    CHECK(r2.output.find("\"profiles\"") != std::string::npos);  // flag overrides
    std::remove(path.c_str());
}

TEST_CASE("cli: oracle over a generated and a file sample") {
    auto r = run_cli("oracle --squares 2 --bound 10000 --p 5 --r 2 --window 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"verdict\": \"COVERED\"") != std::string::npos);

    const std::string path = "/tmp/padiq_cli_sample.txt";
    {
        std::ofstream f(path);
        f << "# evens\n";
        for (int n = 2; n <= 100; n += 2) f << n << "\n";
    }
    auto r2 = run_cli("oracle --sample " + path + " --p 2 --r 1 --window 0");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("\"verdict\": \"COVERED\"") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: output is byte-deterministic for fixed inputs") {
    for (const std::string cmd :
         {std::string("decide sum-of-cubes --m 2 --p 7 --cross-check --bound 2000"),
          std::string("oracle --squares 2 --bound 2000 --p 5"),
          std::string("pairs search --pattern 'T*F*' --limit 150")}) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("cli: sieve finds the first witness quickly") {
    auto r = run_cli("--format tsv sieve --p-bound 213623 --h-bound 16");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("213623\t7\t2\t1708991") != std::string::npos);
}
