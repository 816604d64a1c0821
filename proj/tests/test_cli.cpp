#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ABELKIT_CLI_PATH
#define ABELKIT_CLI_PATH "abelkit"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs a shell command with stdout+stderr captured.
RunResult run_shell(const std::string& cmd_line) {
    static int counter = 0;
    std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = cmd_line + " > " + path + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(path.c_str());
    int code = -1;
#ifdef WIFEXITED
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
#else
    code = status;
#endif
    return {code, buf.str()};
}

// Same, with the CLI binary prepended. Quoting in `args` follows shell rules.
RunResult run_cli(const std::string& args) {
    return run_shell(std::string(ABELKIT_CLI_PATH) + " " + args);
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("decide reports verdicts with matching exit codes") {
    RunResult holds = run_cli("decide rickart 'Z/6'");
    CHECK(holds.exit_code == 0);
    CHECK(contains(holds.output, "\"holds\": true"));

    RunResult fails = run_cli("decide rickart 'Z/4'");
    CHECK(fails.exit_code == 1);
    CHECK(contains(fails.output, "\"holds\": false"));
    CHECK(contains(fails.output, "\"witness\""));
    CHECK(contains(fails.output, "kernel-splits"));

    RunResult rel = run_cli("decide strongly-rickart 'Z/4' 'Z'");
    CHECK(rel.exit_code == 0);

    RunResult exists = run_cli("decide epimorphism-exists 'Z/12' 'Z/4'");
    CHECK(exists.exit_code == 0);
    RunResult not_exists = run_cli("decide epimorphism-exists 'Z/4' 'Z/8'");
    CHECK(not_exists.exit_code == 1);
}

TEST_CASE("decide handles morphism input inline and from a file") {
    RunResult inline_arg =
        run_cli("decide kernel-fully-invariant --morphism "
                "'{\"source\":\"Z/4\",\"target\":\"Z/4\",\"matrix\":[2]}'");
    CHECK(inline_arg.exit_code == 0);

    {
        std::ofstream out("cli_morphism.json");
        out << "{\"source\":\"Z/4\",\"target\":\"Z/4\",\"matrix\":[[2]]}";
    }
    RunResult from_file = run_cli("decide section --morphism @cli_morphism.json");
    std::remove("cli_morphism.json");
    CHECK(from_file.exit_code == 1);  // multiplication by 2 does not split

    RunResult bad = run_cli("decide section --morphism '{\"source\":\"Z/4\"}'");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "parse error"));
}

TEST_CASE("bad input exits 2 with a message") {
    CHECK(run_cli("decide rickart 'Z/banana'").exit_code == 2);
    CHECK(run_cli("decide no-such-property 'Z/4'").exit_code == 2);
    CHECK(run_cli("decide weak-duo").exit_code == 2);
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
    RunResult dup = run_cli("classify-torsion '2:simple,2:pruefer'");
    CHECK(dup.exit_code == 2);
    CHECK(contains(dup.output, "duplicate prime"));
}

TEST_CASE("the hom budget reaches the deciders from flag and environment") {
    RunResult flag = run_cli("--budget 1 decide rickart 'Z/2 + Z/4'");
    CHECK(flag.exit_code == 2);
    CHECK(contains(flag.output, "budget exceeded"));

    RunResult plenty = run_cli("decide rickart 'Z/2 + Z/4'");
    CHECK(plenty.exit_code == 1);  // a real verdict (false), not a budget refusal

    const std::string cli = ABELKIT_CLI_PATH;
    RunResult env = run_shell("ABELKIT_HOM_BUDGET=1 " + cli + " decide rickart 'Z/2 + Z/4'");
    CHECK(env.exit_code == 2);
    CHECK(contains(env.output, "budget exceeded"));

    RunResult flag_wins = run_shell("ABELKIT_HOM_BUDGET=1 " + cli +
                                    " --budget 1000000 decide rickart 'Z/2 + Z/4'");
    CHECK(flag_wins.exit_code == 1);  // the flag overrides the starved environment

    RunResult bad_env = run_shell("ABELKIT_HOM_BUDGET=soup " + cli + " decide rickart 'Z/2'");
    CHECK(bad_env.exit_code == 2);
    CHECK(contains(bad_env.output, "not an integer"));
}

TEST_CASE("classify and explain print the closed forms") {
    RunResult c = run_cli("classify 'Z/30' 'Z + Z/2'");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.output, "squarefree-cyclic"));
    CHECK(contains(c.output, "mixed-free-and-torsion"));

    RunResult e = run_cli("explain 'Z/2 + Z/3'");
    CHECK(e.exit_code == 0);
    CHECK(contains(e.output, "group: Z/6"));
    CHECK(contains(e.output, "strongly self-Rickart: yes"));

    RunResult inf = run_cli("explain 'Z'");
    CHECK(inf.exit_code == 0);
    CHECK(contains(inf.output, "not applicable (infinite morphism set)"));
}

TEST_CASE("audit and ring-audit exit zero exactly on agreement") {
    RunResult audit = run_cli("audit --max-order 8");
    CHECK(audit.exit_code == 0);
    CHECK(contains(audit.output, "\"passed\": true"));

    RunResult ring = run_cli("ring-audit 'Z/4'");
    CHECK(ring.exit_code == 0);
    CHECK(contains(ring.output, "\"agree\": true"));
    CHECK(contains(ring.output, "\"module_strongly\": false"));
}

TEST_CASE("verify emits JSON lines plus a summary and honors --format table") {
    RunResult v = run_cli("verify --suite known-cases --suite resource-budgets --max-order 8");
    CHECK(v.exit_code == 0);
    std::istringstream lines(v.output);
    std::string line;
    int json_lines = 0;
    while (std::getline(lines, line))
        if (!line.empty() && line.front() == '{') ++json_lines;
    CHECK(json_lines == 3);  // two suites + one summary
    CHECK(contains(v.output, "\"suite\":\"known-cases\""));
    CHECK(contains(v.output, "\"passed\":true"));

    RunResult t = run_cli("verify --suite weak-duo-laws --max-order 8 --format table");
    CHECK(t.exit_code == 0);
    CHECK(contains(t.output, "PASS  weak-duo-laws"));

    RunResult list = run_cli("verify --list");
    CHECK(list.exit_code == 0);
    CHECK(contains(list.output, "smith-normal-form"));
    CHECK(contains(list.output, "classification-audit"));
}
