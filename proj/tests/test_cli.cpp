// End-to-end tests of the command-line tool; the binary path arrives in
// the DRG_BIN environment variable.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
    const char* p = std::getenv("DRG_BIN");
    REQUIRE(p != nullptr);
    return std::string(p);
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " > cli_test_stdout.txt 2> cli_test_stderr.txt";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(raw);
    std::ifstream in("cli_test_stdout.txt");
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

}  // namespace

TEST_CASE("params: prints the expected array") {
    RunResult r = run("params --D 3 --b 1 --alpha 4 --beta 9");
    CHECK(r.code == 0);
    CHECK(r.out.find("{27,10,1;1,10,27}") != std::string::npos);

    RunResult r2 = run("params --D 3 --b 2 --alpha 1 --beta 7");
    CHECK(r2.code == 0);
    CHECK(r2.out.find("n = 512") != std::string::npos);

    RunResult r3 = run("params --D 3 --b 2 --alpha 1/2 --beta 7");
    CHECK(r3.code == 0);
    CHECK(r3.out.find("issue") != std::string::npos);  // non-integral entries flagged

    RunResult bad = run("params --D 3 --b x --alpha 1 --beta 7");
    CHECK(bad.code == 1);

    RunResult unknown = run("params --D 3 --b 1 --alpha 4 --beta 9 --frobnicate");
    CHECK(unknown.code == 1);  // unknown flags are usage errors
}

TEST_CASE("params --json is byte-stable") {
    RunResult a = run("params --D 3 --b 2 --alpha 1 --beta 7 --json");
    RunResult b = run("params --D 3 --b 2 --alpha 1 --beta 7 --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"intersection_array\": \"{49,36,16;1,6,28}\"") != std::string::npos);
}

TEST_CASE("classify: exit codes distinguish infeasible from usage errors") {
    CHECK(run("classify --D 3 --b 1 --alpha 4 --beta 9").code == 0);
    RunResult gosset = run("classify --D 3 --b 1 --alpha 4 --beta 9");
    CHECK(gosset.out.find("Gosset") != std::string::npos);

    RunResult twisted = run("classify --D 3 --b 2 --alpha 2 --beta 30");
    CHECK(twisted.code == 0);
    CHECK(twisted.out.find("Item7Region") != std::string::npos);

    RunResult inf = run("classify --D 3 --b 4 --alpha 2 --beta 1000000");
    CHECK(inf.code == 2);
    CHECK(inf.out.find("Infeasible") != std::string::npos);

    CHECK(run("classify --D 2 --b 2 --alpha 1 --beta 7").code == 1);
    CHECK(run("classify --D 3 --b 2 --alpha 1").code == 1);  // missing flag
}

TEST_CASE("scan: row count and determinism") {
    RunResult r =
        run("scan --D 3 --b 2 --alpha 0,1,2 --beta 1..200 --beta-step 1 --csv cli_scan.csv");
    CHECK(r.code == 0);
    std::ifstream in("cli_scan.csv", std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string csv1 = buf.str();
    long lines = 0;
    for (char c : csv1)
        if (c == '\n') ++lines;
    CHECK(lines == 601);  // header + 600 rows
    CHECK(csv1.substr(0, csv1.find('\r')) == "D,b,alpha,beta,tags,violated_bound_names");

    run("scan --D 3 --b 2 --alpha 0,1,2 --beta 1..200 --beta-step 1 --csv cli_scan2.csv");
    std::ifstream in2("cli_scan2.csv", std::ios::binary);
    std::ostringstream buf2;
    buf2 << in2.rdbuf();
    CHECK(csv1 == buf2.str());
    std::remove("cli_scan.csv");
    std::remove("cli_scan2.csv");

    RunResult single = run("scan --D 3 --b 2 --alpha 1 --beta 7");
    CHECK(single.code == 0);
    long rows = 0;
    for (char c : single.out)
        if (c == '\n') ++rows;
    CHECK(rows == 2);
}

TEST_CASE("build and verify round trip on the smallest flagship") {
    RunResult b = run("build --family bilinear --args 2,2,2 --out cli_h22.json");
    CHECK(b.code == 0);
    CHECK(b.out.find("16 vertices") != std::string::npos);

    RunResult v = run("verify cli_h22.json --params 2,2,1,3 --checks drg,classical,geometric");
    CHECK(v.code == 0);
    CHECK(v.out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(v.out.find("\"status\": \"fail\"") == std::string::npos);

    RunResult wrong = run("verify cli_h22.json --params 2,2,1,4 --checks classical");
    CHECK(wrong.code == 2);

    CHECK(run("verify cli_h22.json --checks not-a-check").code == 1);
    CHECK(run("verify missing_file.json --checks drg").code == 1);
    std::remove("cli_h22.json");
}

TEST_CASE("build: gosset and invalid family") {
    RunResult g = run("build --family gosset --out cli_gosset.json");
    CHECK(g.code == 0);
    CHECK(g.out.find("56 vertices") != std::string::npos);
    std::remove("cli_gosset.json");
    CHECK(run("build --family petersen --out x.json").code == 1);
}
