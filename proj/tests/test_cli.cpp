#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Capture stdout and the exit code of a CLI invocation (stderr kept separate).
RunResult run(const std::string& args) {
    const std::string cmd = std::string(OMCG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("omcg_cli_" + name);
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kU23 = "+0+\n+-0\n0++\n0--\n-+0\n-0-\n";

} // namespace

TEST_CASE("check exit codes") {
    const auto good = write_temp("u23.txt", kU23);
    CHECK(run("check " + good.string()).exit_code == 0);
    CHECK(run("check " + good.string()).output == "PASS\n");

    const auto zero = write_temp("zero.txt", "000\n");
    const RunResult r = run("check " + zero.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.rfind("FAIL C0", 0) == 0);

    const auto bad = write_temp("bad.txt", "+x0\n");
    CHECK(run("check " + bad.string()).exit_code == 2);

    CHECK(run("check /no/such/file.txt").exit_code == 2);
}

TEST_CASE("resource budget exit code") {
    const auto good = write_temp("u23b.txt", kU23);
    CHECK(run("closure " + good.string() + " --max-covectors 4").exit_code == 3);
}

TEST_CASE("hypothesis exit code") {
    const auto c2bad = write_temp("c2bad.txt", "0+0\n0-0\n0++\n0--\n");
    CHECK(run("verify-theorem " + c2bad.string()).exit_code == 4);
}

TEST_CASE("gen u2n golden") {
    const RunResult r = run("gen u2n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "++0\n+0-\n0++\n0--\n-0+\n--0\n");
}

TEST_CASE("gen matrix reproduces U(2,3) from its defining matrix") {
    const auto m = write_temp("m.txt", "1 0 1\n0 1 1\n");
    const RunResult r = run("gen matrix " + m.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == kU23);
}

TEST_CASE("graph dot output matches the golden file") {
    const auto good = write_temp("u23c.txt", kU23);
    const RunResult r = run("graph " + good.string() + " --kind cocircuit");
    CHECK(r.exit_code == 0);
    std::ifstream golden(std::string(OMCG_GOLDEN_DIR) + "/u23_cocircuit.dot");
    REQUIRE(golden.good());
    std::ostringstream buf;
    buf << golden.rdbuf();
    CHECK(r.output == buf.str());
}

TEST_CASE("empty system yields an empty graph document") {
    const auto empty = write_temp("empty.txt", "# ground: a,b\n");
    const RunResult r = run("graph " + empty.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "graph cocircuit {\n}\n");
    const RunResult t = run("graph " + empty.string() + " --kind tope");
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("v0 [label=\"00\"]") != std::string::npos);
    CHECK(t.output.find("--") == std::string::npos); // no edges
}

TEST_CASE("contract emits the two-line file") {
    const auto good = write_temp("u23d.txt", kU23);
    const RunResult r = run("contract " + good.string() + " --elements e0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "++\n--\n");
    CHECK(run("contract " + good.string() + " --elements nope").exit_code == 2);
}

TEST_CASE("hull emits the 3-vertex path") {
    const auto good = write_temp("u23e.txt", kU23);
    const RunResult r = run("hull " + good.string() + " --vertices 0++,+-0 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"+0+\"") != std::string::npos);
    CHECK(r.output.find("\"0++\"") != std::string::npos);
    CHECK(r.output.find("\"+-0\"") != std::string::npos);
    CHECK(r.output.find("\"-0-\"") == std::string::npos);
}

TEST_CASE("verify-theorem exit codes") {
    const auto good = write_temp("u23f.txt", kU23);
    CHECK(run("verify-theorem " + good.string()).exit_code == 0);

    // negative instance: both sides fail, so the equivalence still holds
    const auto neg = write_temp("neg.txt", "0++\n0--\n+0+\n-0-\n");
    const RunResult r = run("verify-theorem " + neg.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("agree (i)<=>(iii): yes") != std::string::npos);
    CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("closure lists the covectors as a system file") {
    const auto good = write_temp("u23g.txt", kU23);
    const RunResult r = run("closure " + good.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "+++\n+0+\n+-+\n+-0\n+--\n0++\n000\n0--\n-++\n-+0\n-+-\n-0-\n---\n");
}

TEST_CASE("bench emits one row per size") {
    const RunResult r = run("bench u2n 4 6");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.output) lines += c == '\n';
    CHECK(lines == 4); // header + 3 rows
    CHECK(run("bench cyclic 3 4 5").exit_code == 0);
    CHECK(run("bench u2n 4").exit_code == 2);
}

TEST_CASE("commands are byte-deterministic across reruns and job counts") {
    const auto good = write_temp("u23h.txt", kU23);
    for (const std::string args :
         {std::string("gen u2n 5"), std::string("gen random --n 4 --pairs 3 --seed 9"),
          std::string("verify-theorem ") + good.string() + " --format json",
          std::string("bench u2n 4 8"), std::string("closure ") + good.string() + " --format json"}) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
    const RunResult j1 = run("verify-theorem " + good.string() + " --jobs 1 --format json");
    const RunResult j4 = run("verify-theorem " + good.string() + " --jobs 4 --format json");
    const RunResult j13 = run("verify-theorem " + good.string() + " --jobs 13 --format json");
    CHECK(j1.output == j4.output);
    CHECK(j1.output == j13.output);
    CHECK(j1.exit_code == j4.exit_code);
}
