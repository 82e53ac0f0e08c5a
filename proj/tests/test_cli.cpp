#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "omt/experiment/csv.hpp"

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output; // stdout + stderr, interleaved
};

CmdResult run_cmd(const std::string& args) {
    const std::string cmd = std::string(OMTEST_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe)) r.output += buf;
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string last_line(const std::string& text) {
    std::istringstream in{text};
    std::string line, last;
    while (std::getline(in, line)) {
        if (!line.empty()) last = line;
    }
    return last;
}

std::string temp_path(const char* name) {
    return std::string("/tmp/omtest_cli_") + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out{path};
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in{path};
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cmd("").exit_code == 2);
    CHECK(run_cmd("run").exit_code == 2);               // --config required
    CHECK(run_cmd("verify").exit_code == 2);            // subcommand required
    CHECK(run_cmd("verify improvement --family equal-split").exit_code == 2);
    CHECK(run_cmd("frobnicate").exit_code == 2);
}

TEST_CASE("shortcut oracle passes and reports on stdout") {
    const CmdResult r =
        run_cmd("verify shortcut-oracle --family addis --n 6 --batch 2 --vectors 40");
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.output) == "PASS");
    CHECK(r.output.find("mismatches=0") != std::string::npos);
}

TEST_CASE("negative fixtures fail loudly with exit 1") {
    const CmdResult pred =
        run_cmd("verify predictability --family equal-split --n 4 --vectors 50");
    CHECK(pred.exit_code == 1);
    CHECK(last_line(pred.output) == "FAIL");

    const CmdResult cons = run_cmd(
        "verify consonance --family alpha-spending --gamma list:0,1 --n 4 --vectors 50");
    CHECK(cons.exit_code == 1);
    CHECK(last_line(cons.output) == "FAIL");

    const CmdResult back =
        run_cmd("verify predictability --family backward-graph --n 5 --vectors 50");
    CHECK(back.exit_code == 1);
    CHECK(last_line(back.output) == "FAIL");
}

TEST_CASE("run: config errors exit 2 with a line diagnostic") {
    const std::string cfg = temp_path("bad.cfg");
    write_file(cfg, "procedure = addis-spending\nn = 100\ntrials = 5\nseed = 1\n"
                    "lambda = 0.95\n");
    const CmdResult r = run_cmd("run --config " + cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 5: lambda must lie in [alpha*tau, tau)") !=
          std::string::npos);

    CHECK(run_cmd("run --config /does/not/exist.cfg").exit_code == 2);
}

TEST_CASE("run: writes a parseable CSV with one row per grid point") {
    const std::string cfg = temp_path("ok.cfg");
    const std::string out = temp_path("ok.csv");
    write_file(cfg, "procedure = addis-spending, closed-addis-spending\n"
                    "n = 60\n"
                    "trials = 40\n"
                    "seed = 5\n"
                    "batch_size = 1, 6\n"
                    "pi_A = 0.4\n");
    const CmdResult r = run_cmd("run --config " + cfg + " --out " + out);
    CHECK(r.exit_code == 0);
    const omt::sim::MetricsTable table = omt::experiment::parse_csv(read_file(out));
    REQUIRE(table.rows.size() == 4); // 2 procedures x 2 batch sizes
    // Sorted by (procedure, batch, pi): addis rows first.
    CHECK(table.rows[0].procedure == "addis-spending");
    CHECK(table.rows[0].batch_size == 1);
    CHECK(table.rows[1].batch_size == 6);
    CHECK(table.rows[2].procedure == "closed-addis-spending");
    // b=1: closure changes nothing, bit for bit.
    CHECK(table.rows[0].power == table.rows[2].power);
    CHECK(table.rows[0].fwer == table.rows[2].fwer);
}

TEST_CASE("run: thread count does not change a byte of the CSV") {
    const std::string cfg = temp_path("thr.cfg");
    write_file(cfg, "procedure = addis-spending\n"
                    "n = 50\n"
                    "trials = 30\n"
                    "seed = 12\n"
                    "batch_size = 5\n");
    const std::string out1 = temp_path("thr1.csv");
    const std::string out8 = temp_path("thr8.csv");
    CHECK(run_cmd("run --config " + cfg + " --threads 1 --out " + out1).exit_code == 0);
    CHECK(run_cmd("run --config " + cfg + " --threads 8 --out " + out8).exit_code == 0);
    CHECK(read_file(out1) == read_file(out8));
}

TEST_CASE("improvement verification passes for both procedure pairs") {
    const CmdResult addis = run_cmd(
        "verify improvement --family addis --n 40 --batch 10 --streams 25 --seed 2");
    CHECK(addis.exit_code == 0);
    CHECK(last_line(addis.output) == "PASS");

    const CmdResult spending = run_cmd(
        "verify improvement --family alpha-spending --n 40 --streams 25 --seed 2");
    CHECK(spending.exit_code == 0);
    CHECK(last_line(spending.output) == "PASS");
}
