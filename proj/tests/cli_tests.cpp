#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "nclam/enumerate.hpp"
#include "nclam/partition.hpp"

using namespace nclam;

namespace {

struct RunResult {
    int exit_code = 0;
    std::string output;
};

// Runs the built binary with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(NCLAM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/nclam_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("sample emits the unique n=1 partition") {
    auto r = run_cli("sample --model ncp --n 1 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n=1; 0\n");
}

TEST_CASE("random subcommands require an explicit seed") {
    CHECK(run_cli("sample --model ncp --n 4").exit_code != 0);
    CHECK(run_cli("grow --model ncp --n 4 --out /tmp/nclam_test_noseed.txt").exit_code != 0);
}

TEST_CASE("sample output is byte-identical across invocations") {
    auto a = run_cli("sample --model pair --n 5 --seed 31 --count 200");
    auto b = run_cli("sample --model pair --n 5 --seed 31 --count 200");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output != run_cli("sample --model pair --n 5 --seed 32 --count 200").output);
}

TEST_CASE("pair sample frequencies at n=2 are balanced") {
    auto r = run_cli("sample --model pair --n 2 --seed 1 --count 10000");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    int adjacent = 0, total = 0;
    while (std::getline(in, line)) {
        ++total;
        if (line == "n=4; 0 1 | 2 3") ++adjacent;
    }
    CHECK(total == 10000);
    double freq = static_cast<double>(adjacent) / total;
    CHECK(freq > 0.48);
    CHECK(freq < 0.52);
}

TEST_CASE("encode | decode is the identity on the n=6 catalog") {
    std::string parts = temp_path("parts.txt");
    std::string paths = temp_path("paths.txt");
    std::string back = temp_path("back.txt");
    {
        std::ostringstream body;
        for (const auto& p : enumerate_ncp(6).objects) body << p.to_line() << "\n";
        write_file(parts, body.str());
    }
    CHECK(run_cli("encode --in " + parts + " --out " + paths).exit_code == 0);
    CHECK(run_cli("decode --in " + paths + " --out " + back).exit_code == 0);
    CHECK(read_file(back) == read_file(parts));

    // empty input line -> empty output line
    write_file(parts, "\n");
    CHECK(run_cli("encode --in " + parts + " --out " + paths).exit_code == 0);
    CHECK(read_file(paths) == "\n");
}

TEST_CASE("kreweras subcommand reproduces the 10-gon complement") {
    std::string in = temp_path("fig2.txt");
    write_file(in, "n=10; 0 2 3 | 1 | 4 5 | 6 7 8 9\n");
    auto r = run_cli("kreweras --in " + in);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n=10; 0 1 | 2 | 3 5 9 | 4 | 6 | 7 | 8 frame=odd\n");
    // decode --complement agrees on the encoded line
    std::string paths = temp_path("fig2path.txt");
    CHECK(run_cli("encode --in " + in + " --out " + paths).exit_code == 0);
    auto c = run_cli("decode --complement --in " + paths);
    CHECK(c.output == r.output);
}

TEST_CASE("grow goldens and the grow/replay/render pipeline") {
    std::string traj = temp_path("traj.txt");
    auto g1 = run_cli("grow --model ncp --n 10 --seed 1 --out " + traj);
    CHECK(g1.exit_code == 0);
    CHECK(g1.output == "n=10; 0 1 9 | 2 4 7 8 | 3 | 5 6\n");

    auto rep = run_cli("replay --in " + traj);
    CHECK(rep.exit_code == 0);
    CHECK(rep.output == g1.output);

    auto all = run_cli("replay --all --in " + traj);
    CHECK(all.exit_code == 0);
    std::istringstream in(all.output);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 10);

    // pipe the final partition into render
    std::string part = temp_path("final.txt");
    std::string svg = temp_path("fig.svg");
    write_file(part, g1.output);
    CHECK(run_cli("render --in " + part + " --out " + svg + " --size 400 --overlay-kreweras")
              .exit_code == 0);
    std::string doc = read_file(svg);
    CHECK(doc.find("<svg") != std::string::npos);
    CHECK(doc.find("<path") != std::string::npos);

    auto g2 = run_cli("grow --model pair --n 10 --seed 1 --out " + traj);
    CHECK(g2.output ==
          "n=20; 0 1 | 2 17 | 3 16 | 4 7 | 5 6 | 8 13 | 9 12 | 10 11 | 14 15 | 18 19\n");
    CHECK(run_cli("replay --in " + traj).output == g2.output);
}

TEST_CASE("enumerate matches the Catalan count") {
    auto r = run_cli("enumerate --kind ncp --n 6");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        CHECK_NOTHROW(NoncrossingPartition::parse(line));
        ++lines;
    }
    CHECK(lines == catalan(6));
    auto d = run_cli("enumerate --kind dyck --n 6");
    std::istringstream din(d.output);
    lines = 0;
    while (std::getline(din, line)) ++lines;
    CHECK(lines == catalan(3));
}

TEST_CASE("uniformity subcommand passes at n=4 with a modest budget") {
    auto r = run_cli("uniformity --model ncp --n 4 --count 20000 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict=PASS") != std::string::npos);
}

TEST_CASE("converge reports distances and medians") {
    auto r = run_cli("converge --model ncp --M 64 --schedule 8,32 --seeds 3 --seed 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("d_H=") != std::string::npos);
    CHECK(r.output.find("delta=") != std::string::npos);
    CHECK(r.output.find("median m=8") != std::string::npos);
    CHECK(r.output.find("median m=32") != std::string::npos);
    // byte-determinism
    CHECK(run_cli("converge --model ncp --M 64 --schedule 8,32 --seeds 3 --seed 9").output ==
          r.output);

    // m = M gives exactly zero on every trajectory
    auto zero = run_cli("converge --model ncp --M 16 --schedule 16 --seeds 4 --seed 2");
    CHECK(zero.exit_code == 0);
    std::istringstream in(zero.output);
    std::string line;
    while (std::getline(in, line))
        CHECK(line.find("d_H=0.000000") != std::string::npos);

    // pair model mirror
    auto pair = run_cli("converge --model pair --M 64 --schedule 8,32 --seeds 3 --seed 9");
    CHECK(pair.exit_code == 0);
    CHECK(pair.output.find("median m=32") != std::string::npos);
}
