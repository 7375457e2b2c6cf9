#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shknot/cli.hpp"
#include "shknot/core.hpp"
#include "support/gen.hpp"

using namespace shknot;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/shknot_cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("classify the unit square") {
    std::string path = tmp_file("square.knotw", "lattice: sh\nx^1 y^1 x^-1 y^-1\n");
    CliRun r = run({"classify", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("type: unknot") != std::string::npos);
    CHECK(r.out.find("sticks: 4") != std::string::npos);
    CHECK(r.out.find("edges: 4") != std::string::npos);
    CHECK(r.out.find("determinant: 1") != std::string::npos);

    CliRun j = run({"classify", path, "--json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"type\": \"unknot\"") != std::string::npos);
}

TEST_CASE("classify rejects malformed input, naming token and offset") {
    std::string path = tmp_file("bad.knotw", "lattice: sh\nx^1 q^oops\n");
    CliRun r = run({"classify", path});
    CHECK(r.code == 1);
    CHECK(r.err.find("q^oops") != std::string::npos);
    CHECK(r.err.find("offset") != std::string::npos);
}

TEST_CASE("transform cubic to sh and back reproduces the file") {
    std::string word = "x^2 y^1 z^2 x^-2 y^-1 z^-2";
    std::string path = tmp_file("tower.knotw", "lattice: cubic\n" + word + "\n");
    std::string shpath = "/tmp/shknot_cli_tower_sh.knotw";
    CliRun r1 = run({"transform", path, "--to", "sh", "-o", shpath});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("sticks: 6 -> 6") != std::string::npos);
    std::string backpath = "/tmp/shknot_cli_tower_back.knotw";
    CliRun r2 = run({"transform", shpath, "--to", "cubic", "-o", backpath});
    CHECK(r2.code == 0);
    std::ifstream orig(path), back(backpath);
    std::stringstream so, sb;
    so << orig.rdbuf();
    sb << back.rdbuf();
    CHECK(so.str() == sb.str());
}

TEST_CASE("transform sh with z sticks requires --rewrite") {
    std::string path =
        tmp_file("hex.knotw", "lattice: sh\nx^1 y^1 z^1 x^-1 y^-1 z^-1\n");
    CliRun r = run({"transform", path, "--to", "cubic"});
    CHECK(r.code == 1);
    CHECK(r.err.find("ZSticksPresent") != std::string::npos);
    CliRun r2 = run({"transform", path, "--to", "cubic", "--rewrite"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("lattice: cubic") != std::string::npos);
}

TEST_CASE("reduce square by a corner move; fixpoint exits 2") {
    std::string path = tmp_file("square2.knotw", "lattice: sh\nx^1 y^1 x^-1 y^-1\n");
    std::string outp = "/tmp/shknot_cli_tri.knotw";
    std::string trace = "/tmp/shknot_cli_tri_trace.jsonl";
    CliRun r = run({"reduce", path, "--move", "corner", "-o", outp, "--trace", trace});
    CHECK(r.code == 0);
    std::ifstream t(trace);
    std::string line;
    std::getline(t, line);
    CHECK(line.find("\"move_tag\":\"corner_to_z\"") != std::string::npos);
    CHECK(line.find("\"sticks_delta\":-1") != std::string::npos);

    // the triangle has no further reducible xy corner
    CliRun r2 = run({"reduce", outp, "--move", "corner"});
    CHECK(r2.code == 2);
}

TEST_CASE("bounds subcommand prints exact values and ceilings") {
    CliRun r = run({"bounds", "--e-cubic", "24"});
    CHECK(r.code == 0);
    CHECK(r.out.find("12.750") != std::string::npos);
    CHECK(r.out.find("-> 13") != std::string::npos);
    CliRun r2 = run({"bounds", "--s-cubic", "12"});
    CHECK(r2.out.find("sqrt(57)-3") != std::string::npos);
    CHECK(r2.out.find("-> 5") != std::string::npos);
    CliRun r3 = run({"bounds", "--s-cubic", "4"});
    CHECK(r3.out.find("-> 2") != std::string::npos);
    CliRun r4 = run({"bounds"});
    CHECK(r4.code == 1);
}

TEST_CASE("render square produces four segments and no gaps") {
    std::string path = tmp_file("square3.knotw", "lattice: sh\nx^1 y^1 x^-1 y^-1\n");
    CliRun r = run({"render", path});
    CHECK(r.code == 0);
    size_t lines = 0, pos = 0;
    while ((pos = r.out.find("<line", pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 4);
    // deterministic output
    CliRun r2 = run({"render", path});
    CHECK(r.out == r2.out);
}

TEST_CASE("enumerate tiny census through the cli") {
    CliRun r = run({"enumerate", "--max-len", "1", "--expect-theorem"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"counts\"") != std::string::npos);
}
