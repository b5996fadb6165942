#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

#include "dht/cylinder.hpp"
#include "dht/graph.hpp"
#include "dht/json_io.hpp"

using namespace dht;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DHT_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/dht_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("cli gen output parses back and is deterministic") {
    auto a = run_cli("gen cube-boundary -m 2 -n 3");
    REQUIRE(a.status == 0);
    Graph g = graph_from_json(a.out);
    CHECK(g.size() == 26);
    // Round trip: the emitted file reproduces the in-memory graph.
    CHECK(g == cube_boundary(2, 3));
    CHECK(a.out == graph_to_json(cube_boundary(2, 3)));

    auto b = run_cli("gen cube-boundary -m 2 -n 3");
    CHECK(a.out == b.out);  // byte-identical across runs

    auto fg = run_cli("gen f-graph -m 2 -n 1");
    REQUIRE(fg.status == 0);
    CHECK(graph_from_json(fg.out).size() == 5);
}

TEST_CASE("cli check distance-criterion") {
    auto gen = run_cli("gen interval -m 10");
    std::string path = temp_file("i10.json", gen.out);
    auto ok = run_cli("check distance-criterion " + path +
                      " --a 0 --a 1 --a 2 --a 3 --a 4 --a 5 --a 6"
                      " --b 4 --b 5 --b 6 --b 7 --b 8 --b 9 --b 10 --n 3");
    CHECK(ok.status == 0);
    auto fail = run_cli("check distance-criterion " + path +
                        " --a 0 --a 1 --a 2 --a 3 --a 4 --a 5 --a 6"
                        " --b 4 --b 5 --b 6 --b 7 --b 8 --b 9 --b 10 --n 4");
    CHECK(fail.status == 1);
}

TEST_CASE("cli homology and budget refusal") {
    auto gen = run_cli("gen cycle -L 5");
    REQUIRE(gen.status == 0);
    std::string path = temp_file("c5.json", gen.out);

    auto hom = run_cli("homology " + path + " -k 1");
    REQUIRE(hom.status == 0);
    CHECK(hom.out.find("H_0 = Z") != std::string::npos);
    CHECK(hom.out.find("H_1 = Z") != std::string::npos);

    auto refused = run_cli("homology " + path + " -k 1 --budget 10");
    CHECK(refused.status == 3);
    CHECK(refused.out.find("refused") != std::string::npos);
}

TEST_CASE("cli check iso") {
    auto cyl = run_cli("gen cylinder -m 2 --span boundary-inclusion --bm 2 --bn 1");
    REQUIRE(cyl.status == 0);
    auto bd = run_cli("gen cube-boundary -m 2 -n 2");
    REQUIRE(bd.status == 0);
    std::string pa = temp_file("cyl.json", cyl.out);
    std::string pb = temp_file("bd22.json", bd.out);
    auto ok = run_cli("check iso -a " + pa + " -b " + pb);
    CHECK(ok.status == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    auto self_check = run_cli("check iso -a " + pa + " -b " + pa);
    CHECK(self_check.status == 0);

    auto c6 = run_cli("gen cycle -L 6");
    std::string pc = temp_file("c6.json", c6.out);
    auto bad = run_cli("check iso -a " + pa + " -b " + pc);
    CHECK(bad.status == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli check skeletal-pushout on the collapse counterexample") {
    // I1 -> C3, I1 -> I0, pushout is a single edge.
    std::string square = R"({
      "G": {"vertices": ["a","b"], "edges": [["a","b"]]},
      "H": {"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"],["a","c"]]},
      "K": {"vertices": ["ab"], "edges": []},
      "L": {"vertices": ["ab","c"], "edges": [["ab","c"]]},
      "maps": {
        "GH": {"a": "a", "b": "b"},
        "GK": {"a": "ab", "b": "ab"},
        "HL": {"a": "ab", "b": "ab", "c": "c"},
        "KL": {"ab": "ab"}
      }
    })";
    std::string path = temp_file("square.json", square);
    auto fail = run_cli("check skeletal-pushout --square " + path + " --n 1");
    CHECK(fail.status == 1);
    CHECK(fail.out.find("FAIL") != std::string::npos);
    auto pass = run_cli("check skeletal-pushout --square " + path + " --n 0");
    CHECK(pass.status == 0);
}

TEST_CASE("cli fseq") {
    auto red = run_cli("fseq reduce -m 8 \"((7;1+,3-),(0;2-))\"");
    REQUIRE(red.status == 0);
    CHECK(red.out == "((7;1+,2-,3-))\n");

    auto exp = run_cli("fseq expand -m 8 \"((8;1+,3-),(0;2-))\" --count");
    REQUIRE(exp.status == 0);
    CHECK(exp.out == "48\n");

    auto cnt = run_cli("fseq count -m 3 -n 2 --interior");
    REQUIRE(cnt.status == 0);
    CHECK(cnt.out == "49\n");

    auto bad = run_cli("fseq reduce -m 8 \"((7;1)\"");
    CHECK(bad.status == 2);
    CHECK(bad.out.find("^") != std::string::npos);
}

TEST_CASE("cli nerve counts") {
    auto gen = run_cli("gen interval -m 1");
    std::string path = temp_file("i1.json", gen.out);
    auto nerve = run_cli("nerve " + path + " --max-dim 2");
    REQUIRE(nerve.status == 0);
    CHECK(nerve.out.find("dim 0: 2 cubes") != std::string::npos);
    CHECK(nerve.out.find("dim 1: 4 cubes") != std::string::npos);
    CHECK(nerve.out.find("dim 2: 16 cubes") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2") {
    auto bad = run_cli("gen no-such-kind");
    CHECK(bad.status == 2);
}

TEST_CASE("cli rp2 generator") {
    auto out = run_cli("gen rp2-gamma -m 3");
    REQUIRE(out.status == 0);
    Graph g = graph_from_json(out.out);
    CHECK(g.size() == 1801);
    CHECK(g.edge_count() > 2700);
}

TEST_CASE("cli check face-identity") {
    auto gen = run_cli("gen cycle -L 5");
    std::string path = temp_file("c5b.json", gen.out);
    auto ok = run_cli("check face-identity " + path + " --max-dim 2");
    CHECK(ok.status == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);
}

TEST_CASE("cli boundary dump") {
    auto gen = run_cli("gen cycle -L 5");
    std::string path = temp_file("c5c.json", gen.out);
    auto hom = run_cli("homology " + path + " -k 0 --dump-boundary /tmp/dht_test_dump");
    REQUIRE(hom.status == 0);
    std::ifstream d1("/tmp/dht_test_dump.d1.txt");
    REQUIRE(d1.good());
    std::string header;
    std::getline(d1, header);
    CHECK(header == "# 5 10");
    int row, col;
    long long val;
    int entries = 0;
    while (d1 >> row >> col >> val) {
        CHECK((val == 1 || val == -1));
        CHECK(row < 5);
        CHECK(col < 10);
        ++entries;
    }
    CHECK(entries == 20);
}
