#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rootposet/cli.hpp"
#include "rootposet/io.hpp"

using namespace rootposet;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

long line_count(const std::string& s) {
    long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("generate prints the poset with labeled covers") {
    RunResult r = run({"generate", "A2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "A2: 3 elements, 2 covers"));
    CHECK(contains(r.out, "height 1"));
    CHECK(contains(r.out, "via"));
    CHECK(r.err.empty());
}

TEST_CASE("width reports the witness and the matching chain cover") {
    RunResult r = run({"width", "F4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "width = 4"));
    CHECK(contains(r.out, "witness:"));
    CHECK(contains(r.out, "chain cover size = 4"));
}

TEST_CASE("antichain counting and listing") {
    CHECK(run({"antichains", "A2", "--count-only"}).out == "5\n");
    CHECK(run({"antichains", "F4", "--size", "3", "--count-only"}).out == "24\n");
    CHECK(run({"antichains", "E6", "--size", "6", "--count-only"}).out == "1\n");

    RunResult r = run({"antichains", "G2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "size 1: 6"));
    CHECK(contains(r.out, "total: 8"));

    RunResult listed = run({"antichains", "A2", "--size", "2"});
    CHECK(listed.out == "(0,1) (1,0)\n");
}

TEST_CASE("maximal antichains of a given size") {
    RunResult r = run({"maximal", "E6", "--size", "5"});
    CHECK(r.code == 0);
    CHECK(line_count(r.out) == 1);

    CHECK(run({"maximal", "B3", "--size", "2"}).out == "(0,1,2) (1,1,1)\n");
    CHECK(run({"maximal", "A3"}).code == 2); // size is required
}

TEST_CASE("level tables print corrections as notes") {
    RunResult r = run({"levels", "E6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Level | Conditions | Minimal elements | Maximal element | number"));
    CHECK(contains(r.out,
                   "note: level 3 published maximum (1 2 3 2 1 | u = 1) corrected to "
                   "(1 2 3 2 1 | u = 2)"));

    RunResult e8 = run({"levels", "E8"});
    CHECK(e8.code == 0);
    CHECK(contains(e8.out, "note: level 5 published condition d = 2, e = 3 corrected to d = 2, e = 2"));
    CHECK(contains(e8.out, "note: level 6 published maximum (2 4 6 5 4 3 12 | u = 3) corrected to "
                           "(2 4 6 5 4 3 2 | u = 3)"));

    RunResult none = run({"levels", "A5"});
    CHECK(none.code == 2);
    CHECK(contains(none.err, "no published level table"));
}

TEST_CASE("verification scopes") {
    RunResult all = run({"verify", "all"});
    CHECK(all.code == 0);
    CHECK(contains(all.out, "ALL PASS"));

    RunResult thm = run({"verify", "theorem", "--diagram", "G2"});
    CHECK(thm.code == 0);
    CHECK(contains(thm.out, "theorem G2: ok"));
    CHECK(contains(thm.out, "PASS"));

    RunResult lem = run({"verify", "lemma", "--diagram", "F4"});
    CHECK(lem.code == 0);
    CHECK(contains(lem.out, "deleted c"));

    RunResult mod = run({"verify", "models", "--diagram", "E8", "--diagram", "B3"});
    CHECK(mod.code == 0);
    CHECK(contains(mod.out, "models E8: not applicable"));
    CHECK(contains(mod.out, "models B3: ok"));

    RunResult sym = run({"verify", "symmetry", "--diagram", "D4"});
    CHECK(sym.code == 0);
    CHECK(contains(sym.out, "order 6"));

    RunResult rem = run({"verify", "remark2", "--diagram", "E7"});
    CHECK(rem.code == 0);
    CHECK(contains(rem.out, "PASS"));
}

TEST_CASE("exports stream or hit the named file") {
    RunResult json = run({"export", "A2", "--format", "json"});
    CHECK(json.code == 0);
    RootPoset back = import_json(json.out);
    CHECK(back.diagram().name() == "A2");

    const char* path = "cli_export_check.json";
    RunResult filed = run({"export", "D4", "--format", "json", "--out", path});
    CHECK(filed.code == 0);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(import_json(buf.str()).diagram().name() == "D4");
    in.close();
    std::remove(path);

    CHECK(contains(run({"export", "A2", "--format", "dot"}).out, "digraph"));
    CHECK(contains(run({"export", "A2", "--format", "tikz"}).out, "tikzpicture"));
    CHECK(run({"export", "A2", "--format", "pdf"}).code == 2);
}

TEST_CASE("usage errors and the out-of-range warning") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"generate"}).code == 2);

    RunResult bad = run({"generate", "Z5"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "error:"));

    CHECK(run({"--help"}).code == 0);
    CHECK(contains(run({"--help"}).out, "Usage"));

    RunResult big = run({"width", "A9"});
    CHECK(big.code == 0);
    CHECK(contains(big.err, "warning: A9 has rank above 8, outside the verified range"));
    CHECK(contains(big.out, "width = 9"));
}
