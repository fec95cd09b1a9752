#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arcspace/cli.hpp"
#include "arcspace/scene.hpp"

using namespace arcspace;

namespace {

const char* kCuspScene = R"(# fixtures
[field] char = 0
[variety C] vars = x, y  dim = 1  eqs = y^2 - x^3
[variety P]
vars = x, y
dim = 2
[subscheme O] on = C  gens = x, y
[arc g] on = C  coords = t^2, t^3
[morphism bl] source = P  target = P  map = x, x*y
)";

std::string write_temp(const std::string& text) {
    static int counter = 0;
    std::string path = "cli_fixture_" + std::to_string(counter++) + ".scene";
    std::ofstream out(path);
    out << text;
    return path;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(std::vector<std::string> args) {
    std::vector<char*> argv;
    args.insert(args.begin(), "arcspace");
    for (std::string& a : args) argv.push_back(a.data());
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int code = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

std::string strip_timing(const std::string& s) {
    std::istringstream in(s);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("time-ms:", 0) != 0) out << line << "\n";
    return out.str();
}

}  // namespace

TEST_CASE("polynomial expressions") {
    Field f = rationals();
    std::vector<std::string> xy = {"x", "y"};
    MultiPoly x = MultiPoly::variable(f, 2, 0), y = MultiPoly::variable(f, 2, 1);

    CHECK(parse_poly("y^2 - x^3", f, xy) == y * y - x * x * x);
    CHECK(parse_poly("(x + y)^2", f, xy) == x * x + x * y + x * y + y * y);
    CHECK(parse_poly("2*x*y - 3", f, xy) ==
          x * y + x * y - MultiPoly::constant(f, 2, 3));
    CHECK(parse_poly("-x", f, xy) == -x);
    CHECK(parse_poly("x*(y - 1)", f, xy) == x * y - x);

    CHECK_THROWS_AS((void)parse_poly("z + 1", f, xy), ParseError);
    CHECK_THROWS_AS((void)parse_poly("x +", f, xy), ParseError);
    CHECK_THROWS_AS((void)parse_poly("x) ", f, xy), ParseError);
    CHECK_THROWS_AS((void)parse_poly("(x", f, xy), ParseError);
}

TEST_CASE("scene parsing") {
    Scene sc = parse_scene(kCuspScene);
    CHECK(sc.field == rationals());
    CHECK(sc.varieties.size() == 2);
    const AffineVariety& C = sc.variety("C");
    CHECK(C.ambient_dim == 2);
    CHECK(C.dim == 1);
    CHECK(C.ngens() == 1);
    CHECK(sc.variety("P").gens.empty());
    CHECK(sc.subscheme("O").gens.size() == 2);
    const Scene::NamedArc& g = sc.arc("g");
    CHECK(g.on == "C");
    CHECK(g.arc.coords[0].size() == 3);
    CHECK(g.arc.coords[1].size() == 4);
    CHECK(sc.morphism("bl").components.size() == 2);

    // entries on one line or spread across lines parse the same
    Scene sc2 = parse_scene("[field] char = 5\n[variety C]\nvars = x, y\ndim = 1\n"
                            "eqs = y^2 - x^3\n");
    CHECK(sc2.variety("C").ngens() == 1);
    CHECK(sc2.variety("C").dim == 1);
    CHECK(sc2.field == prime_field(5));
}

TEST_CASE("scene validation") {
    CHECK_THROWS_AS((void)parse_scene("[variety X] vars = x  dim = 1"), ParseError);
    CHECK_THROWS_AS((void)parse_scene("[field] char = 0\n[widget W] on = X"), ParseError);
    CHECK_THROWS_AS((void)parse_scene("[field] char = 0\n[variety X] vars = x"),
                    ParseError);
    CHECK_THROWS_AS(
        (void)parse_scene("[field] char = 0\n[subscheme Z] on = X  gens = x"),
        ParseError);
    // an arc that does not satisfy the variety equations is rejected on load
    CHECK_THROWS_AS((void)parse_scene("[field] char = 0\n"
                                      "[variety C] vars = x, y  dim = 1  eqs = y^2 - x^3\n"
                                      "[arc bad] on = C  coords = t, t\n"),
                    ParseError);
    CHECK_THROWS_AS((void)load_scene("does_not_exist.scene"), ParseError);
}

TEST_CASE("invariants command") {
    std::string path = write_temp(kCuspScene);
    RunResult r = run({"invariants", "--scene", path, "--arc", "g", "--subscheme", "O"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a: 3") != std::string::npos);
    CHECK(r.out.find("torsion: [3]") != std::string::npos);
    CHECK(r.out.find("ord O: 2") != std::string::npos);
    CHECK(run({"invariants", "--scene", path, "--arc", "missing"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("mather command") {
    std::string path = write_temp(std::string(kCuspScene) +
                                  "[arc h] on = P  coords = t^2, 1 + t\n");
    RunResult r = run({"mather", "--scene", path, "--morphism", "bl", "--arc", "h"});
    CHECK(r.code == 0);
    CHECK(r.out.find("e: 2") != std::string::npos);
    CHECK(r.out.find("bound c-a <= e: yes") != std::string::npos);
    // arc on the wrong variety
    CHECK(run({"mather", "--scene", path, "--morphism", "bl", "--arc", "g"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("count-jets command") {
    std::string path = write_temp("[field] char = 5\n"
                                  "[variety C] vars = x, y  dim = 1  eqs = y^2 - x^3\n"
                                  "[arc g] on = C  coords = t^2, t^3\n");
    RunResult r = run({"count-jets", "--scene", path, "--variety", "C", "--level", "0",
                       "--q", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("jets: 5") != std::string::npos);
    RunResult fib = run({"count-jets", "--scene", path, "--variety", "C", "--level", "4",
                         "--q", "5", "--fiber", "g@3", "--liftable"});
    CHECK(fib.code == 0);
    CHECK(fib.out.find("jets: 25") != std::string::npos);
    CHECK(fib.out.find("liftable: 5") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify command") {
    CHECK(run({"verify", "cov-exact", "identity"}).code == 0);
    RunResult e2 = run({"verify", "cov-exact", "blowup"});
    CHECK(e2.code == 0);
    CHECK(e2.out.find("lhs: (L^2 - 1)/(1 - L^-3)") != std::string::npos);
    CHECK(e2.out.find("equal: yes") != std::string::npos);
    // no exact strata on the singular-source example
    CHECK(run({"verify", "cov-exact", "weighted-blowup"}).code == 2);
    CHECK(run({"verify", "nonsense", "blowup"}).code == 2);
    CHECK(run({"verify", "cov-exact", "unknown-example"}).code == 2);

    RunResult fib = run({"verify", "fibration", "identity", "--q", "3", "--P", "1"});
    CHECK(fib.code == 0);
    CHECK(fib.out.find("pass: yes") != std::string::npos);
    CHECK(run({"verify", "stability", "blowup", "--q", "2"}).code == 0);
    CHECK(run({"verify", "additivity", "double-blowup", "--level", "20"}).code == 0);
    CHECK(run({"verify", "additivity", "blowup"}).code == 1);
    CHECK(run({"verify", "fibers", "blowup", "--q", "2"}).code == 0);
}

TEST_CASE("reports are byte-stable and render identically in json") {
    RunResult a = run({"verify", "cov-count", "blowup", "--q", "2", "--P", "1"});
    RunResult b = run({"verify", "cov-count", "blowup", "--q", "2", "--P", "1"});
    RunResult c = run({"verify", "cov-count", "blowup", "--q", "2", "--P", "1",
                       "--threads", "4"});
    CHECK(a.code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
    CHECK(strip_timing(a.out) == strip_timing(c.out));

    RunResult j = run({"verify", "cov-count", "blowup", "--q", "2", "--P", "1", "--json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"pass\": true") != std::string::npos);
    CHECK(j.out.find("sums") != std::string::npos);
}
