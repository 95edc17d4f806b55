#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "isys/cli.hpp"
#include "isys/io.hpp"
#include "support/fixtures.hpp"

using namespace isys;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(ISYS_FIXTURES) + "/" + name; }

std::string scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "isys_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("verify fixtures")
{
    auto d = run({"verify", "--map", fixture("doubling.map"), "--system", fixture("doubling.system")});
    CHECK(d.code == 0);
    CHECK(contains(d.out, "pairs: 10\nedges: 30\nverdict: VERIFIED"));
    auto t = run({"verify", "--map", fixture("tent.map"), "--system", fixture("tent.system")});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "pairs: 4\nedges: 8\nverdict: VERIFIED"));
}

TEST_CASE("verify exit codes follow the verdict")
{
    auto t = fixtures::tent_system();
    t.add_edge("1", "3");
    write_file(scratch("false_edge.system"), dump_system(t));
    auto r = run({"verify", "--map", fixture("tent.map"), "--system", scratch("false_edge.system")});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "verdict: FAILED"));
    CHECK(contains(r.out, "1 -> 3: exit fails"));

    write_file(scratch("shift.map"), "{\"space\":\"line\",\"vertices\":[[\"-1\",\"-1/4\"],[\"2\",\"5/4\"]]}");
    write_file(scratch("chain.system"),
               "{\"space\":\"line\",\"pairs\":{\"a\":{\"N\":[[\"0\",\"1\"]],\"L\":[]}},\"edges\":[[\"a\",\"a\"]]}");
    auto u = run({"verify", "--map", scratch("shift.map"), "--system", scratch("chain.system")});
    CHECK(u.code == 2);
    CHECK(contains(u.out, "verdict: UNDECIDED"));
}

TEST_CASE("corrupted input reports a location")
{
    std::string text = read_file(fixture("tent.system"));
    text.replace(text.find("\"-1/25\""), 7, "-0.04");
    write_file(scratch("corrupt.system"), text);
    auto r = run({"verify", "--map", fixture("tent.map"), "--system", scratch("corrupt.system")});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "corrupt.system:7:"));

    write_file(scratch("truncated.system"), text.substr(0, 40));
    CHECK(run({"verify", "--map", fixture("tent.map"), "--system", scratch("truncated.system")}).code == 3);
    CHECK(run({"verify", "--map", fixture("missing.map"), "--system", fixture("tent.system")}).code == 3);
    CHECK(run({"verify", "--map", fixture("doubling.map"), "--system", fixture("tent.system")}).code == 3);
}

TEST_CASE("usage errors and help")
{
    CHECK(run({}).code == 3);
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"verify", "--bogus"}).code == 3);
    CHECK(run({"verify", "--system", fixture("tent.system")}).code == 3);
    auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(contains(h.out, "detect-orbit"));
}

TEST_CASE("analyze reports the graph")
{
    auto d = run({"analyze", "--map", fixture("doubling.map"), "--system", fixture("doubling.system"), "--words",
                  fixture("doubling.words"), "--no-timestamp"});
    CHECK(d.code == 0);
    for (int i = 0; i < 10; ++i)
        CHECK(contains(d.out, "\n  " + std::to_string(i) + ": (0, 1);"));
    CHECK(contains(d.out, "full shift factor of f^3: entropy >= log(2)/3"));

    auto t = run({"analyze", "--map", fixture("tent.map"), "--system", fixture("tent.system"), "--no-timestamp"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "4 -> 1: H0 [], H1 [[-1]]"));
    CHECK(contains(t.out, "disjoint subgraph: (1,2,3,4)"));
    CHECK(contains(t.out, "entropy lower bound: log(2)/1"));

    auto dot = scratch("trivial.dot");
    auto x = run({"analyze", "--map", fixture("tent.map"), "--system", fixture("trivial.system"), "--dot", dot});
    CHECK(x.code == 0);
    CHECK(contains(x.out, "cocyclic subshift empty (bound 3)"));
    CHECK(contains(read_file(dot), "style=dashed"));
}

TEST_CASE("analyze refuses unverified systems and long bounds")
{
    auto t = fixtures::tent_system();
    t.add_edge("1", "3");
    write_file(scratch("false_edge.system"), dump_system(t));
    CHECK(run({"analyze", "--map", fixture("tent.map"), "--system", scratch("false_edge.system")}).code == 1);
    CHECK(run({"analyze", "--map", fixture("tent.map"), "--system", fixture("tent.system"), "--max-len", "25"}).code ==
          3);
}

TEST_CASE("reports are deterministic without the timestamp")
{
    std::vector<std::string> args{"analyze", "--map", fixture("doubling.map"), "--system", fixture("doubling.system"),
                                  "--no-timestamp"};
    CHECK(run(args).out == run(args).out);
    args.pop_back();
    CHECK(contains(run(args).out, "# generated "));
}

TEST_CASE("construct writes a verified system")
{
    auto out = scratch("construct");
    auto r = run({"construct", "--map", fixture("tent.map"), "--template", "7/27,6/27", "--delta", "1/27", "--out", out,
                  "--no-timestamp"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "distinct slices: 81"));
    auto sys = parse_system(read_file(out + "/construct.system"));
    CHECK(verify(sys, fixtures::tent_map()).verdict == Verdict::Verified);
    CHECK(run({"verify", "--map", fixture("tent.map"), "--system", out + "/construct.system"}).code == 0);

    auto coarse = run({"construct", "--map", fixture("tent.map"), "--template", "7/27,6/27", "--delta", "1/3"});
    CHECK(coarse.code == 4);
    CHECK(contains(coarse.err, "suggested delta: 1/9"));
    CHECK(run({"construct", "--map", fixture("tent.map"), "--template", "7/27,6/27", "--delta", "0.1"}).code == 3);
    CHECK(run({"construct", "--map", fixture("tent.map"), "--template", "7/27,6/27", "--delta", "1/20"}).code == 3);
    CHECK(run({"construct", "--map", fixture("tent.map"), "--delta", "1/27"}).code == 3);
}

TEST_CASE("construct from a product pair file")
{
    auto f = fixtures::doubling_map();
    write_file(scratch("strip.pair"), dump_product_pair(strip_template(f, rat(7, 20), rat(5, 20))));
    auto r = run({"construct", "--map", fixture("doubling.map"), "--product-pair", scratch("strip.pair"), "--delta",
                  "1/20", "--no-timestamp"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verdict: VERIFIED"));
}

TEST_CASE("detect-orbit")
{
    auto d = run({"detect-orbit", "--map", fixture("doubling.map"), "--system", fixture("doubling.system"), "--words",
                  fixture("doubling.words")});
    CHECK(d.code == 0);
    CHECK(contains(d.out, "CERTIFICATE"));
    CHECK(contains(d.out, "1 point(s) of period dividing 3 following the cycle cores: 1/7"));

    auto x = run({"detect-orbit", "--map", fixture("tent.map"), "--system", fixture("trivial.system"), "--words",
                  fixture("trivial.words")});
    CHECK(x.code == 2);
    CHECK(contains(x.out, "NO-CERTIFICATE"));

    auto bad = run({"detect-orbit", "--map", fixture("doubling.map"), "--system", fixture("doubling.system"), "--words",
                    fixture("doubling_bad.words")});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "no edge 1 -> 5"));
}

TEST_CASE("export reproduces the fixture files")
{
    auto out = scratch("export");
    for (const char* name : {"doubling", "tent"}) {
        REQUIRE(run({"export", name, "--out", out}).code == 0);
        CHECK(read_file(out + "/" + name + ".map") == read_file(fixture(std::string(name) + ".map")));
        CHECK(read_file(out + "/" + name + ".system") == read_file(fixture(std::string(name) + ".system")));
    }
    REQUIRE(run({"export", "trivial", "--out", out}).code == 0);
    CHECK(read_file(out + "/trivial.system") == read_file(fixture("trivial.system")));
    CHECK(run({"export", "tent", "--epsilon", "1e-2"}).code == 3);
    CHECK(run({"export", "logistic"}).code == 3);
    auto canon = run({"export", "--system", fixture("tent.system")});
    CHECK(canon.out == read_file(fixture("tent.system")));
}
