#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hyperspec/cli.hpp"
#include "hyperspec/io.hpp"
#include "support.hpp"

using namespace hyperspec;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hyperspec");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hyperspec_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("charpoly") {
    TempDir dir;
    auto r = run({"charpoly", dir.write("empty.hg", "3 3\n")});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["degree"] == 12);
    CHECK(poly_from_json(j["coefficients"]) == UniPoly::monomial(1, 12));
    CHECK(run({"charpoly", dir / "empty.hg", "--format", "table"}).out.find("λ^12") != std::string::npos);

    auto golden = testsupport::load_json("v1/single_edge_n3_k3.charpoly.json");
    auto edge = run({"charpoly", dir.write("edge.hg", "# single edge\n3 3\n1 2 3\n")});
    CHECK(json::parse(edge.out)["coefficients"] == golden["coefficients"]);

    auto bad = run({"charpoly", dir.write("bad.hg", "3 3\n1 2\n")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"charpoly", dir / "missing.hg"}).code == 2);
    CHECK(run({"charpoly", dir.write("k4.hg", "4 3\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n"), "--degree-cap", "20"}).code == 3);
    CHECK(run({"charpoly"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);

    const std::string out = dir / "phi.json";
    CHECK(run({"--out", out, "charpoly", dir / "edge.hg"}).code == 0);
    CHECK(json::parse(slurp(out))["coefficients"] == golden["coefficients"]);
}

TEST_CASE("echarpoly") {
    TempDir dir;
    auto golden = testsupport::load_json("v1/single_edge_n3_k3.echarpoly.json");
    auto r = run({"echarpoly", dir.write("edge.hg", "3 3\n1 2 3\n")});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["coefficients"] == golden["coefficients"]);
    CHECK(j["raw_coefficients"] == golden["raw_coefficients"]);
}

TEST_CASE("example files and verify-switch") {
    TempDir dir;
    auto r = run({"paper-example", "--n", "3", "--out", dir / "ex"});
    CHECK(r.code == 0);
    auto h = read_hypergraph_file(dir / "ex/H.hg");
    CHECK(h.edge_count() == 7);
    CHECK(read_hypergraph_file(dir / "ex/G.hg").edge_count() == 7);
    CHECK(format_hypergraph(h) == slurp(dir / "ex/H.hg"));

    auto v = run({"verify-switch", dir / "ex/H.hg", "--v1", "1,2,3,4"});
    CHECK(v.code == 0);
    auto j = json::parse(v.out);
    CHECK(j["verdict"] == true);
    CHECK(parse_hypergraph(j["G"].get<std::string>()) == read_hypergraph_file(dir / "ex/G.hg"));
    auto vp = run({"verify-switch", dir / "ex/H.hg", "--partition", dir / "ex/partition.json"});
    CHECK(vp.out == v.out);

    CHECK(run({"paper-example", "--n", "5", "--out", dir / "ex5"}).code == 0);
    auto h5 = read_hypergraph_file(dir / "ex5/H.hg");
    std::size_t f_edges = 0;
    for (const auto& e : h5.edges())
        if (e.front() > 4) ++f_edges;
    CHECK(f_edges == 3);
    CHECK(run({"paper-example", "--n", "2", "--out", dir / "ex2"}).code == 2);
    CHECK(run({"paper-example", "--n", "4", "--f", "5,6,7", "--out", dir / "ex4"}).code == 2);
    CHECK(run({"paper-example", "--n", "4", "--f", "5,6,7;6,7,8", "--out", dir / "ex4"}).code == 0);

    auto a = run({"verify-switch", dir.write("a.hg", "5 3\n1 2 3\n"), "--v1", "1,2"});
    CHECK(a.code == 4);
    CHECK(a.err.find("ConditionAViolated") != std::string::npos);
    CHECK(a.err.find("1,2,3") != std::string::npos);
    CHECK(run({"verify-switch", dir / "a.hg", "--v1", "1,2,3"}).code == 4);
    CHECK(run({"verify-switch", dir / "a.hg", "--v1", "1,9"}).code == 2);
    CHECK(run({"verify-switch", dir / "a.hg"}).code == 2);

    auto zero = run({"verify-switch", dir.write("z.hg", "6 3\n3 4 5\n4 5 6\n"), "--v1", "1,2"});
    CHECK(zero.code == 0);
    auto zj = json::parse(zero.out);
    CHECK(zj["verdict"] == true);
    CHECK(zj["unchanged"] == true);
}

TEST_CASE("simplices, cospectral, ds, lemma4, simplex-bound") {
    TempDir dir;
    std::string k6 = format_hypergraph(complete_hypergraph(6, 3));
    auto s = run({"simplices", dir.write("k6.hg", k6)});
    CHECK(json::parse(s.out)["simplices"] == 15);

    std::mt19937_64 rng(71);
    Hypergraph h = testsupport::random_hypergraph(rng, 4, 3);
    Hypergraph shuffled = h.relabeled(testsupport::random_permutation(rng, 4));
    auto c = run({"cospectral", dir.write("h.hg", format_hypergraph(h)), dir.write("s.hg", format_hypergraph(shuffled))});
    CHECK(json::parse(c.out)["cospectral"] == true);
    auto ce = run({"cospectral", "--e", dir.write("e1.hg", "3 3\n"), dir.write("e2.hg", "3 3\n1 2 3\n")});
    CHECK(json::parse(ce.out)["cospectral"] == false);
    CHECK(json::parse(ce.out)["e_cospectral"] == false);

    auto ds = run({"ds", dir.write("k4.hg", format_hypergraph(complete_hypergraph(4, 3)))});
    CHECK(ds.code == 0);
    CHECK(json::parse(ds.out)["ds"] == true);

    auto l4 = run({"lemma4", "--n", "4", "--k", "3", "--checkpoint", dir / "l4.json"});
    CHECK(json::parse(l4.out)["holds"] == true);
    CHECK(fs::exists(dir / "l4.json"));
    CHECK(run({"lemma4", "--n", "9", "--k", "3"}).code == 3);

    auto sb = run({"simplex-bound", "--n", "6", "--k", "3", "--r", "2"});
    auto sj = json::parse(sb.out);
    CHECK(sj["minimum"] == 5);
    CHECK(sj["achievers_match"] == true);
    CHECK(run({"simplex-bound", "--n", "10", "--k", "3", "--r", "4"}).code == 3);
}

TEST_CASE("output is identical across worker counts and prime seeds") {
    TempDir dir;
    auto file = dir.write("h.hg", "4 3\n1 2 3\n1 2 4\n");
    std::vector<std::vector<std::string>> commands{
        {"charpoly", file}, {"lemma4", "--n", "4", "--k", "3"}, {"ds", file}, {"echarpoly", dir.write("e.hg", "3 3\n1 2 3\n")}};
    for (const auto& cmd : commands) {
        std::string reference;
        for (const char* threads : {"1", "2", "4"}) {
            std::vector<std::string> args{"--threads", threads};
            args.insert(args.end(), cmd.begin(), cmd.end());
            auto r = run(args);
            CHECK(r.code == 0);
            if (reference.empty()) reference = r.out;
            CHECK(r.out == reference);
        }
        setenv("HYPERSPEC_PRIME_SEED", "12345", 1);
        CHECK(run(cmd).out == reference);
        unsetenv("HYPERSPEC_PRIME_SEED");
    }
    setenv("HYPERSPEC_PRIME_SEED", "abc", 1);
    CHECK(run({"charpoly", file}).code == 2);
    unsetenv("HYPERSPEC_PRIME_SEED");
    CHECK(run({"--threads", "0", "charpoly", file}).code == 2);
    CHECK(run({"--format", "xml", "charpoly", file}).code == 2);
}
