#include "hyperspec/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperspec/io.hpp"

namespace hyperspec {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInput = 2;
constexpr int kExitCaps = 3;
constexpr int kExitMath = 4;

int exit_code(Errc c) {
    switch (c) {
        case Errc::Parse:
        case Errc::BadSize:
        case Errc::BadSetSize:
        case Errc::BadPartition:
        case Errc::DimMismatch:
            return kExitInput;
        case Errc::CapExceeded:
        case Errc::DegreeCapExceeded:
            return kExitCaps;
        case Errc::OddV1:
        case Errc::ConditionAViolated:
        case Errc::ConditionBViolated:
        case Errc::TooManyDegeneratePoints:
        case Errc::DegenerateMinor:
        case Errc::ZeroVector:
            return kExitMath;
        default:
            return kExitOther;
    }
}

struct Config {
    unsigned threads = 1;
    std::size_t degree_cap = 128;
    std::size_t dim_cap = 512;
    std::string format = "json";
    std::string out;

    SpectralOptions spectral() const {
        SpectralOptions o;
        o.degree_cap = degree_cap;
        o.dim_cap = dim_cap;
        o.workers = threads;
        if (const char* seed = std::getenv("HYPERSPEC_PRIME_SEED")) {
            try {
                o.prime_seed = std::stoull(seed);
            } catch (const std::exception&) {
                throw Error(Errc::Parse, std::string("HYPERSPEC_PRIME_SEED is not an integer: ") + seed);
            }
        }
        return o;
    }
};

std::string table_value(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

/// Flat "key: value" rendering of a JSON object; polynomials are pretty-printed.
std::string render_table(const json& j) {
    std::ostringstream os;
    for (const auto& [key, value] : j.items()) {
        os << key << ": ";
        if (value.is_array() && !value.empty() && value.front().is_string() && key.find("coefficients") != std::string::npos)
            os << poly_from_json(value).pretty();
        else
            os << table_value(value);
        os << '\n';
    }
    return os.str();
}

void emit(const Config& cfg, const json& j, std::ostream& out) {
    const std::string text = cfg.format == "table" ? render_table(j) : j.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Error(Errc::Parse, "cannot write " + cfg.out);
    f << text;
}

json poly_json(const UniPoly& p) {
    return {{"degree", p.degree()}, {"coefficients", to_json(p)}};
}

std::vector<Edge> parse_family(const std::string& text) {
    std::vector<Edge> edges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        Edge e;
        std::stringstream es(item);
        std::string v;
        while (std::getline(es, v, ',')) {
            try {
                e.push_back(std::stoi(v));
            } catch (const std::exception&) {
                throw Error(Errc::Parse, "bad vertex id '" + v + "' in --f");
            }
        }
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return edges;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra of uniform hypergraphs", "hyperspec"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--degree-cap", cfg.degree_cap, "Largest characteristic polynomial degree")->check(CLI::PositiveNumber);
    app.add_option("--dim-cap", cfg.dim_cap, "Largest Macaulay matrix dimension")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", cfg.out, "Output file (paper-example: output directory)");

    std::string file, file2;

    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial");
    charpoly->add_option("file", file, "Hypergraph file")->required();

    auto* echarpoly = app.add_subcommand("echarpoly", "E-characteristic polynomial");
    echarpoly->add_option("file", file, "Hypergraph file")->required();

    bool with_e = false;
    auto* cospectral = app.add_subcommand("cospectral", "Compare characteristic polynomials");
    cospectral->add_option("first", file, "Hypergraph file")->required();
    cospectral->add_option("second", file2, "Hypergraph file")->required();
    cospectral->add_flag("--e", with_e, "Also compare E-characteristic polynomials");

    auto* simplices = app.add_subcommand("simplices", "Count simplices");
    simplices->add_option("file", file, "Hypergraph file")->required();

    std::vector<int> v1;
    std::string partition_file;
    auto* verify = app.add_subcommand("verify-switch", "Validate, switch and check P A_H P^T = A_G");
    verify->add_option("file", file, "Hypergraph file")->required();
    auto* v1_opt = verify->add_option("--v1", v1, "Switched block, e.g. 1,2,3,4")->delimiter(',');
    auto* part_opt = verify->add_option("--partition", partition_file, "partition.json");
    v1_opt->excludes(part_opt);

    int example_n = 3;
    std::string family;
    auto* example = app.add_subcommand("paper-example", "Write the E-cospectral example pair");
    example->add_option("--n", example_n, "Size of the v block")->required();
    example->add_option("--f", family, "Custom F as '5,6,7;6,7,8'");

    std::string checkpoint;
    bool no_prune = false;
    auto* ds = app.add_subcommand("ds", "Check that a hypergraph is determined by its spectrum");
    ds->add_option("file", file, "Hypergraph file")->required();
    ds->add_option("--checkpoint", checkpoint, "Checkpoint file");
    ds->add_flag("--no-prune", no_prune, "Skip the edge and simplex count filter");

    int scan_n = 0, scan_k = 0, scan_r = 0;
    auto* lemma4 = app.add_subcommand("lemma4", "Cospectral pairs share edge and simplex counts");
    lemma4->add_option("--n", scan_n, "Vertices")->required();
    lemma4->add_option("--k", scan_k, "Edge size")->required();
    lemma4->add_option("--checkpoint", checkpoint, "Checkpoint file");

    auto* bound = app.add_subcommand("simplex-bound", "Fewest simplices destroyed by deleting r edges of K_n^k");
    bound->add_option("--n", scan_n, "Vertices")->required();
    bound->add_option("--k", scan_k, "Edge size")->required();
    bound->add_option("--r", scan_r, "Deleted edges")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        const SpectralOptions so = cfg.spectral();
        if (charpoly->parsed()) {
            const auto h = read_hypergraph_file(file);
            emit(cfg, poly_json(char_poly(adjacency_tensor(h), so)), out);
        } else if (echarpoly->parsed()) {
            const auto a = adjacency_tensor(read_hypergraph_file(file));
            const UniPoly raw = e_char_poly_raw(a, so);
            json j = poly_json(raw.normalized());
            j["raw_coefficients"] = to_json(raw);
            emit(cfg, j, out);
        } else if (cospectral->parsed()) {
            const auto g = read_hypergraph_file(file);
            const auto h = read_hypergraph_file(file2);
            json j = {{"cospectral", are_cospectral(g, h, so)}};
            if (with_e) j["e_cospectral"] = are_e_cospectral(g, h, so);
            emit(cfg, j, out);
        } else if (simplices->parsed()) {
            const auto h = read_hypergraph_file(file);
            emit(cfg, {{"n", h.n()}, {"k", h.k()}, {"edges", h.edge_count()}, {"simplices", count_simplices(h)}}, out);
        } else if (verify->parsed()) {
            const auto h = read_hypergraph_file(file);
            if (v1.empty() && partition_file.empty()) throw Error(Errc::BadPartition, "give --v1 or --partition");
            std::optional<SwitchingPartition> p;
            if (!partition_file.empty()) {
                std::ifstream in(partition_file);
                if (!in) throw Error(Errc::Parse, "cannot open " + partition_file);
                json pj;
                try {
                    in >> pj;
                } catch (const json::exception& e) {
                    throw Error(Errc::Parse, partition_file + ": " + e.what());
                }
                p.emplace(partition_from_json(pj));
            } else {
                p.emplace(v1, h.n());
            }
            if (p->n() != h.n()) throw Error(Errc::BadPartition, "partition is for a different vertex count");
            const SwitchReport report = validate(h, *p);
            const Hypergraph g = switch_hypergraph(h, *p);
            const SimilarityResult sim = verify_similarity(h, g, *p);
            json j = {{"verdict", sim.holds},
                      {"partition", to_json(*p)},
                      {"report", to_json(report)},
                      {"unchanged", g == h},
                      {"G", format_hypergraph(g)}};
            j["mismatch"] = sim.mismatch ? json(*sim.mismatch) : json(nullptr);
            emit(cfg, j, out);
        } else if (example->parsed()) {
            std::optional<std::vector<Edge>> f;
            if (!family.empty()) f = parse_family(family);
            const ExamplePair ex = example_pair(example_n, f);
            const std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
            std::filesystem::create_directories(dir);
            write_hypergraph_file((dir / "H.hg").string(), ex.h);
            write_hypergraph_file((dir / "G.hg").string(), ex.g);
            {
                std::ofstream pf(dir / "partition.json", std::ios::binary);
                pf << to_json(ex.partition).dump() << '\n';
            }
            Config to_stdout = cfg;
            to_stdout.out.clear();
            emit(to_stdout,
                 {{"n", example_n},
                  {"H_edges", ex.h.edge_count()},
                  {"G_edges", ex.g.edge_count()},
                  {"files", {"H.hg", "G.hg", "partition.json"}}},
                 out);
        } else if (ds->parsed()) {
            DsOptions o;
            o.scan.spectral = so;
            o.scan.checkpoint = checkpoint;
            o.prune = !no_prune;
            emit(cfg, to_json(ds_verify(read_hypergraph_file(file), o)), out);
        } else if (lemma4->parsed()) {
            ScanOptions o;
            o.spectral = so;
            o.checkpoint = checkpoint;
            emit(cfg, to_json(lemma4_scan(scan_n, scan_k, o)), out);
        } else if (bound->parsed()) {
            emit(cfg, to_json(simplex_destruction_min(scan_n, scan_k, scan_r)), out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitOther;
    }
    return kExitOk;
}

}  // namespace hyperspec
