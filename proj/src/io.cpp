#include "hyperspec/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hyperspec {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<long> read_ints(std::string_view text, std::size_t line) {
    std::vector<long> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
            ++i;
            continue;
        }
        long v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc() || (ptr != text.data() + text.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
            parse_error(line, "expected integers, got '" + std::string(text) + "'");
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::optional<std::pair<int, int>> header;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;
        auto ints = read_ints(line, line_no);
        if (!header) {
            if (ints.size() != 2) parse_error(line_no, "header must be 'n k'");
            if (ints[0] < 1 || ints[1] < 1 || ints[1] > ints[0] || ints[0] > 4096)
                parse_error(line_no, "need 1 <= k <= n");
            header = {static_cast<int>(ints[0]), static_cast<int>(ints[1])};
            continue;
        }
        const auto [n, k] = *header;
        if (ints.size() != static_cast<std::size_t>(k))
            parse_error(line_no, "edge must list exactly " + std::to_string(k) + " vertices");
        Edge e;
        for (std::size_t i = 0; i < ints.size(); ++i) {
            if (ints[i] < 1 || ints[i] > n) parse_error(line_no, "vertex " + std::to_string(ints[i]) + " outside [1, n]");
            if (i > 0 && ints[i] <= ints[i - 1]) parse_error(line_no, "edge vertices must be strictly ascending");
            e.push_back(static_cast<int>(ints[i]));
        }
        edges.push_back(std::move(e));
        if (pos > text.size()) break;
    }
    if (!header) throw Error(Errc::Parse, "missing 'n k' header");
    try {
        return Hypergraph(header->first, header->second, std::move(edges));
    } catch (const Error& e) {
        throw Error(Errc::Parse, e.what());
    }
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

std::string format_hypergraph(const Hypergraph& h) {
    std::string out = std::to_string(h.n()) + " " + std::to_string(h.k()) + "\n";
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::Parse, "cannot write " + path);
    out << format_hypergraph(h);
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const UniPoly& p) { return p.coeff_strings(); }

json to_json(const Tensor& t) {
    json entries = json::array();
    for (std::size_t off = 0; off < t.size(); ++off) {
        if (t.data()[off].is_zero()) continue;
        json idx = json::array();
        for (auto i : t.index_of(off)) idx.push_back(i + 1);
        entries.push_back(json::array({idx, t.data()[off].str()}));
    }
    return {{"order", t.order()}, {"dim", t.dim()}, {"entries", entries}};
}

json to_json(const Hypergraph& h) { return {{"n", h.n()}, {"k", h.k()}, {"edges", h.edges()}}; }

json to_json(const VertexSet& s) { return s.ids(); }

json to_json(const SwitchReport& r) {
    json sets = json::array();
    for (const auto& s : r.switched_sets) sets.push_back(to_json(s));
    return {{"switched_sets", sets},
            {"counts", {{"none", r.counts[0]}, {"half", r.counts[1]}, {"all", r.counts[2]}}}};
}

json to_json(const SwitchingPartition& p) { return {{"n", p.n()}, {"v1", p.v1().ids()}}; }

json to_json(const SpectralReport& r) {
    json j = {{"id", r.id},       {"n", r.n}, {"k", r.k}, {"edges", r.edge_count},
              {"simplices", r.simplex_count}};
    j["charpoly"] = r.char_poly ? to_json(*r.char_poly) : json(nullptr);
    j["echarpoly"] = r.e_char_poly ? to_json(*r.e_char_poly) : json(nullptr);
    return j;
}

json to_json(const DsVerdict& v) {
    json mates = json::array();
    for (const auto& m : v.cospectral_mates) mates.push_back(m.edges());
    return {{"target", to_json(v.target)},
            {"ds", v.all_isomorphic},
            {"examined", v.examined},
            {"candidates", v.candidates},
            {"mate_count", v.cospectral_mates.size()},
            {"mates", mates}};
}

json to_json(const Lemma4Report& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back({v.first.edges(), v.second.edges()});
    return {{"n", r.n},
            {"k", r.k},
            {"hypergraphs", r.hypergraphs},
            {"pairs", r.pairs},
            {"cospectral_pairs", r.cospectral_pairs},
            {"holds", r.violations.empty()},
            {"violations", violations}};
}

json to_json(const SimplexBoundResult& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"r", r.r},
            {"minimum", r.minimum},
            {"bound", r.bound},
            {"sets_examined", r.sets_examined},
            {"minimum_matches", r.minimum_matches},
            {"achievers_match", r.achievers_match},
            {"achievers", r.achievers}};
}

UniPoly poly_from_json(const json& j) {
    try {
        return UniPoly::from_strings(j.get<std::vector<std::string>>());
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("polynomial: ") + e.what());
    }
}

Tensor tensor_from_json(const json& j) {
    try {
        Tensor t(j.at("order").get<std::size_t>(), j.at("dim").get<std::size_t>());
        for (const auto& entry : j.at("entries")) {
            auto idx = entry.at(0).get<std::vector<std::size_t>>();
            if (idx.size() != t.order()) throw Error(Errc::Parse, "tensor index has wrong length");
            for (auto& i : idx) {
                if (i < 1 || i > t.dim()) throw Error(Errc::Parse, "tensor index out of range");
                --i;
            }
            t[idx] = Rational::parse(entry.at(1).get<std::string>());
        }
        return t;
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("tensor: ") + e.what());
    }
}

SwitchingPartition partition_from_json(const json& j) {
    try {
        return SwitchingPartition(j.at("v1").get<std::vector<int>>(), j.at("n").get<int>());
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("partition: ") + e.what());
    }
}

}  // namespace hyperspec
