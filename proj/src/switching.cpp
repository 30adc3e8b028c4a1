#include "hyperspec/switching.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hyperspec {

namespace {

std::string join(const std::vector<int>& ids) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    return os.str();
}

/// Every size-r subset of `pool` (ascending pool gives ascending subsets).
std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > static_cast<int>(pool.size())) return out;
    for (const auto& pick : all_k_subsets(static_cast<int>(pool.size()), r)) {
        std::vector<int> s;
        s.reserve(pick.size());
        for (int i : pick) s.push_back(pool[static_cast<std::size_t>(i - 1)]);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

SwitchingPartition::SwitchingPartition(std::vector<int> v1, int n) : n_(n) {
    try {
        v1_ = VertexSet(std::move(v1), n);
    } catch (const Error& e) {
        throw Error(Errc::BadPartition, e.what());
    }
    if (v1_.size() == 0 || static_cast<int>(v1_.size()) == n)
        throw Error(Errc::BadPartition, "V1 and V2 must both be nonempty");
    if (v1_.size() % 2 != 0) throw Error(Errc::OddV1, "|V1| = " + std::to_string(v1_.size()) + " is odd");
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!v1_.contains(v)) rest.push_back(v);
    v2_ = VertexSet(std::move(rest), n);
}

std::vector<int> SwitchingPartition::block_order() const {
    std::vector<int> out(v1_.begin(), v1_.end());
    out.insert(out.end(), v2_.begin(), v2_.end());
    return out;
}

SwitchReport validate(const Hypergraph& h, const SwitchingPartition& p) {
    if (h.n() != p.n()) throw Error(Errc::BadPartition, "partition is over a different vertex count");
    for (const auto& e : h.edges()) {
        auto inside = std::count_if(e.begin(), e.end(), [&](int v) { return p.v1().contains(v); });
        if (inside >= 2) throw Error(Errc::ConditionAViolated, "edge {" + join(e) + "} has " + std::to_string(inside) + " vertices in V1");
    }
    const std::size_t n1 = p.v1().size();
    SwitchReport report;
    for (auto& s : subsets_of(p.v2().ids(), h.k() - 1)) {
        VertexSet set(s, h.n());
        const std::size_t count = neighbors_in(h, set, p.v1()).size();
        if (count == 0) {
            ++report.counts[0];
        } else if (count == n1) {
            ++report.counts[2];
        } else if (2 * count == n1) {
            ++report.counts[1];
            report.switched_sets.push_back(std::move(set));
        } else {
            throw Error(Errc::ConditionBViolated, "{" + join(s) + "} has " + std::to_string(count) +
                                                      " neighbors in V1 (allowed 0, " + std::to_string(n1 / 2) +
                                                      ", " + std::to_string(n1) + ")");
        }
    }
    return report;
}

Hypergraph switch_hypergraph(const Hypergraph& h, const SwitchingPartition& p) {
    const auto report = validate(h, p);
    std::set<Edge> edges(h.edges().begin(), h.edges().end());
    for (const auto& s : report.switched_sets) {
        for (int u : p.v1()) {
            Edge e(s.begin(), s.end());
            e.push_back(u);
            std::sort(e.begin(), e.end());
            if (!edges.erase(e)) edges.insert(std::move(e));
        }
    }
    return Hypergraph(h.n(), h.k(), std::vector<Edge>(edges.begin(), edges.end()));
}

RationalMatrix switching_matrix(const SwitchingPartition& p) {
    const auto n = static_cast<std::size_t>(p.n());
    RationalMatrix m(2, n);
    const Rational off(2, static_cast<long>(p.v1().size()));
    for (int a : p.v1())
        for (int b : p.v1()) m(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = a == b ? off - 1 : off;
    for (int v : p.v2()) m(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(v - 1)) = 1;
    return m;
}

SimilarityResult verify_similarity(const Hypergraph& h, const Hypergraph& g, const SwitchingPartition& p) {
    SimilarityResult out;
    if (h.n() != g.n() || h.k() != g.k() || h.n() != p.n()) {
        out.mismatch = std::vector<int>{};
        return out;
    }
    const Tensor b = mat_sim(switching_matrix(p), adjacency_tensor(h));
    const Tensor ag = adjacency_tensor(g);
    for (std::size_t off = 0; off < b.size(); ++off) {
        if (b.data()[off] != ag.data()[off]) {
            std::vector<int> idx;
            for (auto i : b.index_of(off)) idx.push_back(static_cast<int>(i) + 1);
            out.mismatch = std::move(idx);
            return out;
        }
    }
    out.holds = true;
    return out;
}

ExamplePair example_pair(int n, std::optional<std::vector<Edge>> f) {
    if (n < 3) throw Error(Errc::BadSize, "the example needs n >= 3, got " + std::to_string(n));
    auto u = [](int i) { return i; };
    auto v = [](int j) { return 4 + j; };
    std::vector<Edge> family;
    if (f) {
        for (const auto& e : *f) {
            if (e.size() != 3) throw Error(Errc::BadSize, "F edges must be triples");
            for (int x : e)
                if (x < v(1) || x > v(n)) throw Error(Errc::BadSize, "F edges must lie inside the v block");
        }
        family = *f;
        for (int j = 4; j <= n; ++j) {
            bool covered = std::any_of(family.begin(), family.end(),
                                       [&](const Edge& e) { return std::find(e.begin(), e.end(), v(j)) != e.end(); });
            if (!covered) throw Error(Errc::BadSize, "F leaves v" + std::to_string(j) + " uncovered");
        }
    } else {
        for (int i = 1; i + 2 <= n; ++i) family.push_back({v(i), v(i + 1), v(i + 2)});
    }
    std::vector<Edge> he = {{v(1), v(2), u(2)}, {v(1), v(2), u(3)}, {v(2), v(3), u(2)},
                            {v(2), v(3), u(4)}, {v(1), v(3), u(3)}, {v(1), v(3), u(4)}};
    std::vector<Edge> ge = {{v(1), v(2), u(1)}, {v(1), v(2), u(4)}, {v(2), v(3), u(1)},
                            {v(2), v(3), u(3)}, {v(1), v(3), u(1)}, {v(1), v(3), u(2)}};
    he.insert(he.end(), family.begin(), family.end());
    ge.insert(ge.end(), family.begin(), family.end());
    const int total = n + 4;
    return ExamplePair{Hypergraph(total, 3, he), Hypergraph(total, 3, ge), SwitchingPartition({1, 2, 3, 4}, total)};
}

}  // namespace hyperspec
