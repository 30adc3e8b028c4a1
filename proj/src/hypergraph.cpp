#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

namespace hyperspec {

namespace {

std::uint64_t vertex_bits(const Edge& e) {
    std::uint64_t b = 0;
    for (int v : e) b |= std::uint64_t{1} << (v - 1);
    return b;
}

void require_small(int n) {
    if (n > 64) throw Error(Errc::CapExceeded, "hypergraphs above 64 vertices are out of range");
}

/// Lexicographic rank of each k-subset of [n], indexed by vertex bitmask.
std::vector<std::int32_t> rank_table(int n, int k) {
    std::vector<std::int32_t> table(std::size_t{1} << n, -1);
    auto subsets = all_k_subsets(n, k);
    for (std::size_t i = 0; i < subsets.size(); ++i) table[vertex_bits(subsets[i])] = static_cast<std::int32_t>(i);
    return table;
}

bool mask_less(const EdgeMask& a, const EdgeMask& b) {
    for (std::size_t w = a.size(); w-- > 0;)
        if (a[w] != b[w]) return a[w] < b[w];
    return false;
}

}  // namespace

VertexSet::VertexSet(std::vector<int> ids, int n) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw Error(Errc::BadSetSize, "vertex set has a repeated id");
    for (int v : ids_)
        if (v < 1 || v > n) throw Error(Errc::BadSetSize, "vertex id " + std::to_string(v) + " outside [1, n]");
}

bool VertexSet::contains(int v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 1) throw Error(Errc::BadSize, "need n >= 1 and k >= 1");
}

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges) : Hypergraph(n, k) {
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != k)
            throw Error(Errc::BadSize, "edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k) + "-uniform hypergraph");
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw Error(Errc::BadSize, "edge with a repeated vertex");
        if (e.front() < 1 || e.back() > n) throw Error(Errc::BadSize, "edge vertex outside [1, n]");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw Error(Errc::BadSize, "repeated edge");
    edges_ = std::move(edges);
}

bool Hypergraph::has_edge(const Edge& e) const {
    Edge s = e;
    std::sort(s.begin(), s.end());
    return std::binary_search(edges_.begin(), edges_.end(), s);
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_)
        for (int v : e) ++d[static_cast<std::size_t>(v - 1)];
    return d;
}

Hypergraph Hypergraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw Error(Errc::BadSize, "permutation length differs from n");
    {
        auto check = perm;
        std::sort(check.begin(), check.end());
        for (int i = 0; i < n_; ++i)
            if (check[static_cast<std::size_t>(i)] != i + 1) throw Error(Errc::BadSize, "not a permutation of [n]");
    }
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        Edge img;
        img.reserve(e.size());
        for (int v : e) img.push_back(perm[static_cast<std::size_t>(v - 1)]);
        out.push_back(std::move(img));
    }
    return Hypergraph(n_, k_, std::move(out));
}

std::vector<Edge> all_k_subsets(int n, int k) {
    std::vector<Edge> out;
    if (k < 0 || k > n) return out;
    Edge e(static_cast<std::size_t>(k));
    std::iota(e.begin(), e.end(), 1);
    for (;;) {
        out.push_back(e);
        int i = k - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++e[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Hypergraph complete_hypergraph(int n, int k) { return Hypergraph(n, k, all_k_subsets(n, k)); }

Tensor adjacency_tensor(const Hypergraph& h) {
    Tensor t(static_cast<std::size_t>(h.k()), static_cast<std::size_t>(h.n()));
    const Rational entry(BigInt(1), factorial(static_cast<unsigned>(h.k() - 1)));
    Index idx(static_cast<std::size_t>(h.k()));
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) idx[i] = static_cast<std::size_t>(e[i] - 1);
        do {
            t[idx] = entry;
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return t;
}

Hypergraph complement(const Hypergraph& h) {
    std::vector<Edge> out;
    for (auto& e : all_k_subsets(h.n(), h.k()))
        if (!h.has_edge(e)) out.push_back(std::move(e));
    return Hypergraph(h.n(), h.k(), std::move(out));
}

std::size_t count_simplices(const Hypergraph& h) {
    require_small(h.n());
    std::unordered_set<std::uint64_t> edges;
    for (const auto& e : h.edges()) edges.insert(vertex_bits(e));
    std::size_t count = 0;
    for (const auto& s : all_k_subsets(h.n(), h.k() + 1)) {
        const std::uint64_t bits = vertex_bits(s);
        bool all = true;
        for (int v : s) {
            if (!edges.contains(bits & ~(std::uint64_t{1} << (v - 1)))) {
                all = false;
                break;
            }
        }
        if (all) ++count;
    }
    return count;
}

VertexSet neighbors_in(const Hypergraph& h, const VertexSet& s, const VertexSet& within) {
    if (static_cast<int>(s.size()) != h.k() - 1)
        throw Error(Errc::BadSetSize, "neighbor query needs a (k-1)-set, got size " + std::to_string(s.size()));
    std::vector<int> out;
    Edge e;
    for (int w : within) {
        if (s.contains(w)) continue;
        e.assign(s.begin(), s.end());
        e.push_back(w);
        if (h.has_edge(e)) out.push_back(w);
    }
    return VertexSet(std::move(out), h.n());
}

std::optional<std::vector<int>> is_isomorphic(const Hypergraph& g, const Hypergraph& h) {
    if (g.n() != h.n() || g.k() != h.k() || g.edge_count() != h.edge_count()) return std::nullopt;
    require_small(g.n());
    const auto dg = g.degrees();
    const auto dh = h.degrees();
    {
        auto a = dg, b = dh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::unordered_set<std::uint64_t> h_edges;
    for (const auto& e : h.edges()) h_edges.insert(vertex_bits(e));

    // Assign high-degree vertices first; edges are checked once all their
    // vertices are placed, at the vertex placed last.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dg[a] > dg[b]; });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<std::vector<const Edge*>> closing(n);
    for (const auto& e : g.edges()) {
        std::size_t last = 0;
        for (int v : e) last = std::max(last, position[static_cast<std::size_t>(v - 1)]);
        closing[last].push_back(&e);
    }

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) return true;
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || dh[w] != dg[v]) continue;
            map[v] = static_cast<int>(w);
            bool ok = true;
            for (const Edge* e : closing[depth]) {
                std::uint64_t img = 0;
                for (int u : *e) img |= std::uint64_t{1} << map[static_cast<std::size_t>(u - 1)];
                if (!h_edges.contains(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[w] = true;
                if (self(self, depth + 1)) return true;
                used[w] = false;
            }
        }
        map[v] = -1;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = map[i] + 1;
    return perm;
}

EdgeMask edge_mask(const Hypergraph& h) {
    require_small(h.n());
    const auto subsets = all_k_subsets(h.n(), h.k());
    EdgeMask mask((subsets.size() + 63) / 64, 0);
    std::size_t j = 0;
    for (const auto& e : h.edges()) {
        while (subsets[j] != e) ++j;
        mask[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return mask;
}

EdgeMask canonical_form(const Hypergraph& h, int max_vertices) {
    if (h.n() > max_vertices)
        throw Error(Errc::CapExceeded, "canonical form limited to " + std::to_string(max_vertices) + " vertices");
    const int n = h.n();
    const auto ranks = rank_table(n, h.k());
    const std::size_t words = (binomial(static_cast<unsigned>(n), static_cast<unsigned>(h.k())).get_ui() + 63) / 64;
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        std::vector<int> z;
        for (int v : e) z.push_back(v - 1);
        edges.push_back(std::move(z));
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    EdgeMask best, cur(words);
    bool have = false;
    do {
        std::fill(cur.begin(), cur.end(), 0);
        for (const auto& e : edges) {
            std::uint64_t img = 0;
            for (int v : e) img |= std::uint64_t{1} << perm[static_cast<std::size_t>(v)];
            const auto r = static_cast<std::size_t>(ranks[img]);
            cur[r / 64] |= std::uint64_t{1} << (r % 64);
        }
        if (!have || mask_less(cur, best)) {
            best = cur;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (words == 0) return {};
    return best;
}

Hypergraph from_mask(int n, int k, std::uint64_t mask) {
    std::vector<Edge> edges;
    auto subsets = all_k_subsets(n, k);
    for (std::size_t i = 0; i < subsets.size() && i < 64; ++i)
        if (mask >> i & 1) edges.push_back(subsets[i]);
    return Hypergraph(n, k, std::move(edges));
}

void enumerate_all(int n, int k, const EnumerateOptions& opts,
                   const std::function<void(std::uint64_t, const Hypergraph&)>& visit) {
    const auto subsets = all_k_subsets(n, k);
    const std::size_t e = subsets.size();
    if (e > 63) throw Error(Errc::CapExceeded, "C(n,k) = " + std::to_string(e) + " exceeds the 63-bit enumeration cap");
    std::set<EdgeMask> seen;
    auto emit = [&](std::uint64_t mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < e; ++i)
            if (mask >> i & 1) edges.push_back(subsets[i]);
        Hypergraph h(n, k, std::move(edges));
        if (opts.up_to_iso && !seen.insert(canonical_form(h)).second) return;
        visit(mask, h);
    };
    const std::uint64_t end = std::uint64_t{1} << e;
    if (!opts.edge_count) {
        for (std::uint64_t mask = 0; mask < end; ++mask) emit(mask);
        return;
    }
    const std::size_t r = *opts.edge_count;
    if (r > e) return;
    if (r == 0) {
        emit(0);
        return;
    }
    // Gosper's hack: masks with r bits set, increasing
    std::uint64_t mask = (std::uint64_t{1} << r) - 1;
    while (mask < end) {
        emit(mask);
        const std::uint64_t c = mask & -mask;
        const std::uint64_t rr = mask + c;
        mask = (((rr ^ mask) >> 2) / c) | rr;
    }
}

std::vector<Hypergraph> enumerate_all(int n, int k, const EnumerateOptions& opts) {
    std::vector<Hypergraph> out;
    enumerate_all(n, k, opts, [&](std::uint64_t, const Hypergraph& h) { out.push_back(h); });
    return out;
}

}  // namespace hyperspec
