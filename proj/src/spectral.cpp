#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "hyperspec/parallel.hpp"

namespace hyperspec {

namespace {

EdgeMask cache_key(const Hypergraph& h) {
    EdgeMask key = canonical_form(h);
    key.insert(key.begin(), {static_cast<std::uint64_t>(h.n()), static_cast<std::uint64_t>(h.k())});
    return key;
}

struct Checkpoint {
    std::uint64_t watermark = 0;
};

std::string checkpoint_kind(const char* task, int n, int k) {
    return std::string(task) + ":" + std::to_string(n) + ":" + std::to_string(k);
}

Checkpoint load_checkpoint(const std::string& path, const std::string& kind, PolyCache& cache) {
    Checkpoint cp;
    if (path.empty() || !std::filesystem::exists(path)) return cp;
    std::ifstream in(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, "checkpoint " + path + ": " + e.what());
    }
    if (j.value("kind", "") != kind) throw Error(Errc::Parse, "checkpoint " + path + " belongs to a different run");
    cp.watermark = j.at("watermark").get<std::uint64_t>();
    for (const auto& entry : j.at("cache")) {
        cache.insert(entry.at("key").get<EdgeMask>(),
                     UniPoly::from_strings(entry.at("coefficients").get<std::vector<std::string>>()));
    }
    return cp;
}

void save_checkpoint(const std::string& path, const std::string& kind, std::uint64_t watermark, const PolyCache& cache) {
    if (path.empty()) return;
    nlohmann::json j;
    j["kind"] = kind;
    j["watermark"] = watermark;
    j["cache"] = nlohmann::json::array();
    for (const auto& [key, poly] : cache.snapshot())
        j["cache"].push_back({{"key", key}, {"coefficients", poly.coeff_strings()}});
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

/// Masks of the (n, k) universe, optionally restricted to a fixed edge count.
std::vector<std::uint64_t> universe_masks(int n, int k, std::optional<std::size_t> edge_count) {
    std::vector<std::uint64_t> masks;
    EnumerateOptions eo;
    eo.edge_count = edge_count;
    enumerate_all(n, k, eo, [&](std::uint64_t mask, const Hypergraph&) { masks.push_back(mask); });
    return masks;
}

/// Fills `cache` with the characteristic polynomial of every hypergraph whose
/// mask passes `keep`, checkpointing as it goes.
void fill_cache(int n, int k, const std::vector<std::uint64_t>& masks,
                const std::function<bool(const Hypergraph&)>& keep, PolyCache& cache, const ScanOptions& opts,
                const char* task) {
    const std::string kind = checkpoint_kind(task, n, k);
    const Checkpoint cp = load_checkpoint(opts.checkpoint, kind, cache);
    const std::size_t chunk = std::max<std::size_t>(1, opts.checkpoint_every);
    std::size_t start = static_cast<std::size_t>(
        std::lower_bound(masks.begin(), masks.end(), cp.watermark) - masks.begin());
    while (start < masks.size()) {
        const std::size_t stop = std::min(masks.size(), start + chunk);
        std::map<EdgeMask, Hypergraph> todo;
        for (std::size_t i = start; i < stop; ++i) {
            Hypergraph h = from_mask(n, k, masks[i]);
            if (!keep(h)) continue;
            EdgeMask key = cache_key(h);
            if (!cache.find(key)) todo.emplace(std::move(key), std::move(h));
        }
        std::vector<std::pair<EdgeMask, Hypergraph>> work(todo.begin(), todo.end());
        std::vector<UniPoly> polys(work.size());
        SpectralOptions inner = opts.spectral;
        inner.workers = 1;
        parallel_for(work.size(), opts.spectral.workers,
                     [&](std::size_t i) { polys[i] = char_poly(adjacency_tensor(work[i].second), inner); });
        for (std::size_t i = 0; i < work.size(); ++i) cache.insert(work[i].first, polys[i]);
        const std::uint64_t watermark = stop < masks.size() ? masks[stop] : (masks.back() + 1);
        save_checkpoint(opts.checkpoint, kind, watermark, cache);
        start = stop;
    }
}

}  // namespace

SpectralReport spectral_report(const Hypergraph& h, const SpectralOptions& opts, bool with_e, std::string id) {
    SpectralReport r;
    r.id = std::move(id);
    r.n = h.n();
    r.k = h.k();
    r.edge_count = h.edge_count();
    r.simplex_count = count_simplices(h);
    const Tensor a = adjacency_tensor(h);
    try {
        r.char_poly = char_poly(a, opts);
    } catch (const Error& e) {
        if (e.code() != Errc::DegreeCapExceeded) throw;
    }
    if (with_e) {
        try {
            r.e_char_poly = e_char_poly(a, opts);
        } catch (const Error& e) {
            if (e.code() != Errc::DegreeCapExceeded) throw;
        }
    }
    return r;
}

bool are_cospectral(const Hypergraph& g, const Hypergraph& h, const SpectralOptions& opts) {
    if (g.n() != h.n() || g.k() != h.k()) return false;
    return char_poly(adjacency_tensor(g), opts) == char_poly(adjacency_tensor(h), opts);
}

bool are_e_cospectral(const Hypergraph& g, const Hypergraph& h, const SpectralOptions& opts) {
    if (g.n() != h.n() || g.k() != h.k()) return false;
    return e_char_poly(adjacency_tensor(g), opts) == e_char_poly(adjacency_tensor(h), opts);
}

std::optional<UniPoly> PolyCache::find(const EdgeMask& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void PolyCache::insert(const EdgeMask& key, const UniPoly& poly) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(key, poly);
}

std::size_t PolyCache::size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
}

std::map<EdgeMask, UniPoly> PolyCache::snapshot() const {
    std::shared_lock lock(mutex_);
    return table_;
}

UniPoly cached_char_poly(const Hypergraph& h, PolyCache& cache, const SpectralOptions& opts) {
    EdgeMask key = cache_key(h);
    if (auto hit = cache.find(key)) return *hit;
    UniPoly p = char_poly(adjacency_tensor(h), opts);
    cache.insert(key, p);
    return p;
}

Lemma4Report lemma4_check(const std::vector<FingerprintRecord>& records) {
    Lemma4Report report;
    report.hypergraphs = records.size();
    if (!records.empty()) {
        report.n = records.front().graph.n();
        report.k = records.front().graph.k();
    }
    std::vector<std::size_t> simplices;
    simplices.reserve(records.size());
    for (const auto& r : records) simplices.push_back(count_simplices(r.graph));
    for (std::size_t i = 0; i < records.size(); ++i)
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            ++report.pairs;
            if (records[i].fingerprint != records[j].fingerprint) continue;
            ++report.cospectral_pairs;
            const auto& a = records[i].graph;
            const auto& b = records[j].graph;
            if (a.n() != b.n() || a.edge_count() != b.edge_count() || simplices[i] != simplices[j])
                report.violations.push_back({a, b});
        }
    return report;
}

Lemma4Report lemma4_scan(int n, int k, const ScanOptions& opts) {
    PolyCache cache;
    const auto masks = universe_masks(n, k, std::nullopt);
    fill_cache(n, k, masks, [](const Hypergraph&) { return true; }, cache, opts, "lemma4");
    std::vector<FingerprintRecord> records;
    records.reserve(masks.size());
    for (auto mask : masks) {
        Hypergraph h = from_mask(n, k, mask);
        UniPoly p = *cache.find(cache_key(h));
        records.push_back({std::move(h), std::move(p)});
    }
    auto report = lemma4_check(records);
    report.n = n;
    report.k = k;
    return report;
}

DsVerdict ds_verify(const Hypergraph& target, const DsOptions& opts) {
    const int n = target.n();
    const int k = target.k();
    const std::size_t target_simplices = count_simplices(target);
    auto masks = universe_masks(n, k, opts.prune ? std::optional<std::size_t>(target.edge_count()) : std::nullopt);
    auto keep = [&](const Hypergraph& h) {
        return !opts.prune || count_simplices(h) == target_simplices;
    };

    DsVerdict verdict{target, {}, true, masks.size(), 0};
    std::function<UniPoly(const Hypergraph&)> fingerprint = opts.fingerprint;
    PolyCache cache;
    if (!fingerprint) {
        fill_cache(n, k, masks, keep, cache, opts.scan, "ds");
        fingerprint = [&](const Hypergraph& h) { return cached_char_poly(h, cache, opts.scan.spectral); };
    }
    const UniPoly reference = fingerprint(target);
    for (auto mask : masks) {
        Hypergraph h = from_mask(n, k, mask);
        if (!keep(h)) continue;
        ++verdict.candidates;
        if (fingerprint(h) != reference) continue;
        if (!is_isomorphic(h, target)) verdict.all_isomorphic = false;
        verdict.cospectral_mates.push_back(std::move(h));
    }
    return verdict;
}

SimplexBoundResult simplex_destruction_min(int n, int k, int r) {
    if (k < 1 || n < k + 1 || r < 1) throw Error(Errc::BadSize, "need 1 <= k < n and r >= 1");
    const auto edges = all_k_subsets(n, k);
    const auto e = static_cast<unsigned>(edges.size());
    if (static_cast<unsigned>(r) > e) throw Error(Errc::BadSize, "r exceeds the edge count of K_n^k");
    const BigInt sets = binomial(e, static_cast<unsigned>(r));
    if (sets > kSimplexBoundMaxSets)
        throw Error(Errc::CapExceeded, "C(" + std::to_string(e) + "," + std::to_string(r) + ") r-sets exceed the brute-force cap");

    // simplices through each edge
    const auto simplices = all_k_subsets(n, k + 1);
    std::vector<std::vector<std::size_t>> through(edges.size());
    for (std::size_t s = 0; s < simplices.size(); ++s)
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (std::includes(simplices[s].begin(), simplices[s].end(), edges[i].begin(), edges[i].end()))
                through[i].push_back(s);

    SimplexBoundResult out;
    out.n = n;
    out.k = k;
    out.r = r;
    long bound = 0;
    for (int i = 0; i < r; ++i) bound += n - k - i;
    out.bound = bound > 0 ? static_cast<std::size_t>(bound) : 0;

    auto shares_core = [&](const std::vector<std::size_t>& pick) {
        Edge common = edges[pick[0]];
        for (std::size_t t = 1; t < pick.size(); ++t) {
            Edge next;
            std::set_intersection(common.begin(), common.end(), edges[pick[t]].begin(), edges[pick[t]].end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        return static_cast<int>(common.size()) >= k - 1;
    };

    std::vector<std::uint32_t> stamp(simplices.size(), 0);
    std::uint32_t epoch = 0;
    std::size_t best = SIZE_MAX;
    std::vector<std::vector<std::size_t>> best_sets;
    std::vector<std::vector<std::size_t>> core_sets;
    for (const auto& pick1 : all_k_subsets(static_cast<int>(e), r)) {
        std::vector<std::size_t> pick;
        pick.reserve(pick1.size());
        for (int i : pick1) pick.push_back(static_cast<std::size_t>(i - 1));
        ++epoch;
        std::size_t destroyed = 0;
        for (auto i : pick)
            for (auto s : through[i])
                if (stamp[s] != epoch) {
                    stamp[s] = epoch;
                    ++destroyed;
                }
        ++out.sets_examined;
        if (shares_core(pick)) core_sets.push_back(pick);
        if (destroyed < best) {
            best = destroyed;
            best_sets.clear();
        }
        if (destroyed == best) best_sets.push_back(pick);
    }
    out.minimum = best;
    out.minimum_matches = bound >= 0 && best == static_cast<std::size_t>(bound);
    out.achievers_match = best_sets == core_sets;
    for (const auto& pick : best_sets) {
        std::vector<Edge> set;
        for (auto i : pick) set.push_back(edges[i]);
        out.achievers.push_back(std::move(set));
    }
    return out;
}

DisjointUnionReport disjoint_union_ds_check(int k, int isolated, const DsOptions& opts) {
    const int n = k + 1 + isolated;
    if (k != 3 || isolated < 0 || n > 5)
        throw Error(Errc::CapExceeded, "disjoint-union check is limited to k = 3 and n <= 5");
    std::vector<Edge> edges = all_k_subsets(k + 1, k);
    Hypergraph target(n, k, edges);
    return {target, ds_verify(target, opts)};
}

}  // namespace hyperspec
