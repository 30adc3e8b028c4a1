#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/resultant.hpp"

namespace hyperspec {

struct SpectralReport {
    std::string id;
    int n = 0;
    int k = 0;
    std::size_t edge_count = 0;
    std::size_t simplex_count = 0;
    std::optional<UniPoly> char_poly;
    std::optional<UniPoly> e_char_poly;
};

/// Counts always; polynomials only when they fit the caps.
SpectralReport spectral_report(const Hypergraph& h, const SpectralOptions& opts = {}, bool with_e = false,
                               std::string id = {});

/// Exact equality of characteristic polynomials; different n is never cospectral.
bool are_cospectral(const Hypergraph& g, const Hypergraph& h, const SpectralOptions& opts = {});

/// Equality of normalized E-characteristic polynomials.
bool are_e_cospectral(const Hypergraph& g, const Hypergraph& h, const SpectralOptions& opts = {});

/// Thread-safe characteristic-polynomial cache keyed by canonical form.
class PolyCache {
public:
    std::optional<UniPoly> find(const EdgeMask& key) const;
    void insert(const EdgeMask& key, const UniPoly& poly);
    std::size_t size() const;
    std::map<EdgeMask, UniPoly> snapshot() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<EdgeMask, UniPoly> table_;
};

/// char_poly through the cache.
UniPoly cached_char_poly(const Hypergraph& h, PolyCache& cache, const SpectralOptions& opts);

/// Anything comparable for equality that stands in for the spectrum.
using Fingerprint = std::function<UniPoly(const Hypergraph&)>;

struct FingerprintRecord {
    Hypergraph graph;
    UniPoly fingerprint;
};

struct Lemma4Violation {
    Hypergraph first;
    Hypergraph second;
};

struct Lemma4Report {
    int n = 0;
    int k = 0;
    std::size_t hypergraphs = 0;
    std::size_t pairs = 0;
    std::size_t cospectral_pairs = 0;
    std::vector<Lemma4Violation> violations;
};

/// Checks "equal fingerprint => equal edge and simplex counts" over every
/// pair of the given records.
Lemma4Report lemma4_check(const std::vector<FingerprintRecord>& records);

struct ScanOptions {
    SpectralOptions spectral;
    /// Optional checkpoint file; resumes from it when present.
    std::string checkpoint;
    /// Masks between checkpoint writes.
    std::size_t checkpoint_every = 64;
};

/// lemma4_check over every labeled k-uniform hypergraph on [n].
Lemma4Report lemma4_scan(int n, int k, const ScanOptions& opts = {});

struct DsVerdict {
    Hypergraph target;
    std::vector<Hypergraph> cospectral_mates;
    bool all_isomorphic = true;
    std::size_t examined = 0;    // hypergraphs enumerated
    std::size_t candidates = 0;  // survivors of the cheap invariants
};

struct DsOptions {
    ScanOptions scan;
    /// Filter by edge and simplex count before comparing polynomials.
    bool prune = true;
    /// Replaces the characteristic polynomial; used for harness self-tests.
    Fingerprint fingerprint;
};

/// Collects every labeled hypergraph on the same (n, k) whose fingerprint
/// equals the target's and checks each one for isomorphism with it.
DsVerdict ds_verify(const Hypergraph& target, const DsOptions& opts = {});

struct SimplexBoundResult {
    int n = 0;
    int k = 0;
    int r = 0;
    std::size_t minimum = 0;
    std::size_t bound = 0;  // sum_{i<r} (n-k-i)
    std::vector<std::vector<Edge>> achievers;
    std::size_t sets_examined = 0;
    bool minimum_matches = false;
    /// Every achiever shares k-1 common vertices, and every r-set sharing
    /// k-1 common vertices is an achiever.
    bool achievers_match = false;
};

inline constexpr std::size_t kSimplexBoundMaxSets = 5'000'000;

/// Brute force over all r-subsets of E(K_n^k). Throws CapExceeded.
SimplexBoundResult simplex_destruction_min(int n, int k, int r);

struct DisjointUnionReport {
    Hypergraph target;
    DsVerdict verdict;
};

/// K_{k+1}^k plus `isolated` isolated vertices, DS-checked over its (n, k)
/// universe. Only k = 3 with n <= 5 is in range.
DisjointUnionReport disjoint_union_ds_check(int k, int isolated = 1, const DsOptions& opts = {});

}  // namespace hyperspec
