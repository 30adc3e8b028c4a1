#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/tensor.hpp"

namespace hyperspec {

/// Ascending 1-based vertex ids.
using Edge = std::vector<int>;

/// Strictly ascending subset of [n], 1-based.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts and validates; throws BadSetSize on duplicates or ids outside [1, n].
    VertexSet(std::vector<int> ids, int n);

    const std::vector<int>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool contains(int v) const;
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> ids_;
};

/// Simple k-uniform hypergraph on vertices 1..n. Edges are kept sorted
/// lexicographically, each edge ascending.
class Hypergraph {
public:
    Hypergraph(int n, int k);
    /// Validates every edge (k distinct ids in [1, n]); edges are sorted and
    /// must be pairwise distinct. Throws BadSize.
    Hypergraph(int n, int k, std::vector<Edge> edges);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(const Edge& e) const;
    std::vector<int> degrees() const;

    /// Image under the vertex map v -> perm[v-1].
    Hypergraph relabeled(const std::vector<int>& perm) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_;
    int k_;
    std::vector<Edge> edges_;
};

/// K_n^k.
Hypergraph complete_hypergraph(int n, int k);

/// Entries 1/(k-1)! at every ordering of every edge, zero elsewhere.
Tensor adjacency_tensor(const Hypergraph& h);

Hypergraph complement(const Hypergraph& h);

/// Number of (k+1)-subsets all of whose k-subsets are edges.
std::size_t count_simplices(const Hypergraph& h);

/// Vertices w in `within`, not in s, with s ∪ {w} an edge. Throws BadSetSize
/// unless |s| = k-1.
VertexSet neighbors_in(const Hypergraph& h, const VertexSet& s, const VertexSet& within);

/// A vertex bijection perm (g vertex v -> h vertex perm[v-1]) carrying E(g)
/// onto E(h), if one exists.
std::optional<std::vector<int>> is_isomorphic(const Hypergraph& g, const Hypergraph& h);

/// Edge-set bitmask over the lexicographic list of k-subsets; bit i of word
/// i/64 is the i-th subset.
using EdgeMask = std::vector<std::uint64_t>;

/// Lexicographically k-subsets of [n], 1-based.
std::vector<Edge> all_k_subsets(int n, int k);

EdgeMask edge_mask(const Hypergraph& h);

inline constexpr int kCanonicalMaxVertices = 10;

/// Minimum edge mask (compared as a big integer) over all n! relabelings.
/// Throws CapExceeded for n > max_vertices.
EdgeMask canonical_form(const Hypergraph& h, int max_vertices = kCanonicalMaxVertices);

struct EnumerateOptions {
    std::optional<std::size_t> edge_count;
    bool up_to_iso = false;
};

/// Every k-uniform hypergraph on [n], by increasing edge bitmask (bit i is the
/// i-th k-subset in lexicographic order). With up_to_iso only the first member
/// of each isomorphism class is visited. Throws CapExceeded when C(n,k) > 63.
void enumerate_all(int n, int k, const EnumerateOptions& opts,
                   const std::function<void(std::uint64_t mask, const Hypergraph&)>& visit);
std::vector<Hypergraph> enumerate_all(int n, int k, const EnumerateOptions& opts = {});

/// Hypergraph on [n] whose edges are the k-subsets selected by `mask`.
Hypergraph from_mask(int n, int k, std::uint64_t mask);

}  // namespace hyperspec
