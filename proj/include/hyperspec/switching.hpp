#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

/// Split of the vertex set into V1 (the switched block) and V2.
class SwitchingPartition {
public:
    /// V2 is [n] \ V1. Throws BadPartition for ids outside [1, n], an empty V1
    /// or V1 = [n], and OddV1 when |V1| is odd.
    SwitchingPartition(std::vector<int> v1, int n);

    const VertexSet& v1() const { return v1_; }
    const VertexSet& v2() const { return v2_; }
    int n() const { return n_; }

    /// V1 ids first, then V2 ids: the block ordering of the switching matrix.
    std::vector<int> block_order() const;

private:
    int n_;
    VertexSet v1_;
    VertexSet v2_;
};

struct SwitchReport {
    /// (k-1)-subsets of V2 with exactly |V1|/2 neighbors in V1.
    std::vector<VertexSet> switched_sets;
    /// Number of (k-1)-subsets of V2 with 0, |V1|/2 and |V1| neighbors.
    std::array<std::size_t, 3> counts{};
};

/// Checks that no edge meets V1 twice and that every (k-1)-subset of V2 has
/// 0, |V1|/2 or |V1| neighbors in V1. Throws ConditionAViolated or
/// ConditionBViolated naming the witness.
SwitchReport validate(const Hypergraph& h, const SwitchingPartition& p);

/// For every half-count subset S of V2, swaps S's neighbors in V1 for the
/// other half of V1. All half-count subsets are switched together.
Hypergraph switch_hypergraph(const Hypergraph& h, const SwitchingPartition& p);

/// (2/n1) J - I on V1, identity on V2, zero across; indexed by the original
/// vertex labels (the block form when V1 = {1..n1}).
RationalMatrix switching_matrix(const SwitchingPartition& p);

struct SimilarityResult {
    bool holds = false;
    /// First index tuple (1-based) where P A_H P^T and A_G differ.
    std::optional<std::vector<int>> mismatch;
};

/// Exact check of P A_H P^T = A_G.
SimilarityResult verify_similarity(const Hypergraph& h, const Hypergraph& g, const SwitchingPartition& p);

struct ExamplePair {
    Hypergraph h;
    Hypergraph g;
    SwitchingPartition partition;
};

/// The E-cospectral pair on {u1..u4, v1..vn} with u_i -> i and v_j -> 4 + j,
/// V1 = {u1..u4}. F defaults to the consecutive triples v_i v_{i+1} v_{i+2};
/// a custom F must be 3-subsets of the v block. Throws BadSize for n < 3.
ExamplePair example_pair(int n, std::optional<std::vector<Edge>> f = std::nullopt);

}  // namespace hyperspec
