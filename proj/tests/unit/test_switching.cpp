#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hyperspec/io.hpp"
#include "hyperspec/switching.hpp"
#include "support.hpp"

using namespace hyperspec;

namespace {

std::vector<std::vector<int>> subsets(const std::vector<int>& pool, int r) {
    std::vector<std::vector<int>> out;
    for (const auto& idx : all_k_subsets(static_cast<int>(pool.size()), r)) {
        std::vector<int> s;
        for (int i : idx) s.push_back(pool[i - 1]);
        out.push_back(s);
    }
    return out;
}

/// Random hypergraph satisfying both switching conditions for a random even V1.
std::pair<Hypergraph, SwitchingPartition> random_switchable(std::mt19937_64& rng) {
    const int k = 3 + static_cast<int>(rng() % 2);
    const int n1 = 2 * (1 + static_cast<int>(rng() % 2));
    const int n2 = k + static_cast<int>(rng() % 3);
    const int n = n1 + n2;
    auto perm = testsupport::random_permutation(rng, n);
    std::vector<int> v1(perm.begin(), perm.begin() + n1), v2(perm.begin() + n1, perm.end());
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    std::vector<Edge> edges;
    for (auto s : subsets(v2, k - 1)) {
        std::vector<int> nbrs;
        switch (rng() % 3) {
            case 0:
                break;
            case 1: {
                auto shuffled = v1;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                nbrs.assign(shuffled.begin(), shuffled.begin() + n1 / 2);
                break;
            }
            default:
                nbrs = v1;
        }
        for (int u : nbrs) {
            Edge e = s;
            e.push_back(u);
            std::sort(e.begin(), e.end());
            edges.push_back(e);
        }
    }
    for (auto e : subsets(v2, k))
        if (rng() % 2) edges.push_back(e);
    return {Hypergraph(n, k, edges), SwitchingPartition(v1, n)};
}

/// Entrywise checks of the transformed tensor against the block structure.
void check_block_equations(const Hypergraph& h, const SwitchingPartition& p) {
    const Tensor a = adjacency_tensor(h);
    const Tensor b = mat_sim(switching_matrix(p), a);
    const Tensor g = adjacency_tensor(switch_hypergraph(h, p));
    const auto report = validate(h, p);
    std::set<std::vector<int>> half;
    for (const auto& s : report.switched_sets) half.insert(s.ids());
    for_each_index(a.order(), a.dim(), [&](const Index& idx) {
        std::vector<int> in_v1, in_v2;
        for (auto i : idx) (p.v1().contains(static_cast<int>(i) + 1) ? in_v1 : in_v2).push_back(static_cast<int>(i) + 1);
        if (in_v1.empty()) {
            CHECK(b[idx] == a[idx]);
        } else if (in_v1.size() >= 2) {
            CHECK(a[idx] == 0);
            CHECK(b[idx] == 0);
        } else {
            std::vector<int> s = in_v2;
            std::sort(s.begin(), s.end());
            const bool distinct = std::adjacent_find(s.begin(), s.end()) == s.end();
            if (!distinct) {
                CHECK(b[idx] == 0);
                return;
            }
            if (half.count(s)) {
                // complemented within V1
                Rational expect = a[idx] == 0 ? Rational(1) / Rational(factorial(h.k() - 1)) : Rational(0);
                CHECK(b[idx] == expect);
            } else {
                CHECK(b[idx] == a[idx]);
            }
        }
        CHECK(b[idx] == g[idx]);
    });
}

}  // namespace

TEST_CASE("partition validation") {
    SwitchingPartition p({3, 1}, 5);
    CHECK(p.v1() == VertexSet({1, 3}, 5));
    CHECK(p.v2() == VertexSet({2, 4, 5}, 5));
    CHECK(p.block_order() == std::vector<int>{1, 3, 2, 4, 5});
    CHECK_ERRC(SwitchingPartition({1, 2, 3}, 5), Errc::OddV1);
    CHECK_ERRC(SwitchingPartition({}, 5), Errc::BadPartition);
    CHECK_ERRC(SwitchingPartition({1, 2, 3, 4}, 4), Errc::BadPartition);
    CHECK_ERRC(SwitchingPartition({1, 9}, 5), Errc::BadPartition);
}

TEST_CASE("validate") {
    auto ex = example_pair(3);
    auto report = validate(ex.h, ex.partition);
    std::vector<VertexSet> expect{VertexSet({5, 6}, 7), VertexSet({5, 7}, 7), VertexSet({6, 7}, 7)};
    CHECK(report.switched_sets == expect);
    CHECK(report.counts == std::array<std::size_t, 3>{0, 3, 0});
    auto ex5 = example_pair(5);
    auto r5 = validate(ex5.h, ex5.partition);
    CHECK(r5.switched_sets.size() == 3);
    CHECK(r5.counts[0] == 7);
    CHECK(r5.counts[2] == 0);

    Hypergraph bad(5, 3, {{1, 2, 3}});
    CHECK_ERRC(validate(bad, SwitchingPartition({1, 2}, 5)), Errc::ConditionAViolated);
    Hypergraph odd(5, 3, {{1, 3, 4}});
    CHECK_ERRC(validate(odd, SwitchingPartition({1, 2, 5, 3}, 5)), Errc::ConditionAViolated);
    Hypergraph one_of_four(6, 3, {{1, 5, 6}});
    CHECK_ERRC(validate(one_of_four, SwitchingPartition({1, 2, 3, 4}, 6)), Errc::ConditionBViolated);
    Hypergraph inside(6, 3, {{3, 4, 5}, {4, 5, 6}});
    auto clean = validate(inside, SwitchingPartition({1, 2}, 6));
    CHECK(clean.switched_sets.empty());
    CHECK(clean.counts == std::array<std::size_t, 3>{6, 0, 0});
}

TEST_CASE("switch") {
    for (int n = 3; n <= 6; ++n) {
        auto ex = example_pair(n);
        Hypergraph g = switch_hypergraph(ex.h, ex.partition);
        CHECK(g == ex.g);
        CHECK(g.edge_count() == ex.h.edge_count());
    }
    Hypergraph full(6, 3, {{1, 3, 4}, {2, 3, 4}, {4, 5, 6}});
    SwitchingPartition p({1, 2}, 6);
    CHECK(validate(full, p).switched_sets.empty());
    CHECK(switch_hypergraph(full, p) == full);
    CHECK_ERRC(switch_hypergraph(Hypergraph(5, 3, {{1, 2, 3}}), SwitchingPartition({1, 2}, 5)), Errc::ConditionAViolated);
}

TEST_CASE("switching is an involution on 200 random instances") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 200; ++t) {
        auto [h, p] = random_switchable(rng);
        Hypergraph g = switch_hypergraph(h, p);
        CHECK(switch_hypergraph(g, p) == h);
        CHECK(g.edge_count() == h.edge_count());
        auto dh = h.degrees(), dg = g.degrees();
        for (int v : p.v2()) CHECK(dh[v - 1] == dg[v - 1]);
        CHECK(verify_similarity(h, g, p).holds);
        if (t < 40) check_block_equations(h, p);
    }
}

TEST_CASE("switching matrix") {
    Tensor p4 = switching_matrix(SwitchingPartition({1, 2, 3, 4}, 6));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(p4(i, j) == (i == j ? Rational(-1, 2) : Rational(1, 2)));
    CHECK(p4(4, 4) == 1);
    CHECK(p4(0, 4) == 0);
    Tensor p2 = switching_matrix(SwitchingPartition({1, 2}, 3));
    CHECK(p2 == Tensor(2, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}));
    std::mt19937_64 rng(52);
    for (int t = 0; t < 20; ++t) {
        auto [h, part] = random_switchable(rng);
        Tensor p = switching_matrix(part);
        CHECK(p == transpose(p));
        CHECK(matmul(p, p) == identity_matrix(p.dim()));
    }
    // interleaved labels match the block form after reordering
    SwitchingPartition mixed({2, 5}, 5);
    Tensor pm = switching_matrix(mixed);
    auto order = mixed.block_order();
    Tensor block = switching_matrix(SwitchingPartition({1, 2}, 5));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(pm(order[i] - 1, order[j] - 1) == block(i, j));
}

TEST_CASE("verify_similarity") {
    for (int n = 3; n <= 6; ++n) {
        auto ex = example_pair(n);
        CHECK(verify_similarity(ex.h, ex.g, ex.partition).holds);
        check_block_equations(ex.h, ex.partition);
    }
    Hypergraph inside(6, 3, {{3, 4, 5}});
    auto trivial = verify_similarity(inside, inside, SwitchingPartition({1, 2}, 6));
    CHECK(trivial.holds);
    auto ex = example_pair(3);
    auto edges = ex.g.edges();
    edges.erase(std::find(edges.begin(), edges.end(), Edge{1, 5, 6}));
    edges.push_back({4, 5, 7});
    Hypergraph corrupted(7, 3, edges);
    REQUIRE(corrupted != ex.g);
    auto r = verify_similarity(ex.h, corrupted, ex.partition);
    CHECK_FALSE(r.holds);
    REQUIRE(r.mismatch);
    CHECK(r.mismatch->size() == 3);
}

TEST_CASE("random valid F families") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        const int n = 3 + static_cast<int>(rng() % 4);
        std::vector<int> vs;
        for (int j = 1; j <= n; ++j) vs.push_back(4 + j);
        auto triples = subsets(vs, 3);
        std::vector<Edge> f;
        for (auto& e : triples)
            if (rng() % 3 == 0) f.push_back(e);
        for (int j = 4; j <= n; ++j) {
            const int v = 4 + j;
            if (std::none_of(f.begin(), f.end(), [&](const Edge& e) { return std::count(e.begin(), e.end(), v); }))
                f.push_back({5, 6, v});
        }
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        auto ex = example_pair(n, f);
        CHECK(switch_hypergraph(ex.h, ex.partition) == ex.g);
        CHECK(verify_similarity(ex.h, ex.g, ex.partition).holds);
        CHECK_FALSE(is_isomorphic(ex.h, ex.g));
    }
}

TEST_CASE("E-characteristic polynomials agree across a block similarity") {
    // order 3, dim 3, V1 = {1, 2}: entries touching V1 twice vanish
    std::mt19937_64 rng(54);
    SwitchingPartition p({1, 2}, 3);
    for (int t = 0; t < 4; ++t) {
        Tensor a = testsupport::random_symmetric_tensor(rng, 3, 3, 3, 2);
        for_each_index(3, 3, [&](const Index& idx) {
            if (std::count_if(idx.begin(), idx.end(), [](std::size_t i) { return i < 2; }) >= 2) a[idx] = 0;
        });
        Tensor b = mat_sim(switching_matrix(p), a);
        CHECK(e_char_poly(a) == e_char_poly(b));
    }
}

TEST_CASE("switch report JSON") {
    auto ex = example_pair(3);
    CHECK(to_json(validate(ex.h, ex.partition)).dump() ==
          R"({"switched_sets":[[5,6],[5,7],[6,7]],"counts":{"none":0,"half":3,"all":0}})");
    CHECK(partition_from_json(to_json(ex.partition)).v1() == ex.partition.v1());
}
