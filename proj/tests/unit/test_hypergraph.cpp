#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hyperspec/io.hpp"
#include "hyperspec/switching.hpp"
#include "support.hpp"

using namespace hyperspec;

TEST_CASE("adjacency tensor") {
    Tensor a = adjacency_tensor(Hypergraph(3, 3, {{1, 2, 3}}));
    CHECK(a.nonzeros() == 6);
    for (const auto& x : a.data()) CHECK((x == 0 || x == Rational(1, 2)));
    CHECK(adjacency_tensor(Hypergraph(4, 3)) == Tensor(3, 4));
    Tensor k = adjacency_tensor(complete_hypergraph(4, 3));
    std::size_t count = 0;
    for (const auto& x : k.data())
        if (!x.is_zero()) {
            ++count;
            CHECK(x == Rational(1, 2));
        }
    CHECK(count == 24);
    CHECK(adjacency_tensor(Hypergraph(5, 4, {{1, 2, 3, 5}})).nonzeros() == 24);
    CHECK(adjacency_tensor(Hypergraph(5, 4, {{1, 2, 3, 5}})).at({4, 2, 1, 0}) == Rational(1, 6));
}

TEST_CASE("hypergraph validation") {
    CHECK_ERRC(Hypergraph(3, 3, {{1, 2, 4}}), Errc::BadSize);
    CHECK_ERRC(Hypergraph(3, 3, {{1, 1, 2}}), Errc::BadSize);
    CHECK_ERRC(Hypergraph(4, 3, {{1, 2, 3}, {3, 2, 1}}), Errc::BadSize);
    CHECK_ERRC(Hypergraph(3, 3, {{1, 2}}), Errc::BadSize);
}

TEST_CASE("complement") {
    CHECK(complement(Hypergraph(5, 3)) == complete_hypergraph(5, 3));
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        Hypergraph h = testsupport::random_hypergraph(rng, 6, 3);
        CHECK(complement(complement(h)) == h);
        CHECK(h.edge_count() + complement(h).edge_count() == 20);
    }
    auto edges = complete_hypergraph(5, 3).edges();
    Edge e = edges[3];
    edges.erase(edges.begin() + 3);
    CHECK(complement(Hypergraph(5, 3, edges)) == Hypergraph(5, 3, {e}));
}

TEST_CASE("simplices") {
    CHECK(count_simplices(complete_hypergraph(4, 3)) == 1);
    CHECK(count_simplices(complete_hypergraph(5, 4)) == 1);
    CHECK(count_simplices(complete_hypergraph(6, 3)) == 15);
    auto edges = complete_hypergraph(6, 3).edges();
    edges.erase(edges.begin());
    Hypergraph minus(6, 3, edges);
    CHECK(count_simplices(minus) == 12);
    CHECK(testsupport::brute_simplices(minus) == 12);
    for (int k = 3; k <= 4; ++k)
        for (int n = k + 1; n <= 8; ++n) {
            Hypergraph full = complete_hypergraph(n, k);
            CHECK(count_simplices(full) == testsupport::brute_simplices(full));
            CHECK(BigInt(count_simplices(full)) == binomial(n, k + 1));
        }
    std::mt19937_64 rng(42);
    for (int t = 0; t < 40; ++t) {
        Hypergraph h = testsupport::random_hypergraph(rng, 6, 3, 0.8);
        CHECK(count_simplices(h) == testsupport::brute_simplices(h));
    }
}

TEST_CASE("neighbors") {
    auto ex = example_pair(3);
    VertexSet s({5, 6}, 7), w({1, 2, 3, 4}, 7);
    CHECK(neighbors_in(ex.h, s, w) == VertexSet({2, 3}, 7));
    CHECK(neighbors_in(Hypergraph(7, 3), s, w).size() == 0);
    VertexSet all({1, 2, 3, 4, 5, 6, 7}, 7);
    CHECK(neighbors_in(complete_hypergraph(7, 3), s, all) == VertexSet({1, 2, 3, 4, 7}, 7));
    CHECK_ERRC(neighbors_in(ex.h, VertexSet({5}, 7), w), Errc::BadSetSize);
    CHECK_ERRC(VertexSet({1, 1}, 7), Errc::BadSetSize);
    CHECK_ERRC(VertexSet({8}, 7), Errc::BadSetSize);
}

TEST_CASE("isomorphism") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) {
        Hypergraph h = testsupport::random_hypergraph(rng, 7, 3, 0.3);
        auto self = is_isomorphic(h, h);
        REQUIRE(self);
        CHECK(h.relabeled(*self) == h);
        auto perm = testsupport::random_permutation(rng, 7);
        Hypergraph g = h.relabeled(perm);
        auto found = is_isomorphic(h, g);
        REQUIRE(found);
        CHECK(h.relabeled(*found) == g);
        CHECK(canonical_form(h) == canonical_form(g));
    }
    auto ex = example_pair(3);
    CHECK_FALSE(is_isomorphic(ex.h, ex.g));
    CHECK(canonical_form(ex.h) != canonical_form(ex.g));
    CHECK(canonical_form(Hypergraph(4, 3)) != canonical_form(Hypergraph(4, 3, {{1, 2, 3}})));
    CHECK_FALSE(is_isomorphic(Hypergraph(4, 3), Hypergraph(5, 3)));
    CHECK_ERRC(canonical_form(Hypergraph(11, 3)), Errc::CapExceeded);
}

TEST_CASE("isomorphism agrees with canonical forms on n = 4, 5") {
    for (int n : {4, 5}) {
        auto all = enumerate_all(n, 3);
        std::vector<EdgeMask> forms;
        for (const auto& h : all) forms.push_back(canonical_form(h));
        std::mt19937_64 rng(44);
        for (std::size_t i = 0; i < all.size(); ++i) {
            const std::size_t step = n == 4 ? 1 : 37;
            for (std::size_t j = i % step; j < all.size(); j += step) {
                const bool iso = is_isomorphic(all[i], all[j]).has_value();
                CHECK(iso == (forms[i] == forms[j]));
                CHECK(iso == is_isomorphic(all[j], all[i]).has_value());
            }
        }
    }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_all(4, 3).size() == 16);
    EnumerateOptions iso;
    iso.up_to_iso = true;
    auto classes = enumerate_all(4, 3, iso);
    CHECK(classes.size() == 5);
    std::set<std::size_t> counts;
    for (const auto& h : classes) counts.insert(h.edge_count());
    CHECK(counts == std::set<std::size_t>{0, 1, 2, 3, 4});
    CHECK(enumerate_all(5, 3).size() == 1024);
    EnumerateOptions four;
    four.edge_count = 4;
    CHECK(enumerate_all(5, 3, four).size() == 210);
    std::set<EdgeMask> distinct;
    for (const auto& h : enumerate_all(5, 3)) distinct.insert(canonical_form(h));
    CHECK(enumerate_all(5, 3, iso).size() == distinct.size());
    CHECK_ERRC(enumerate_all(9, 3), Errc::CapExceeded);
    CHECK(from_mask(4, 3, 0b1010) == Hypergraph(4, 3, {{1, 2, 4}, {2, 3, 4}}));
}

TEST_CASE("example pair") {
    auto ex3 = example_pair(3);
    CHECK(ex3.h.edge_count() == 7);
    CHECK(ex3.g.edge_count() == 7);
    CHECK(ex3.h.n() == 7);
    CHECK(ex3.g.n() == 7);
    CHECK(ex3.h.has_edge({5, 6, 7}));
    CHECK(ex3.h.degrees()[0] == 0);
    for (int d : ex3.g.degrees()) CHECK(d > 0);
    CHECK(ex3.h == Hypergraph(7, 3, {{2, 5, 6}, {3, 5, 6}, {2, 6, 7}, {4, 6, 7}, {3, 5, 7}, {4, 5, 7}, {5, 6, 7}}));
    CHECK(ex3.g == Hypergraph(7, 3, {{1, 5, 6}, {4, 5, 6}, {1, 6, 7}, {3, 6, 7}, {1, 5, 7}, {2, 5, 7}, {5, 6, 7}}));
    auto ex4 = example_pair(4);
    CHECK(ex4.h.has_edge({5, 6, 7}));
    CHECK(ex4.h.has_edge({6, 7, 8}));
    CHECK(ex4.h.edge_count() == 8);
    CHECK(example_pair(5).h.edge_count() == 9);
    CHECK_ERRC(example_pair(2), Errc::BadSize);
    CHECK_ERRC(example_pair(5, std::vector<Edge>{{5, 6, 7}}), Errc::BadSize);
    CHECK_ERRC(example_pair(4, std::vector<Edge>{{1, 6, 7}}), Errc::BadSize);
}

TEST_CASE("text format") {
    auto h = parse_hypergraph("# example\n\n4 3\n1 2 3\n# inner comment\n2 3 4\n");
    CHECK(h == Hypergraph(4, 3, {{1, 2, 3}, {2, 3, 4}}));
    const std::string text = format_hypergraph(h);
    CHECK(text == "4 3\n1 2 3\n2 3 4\n");
    CHECK(format_hypergraph(parse_hypergraph(text)) == text);
    CHECK(parse_hypergraph("3 3") == Hypergraph(3, 3));
    std::mt19937_64 rng(45);
    for (int t = 0; t < 50; ++t) {
        Hypergraph r = testsupport::random_hypergraph(rng, 7, 3, 0.2);
        CHECK(parse_hypergraph(format_hypergraph(r)) == r);
    }
    auto message = [](const char* text) {
        try {
            parse_hypergraph(text);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Parse);
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("4 3\n1 2 3\n1 3 2\n").find("line 3") != std::string::npos);
    CHECK(message("4 3\n1 2 x\n").find("line 2") != std::string::npos);
    CHECK(message("4 3\n1 2\n").find("line 2") != std::string::npos);
    CHECK(message("4 3\n1 2 5\n").find("line 2") != std::string::npos);
    CHECK(!message("# nothing\n").empty());
    CHECK(!message("4 3\n1 2 3\n1 2 3\n").empty());
}

TEST_CASE("hypergraph JSON") {
    json j = to_json(Hypergraph(4, 3, {{1, 2, 3}}));
    CHECK(j.dump() == R"({"n":4,"k":3,"edges":[[1,2,3]]})");
}
