#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/polynomial.hpp"
#include "hyperspec/rational.hpp"
#include "hyperspec/tensor.hpp"

namespace testsupport {

using hyperspec::Rational;
using hyperspec::Tensor;
using hyperspec::UniPoly;

inline std::filesystem::path data_dir() { return HYPERSPEC_TEST_DATA; }

inline nlohmann::json load_json(const std::string& name) {
    std::ifstream in(data_dir() / name);
    return nlohmann::json::parse(in);
}

inline Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Tensor random_matrix(std::mt19937_64& rng, std::size_t n, int span = 9, int max_den = 5) {
    Tensor m(2, n);
    for (auto& x : m.data()) x = random_rational(rng, span, max_den);
    return m;
}

inline Tensor random_symmetric_matrix(std::mt19937_64& rng, std::size_t n, int span = 9, int max_den = 5) {
    Tensor m(2, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rational(rng, span, max_den);
    return m;
}

/// Symmetric tensor with one random value per sorted index tuple.
inline Tensor random_symmetric_tensor(std::mt19937_64& rng, std::size_t order, std::size_t dim, int span = 5,
                                      int max_den = 3) {
    Tensor t(order, dim);
    hyperspec::for_each_index(order, dim, [&](const hyperspec::Index& idx) {
        if (std::is_sorted(idx.begin(), idx.end())) {
            Rational v = random_rational(rng, span, max_den);
            hyperspec::Index perm = idx;
            do {
                t[perm] = v;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    });
    return t;
}

/// Cofactor expansion along the first row, over polynomials.
inline UniPoly cofactor_det(const std::vector<std::vector<UniPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return UniPoly::constant(1);
    if (n == 1) return m[0][0];
    UniPoly total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<UniPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<UniPoly> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        UniPoly term = m[0][c] * cofactor_det(minor);
        total = c % 2 == 0 ? total + term : total - term;
    }
    return total;
}

/// det(λI - A) by cofactor expansion.
inline UniPoly matrix_char_poly(const Tensor& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = UniPoly::constant(-a(i, j));
            if (i == j) m[i][j] += UniPoly::monomial(1, 1);
        }
    return cofactor_det(m);
}

inline Rational cofactor_det(const Tensor& a) {
    const std::size_t n = a.dim();
    std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = UniPoly::constant(a(i, j));
    return cofactor_det(m).coeff(0);
}

/// (k+1)-subsets of [n] whose k-subsets are all edges, by scanning bitmasks.
inline std::size_t brute_simplices(const hyperspec::Hypergraph& h) {
    const int n = h.n();
    const int k = h.k();
    std::size_t count = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) != k + 1) continue;
        bool all = true;
        for (int drop = 0; drop < n && all; ++drop) {
            if (!(s >> drop & 1u)) continue;
            hyperspec::Edge e;
            for (int v = 0; v < n; ++v)
                if ((s >> v & 1u) && v != drop) e.push_back(v + 1);
            all = h.has_edge(e);
        }
        if (all) ++count;
    }
    return count;
}

inline hyperspec::Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int k, double density = 0.5) {
    std::bernoulli_distribution keep(density);
    std::vector<hyperspec::Edge> edges;
    for (auto& e : hyperspec::all_k_subsets(n, k))
        if (keep(rng)) edges.push_back(e);
    return hyperspec::Hypergraph(n, k, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Matrix of the vertex map v -> perm[v-1]: P e_v = e_{perm[v-1]}.
inline Tensor permutation_matrix(const std::vector<int>& perm) {
    Tensor p(2, perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) p(perm[v] - 1, v) = 1;
    return p;
}

}  // namespace testsupport

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<std::vector<hyperspec::Rational>> {
    static String convert(const std::vector<hyperspec::Rational>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return (s + "]").c_str();
    }
};
template <>
struct StringMaker<hyperspec::UniPoly> {
    static String convert(const hyperspec::UniPoly& p) { return p.pretty().c_str(); }
};
}  // namespace doctest
#endif

#define CHECK_ERRC(expr, errc)                                   \
    do {                                                         \
        bool caught_ = false;                                    \
        try {                                                    \
            (void)(expr);                                        \
        } catch (const hyperspec::Error& e_) {                   \
            caught_ = true;                                      \
            CHECK_MESSAGE(e_.code() == (errc), e_.what());       \
        }                                                        \
        CHECK_MESSAGE(caught_, "expected " #errc);               \
    } while (false)
