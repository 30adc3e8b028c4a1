#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperspec/linalg.hpp"
#include "hyperspec/polynomial.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

/// Square homogeneous system f_1..f_N in N variables.
class PolySystem {
public:
    /// Throws NotSquare or NotHomogeneous (a zero polynomial needs an explicit
    /// degree, see the second constructor).
    explicit PolySystem(std::vector<MultiPoly> polys);
    PolySystem(std::vector<MultiPoly> polys, std::vector<unsigned> degrees);

    std::size_t size() const { return polys_.size(); }
    const std::vector<MultiPoly>& polys() const { return polys_; }
    const std::vector<unsigned>& degrees() const { return degrees_; }

private:
    std::vector<MultiPoly> polys_;
    std::vector<unsigned> degrees_;
};

/// Row/column structure of a Macaulay matrix: the degree-D monomial basis,
/// which polynomial each row belongs to, and the non-reduced rows forming M'.
/// Only depends on the degrees and the variable order.
struct MacaulayLayout {
    std::vector<unsigned> degrees;
    std::vector<std::size_t> order;   // variable processing order
    unsigned top_degree = 0;           // D = sum(d_i - 1) + 1
    std::vector<Exponents> basis;
    std::vector<std::size_t> row_poly;  // polynomial index per row
    std::vector<std::size_t> minor;     // rows/cols of M'

    static MacaulayLayout build(const std::vector<unsigned>& degrees, std::vector<std::size_t> order = {});

    std::size_t dim() const { return basis.size(); }
    /// Column of a degree-D monomial.
    std::size_t column(const Exponents& e) const;
};

struct MacaulayPair {
    std::vector<Rational> m;        // dim x dim, row-major
    std::vector<Rational> m_minor;  // the rows/cols listed in layout.minor
    MacaulayLayout layout;
};

MacaulayPair macaulay_pair(const PolySystem& sys, std::vector<std::size_t> order = {});

/// Number of monomials of total degree `degree` in `nvars` variables.
std::size_t monomial_count(std::size_t nvars, std::size_t degree);

struct SpectralOptions {
    std::size_t degree_cap = 128;
    std::size_t dim_cap = 512;
    unsigned workers = 1;
    std::uint64_t prime_seed = 0;
    /// Seed for the random variable permutations tried on degenerate points.
    std::uint64_t permutation_seed = 0x5eed;

    DetOptions det() const { return DetOptions{1, prime_seed}; }
};

/// det(M)/det(M'); throws DegenerateMinor when det(M') = 0.
Rational resultant_value(const PolySystem& sys, std::vector<std::size_t> order = {},
                         const DetOptions& opts = {});

/// Resultant through the perturbed quotient
///   [u^t] det(M + u I) / [u^t] det(M' + u I),
/// t the order of vanishing of the denominator at u = 0. Defined even when
/// det(M') = 0.
Rational resultant_value_perturbed(const PolySystem& sys, std::vector<std::size_t> order = {},
                                   const DetOptions& opts = {});

/// Component polynomials (A x)_i.
std::vector<MultiPoly> tensor_system(const Tensor& a);

/// Resultant of (A x)_i.
Rational det_tensor(const Tensor& a, const SpectralOptions& opts = {});

/// det(λ I - A) as a polynomial in λ; degree n (m-1)^(n-1).
UniPoly char_poly(const Tensor& a, const SpectralOptions& opts = {});

/// Raw E-characteristic polynomial (sign and scale as produced by the
/// Macaulay quotient with equations ordered f_1..f_n[, x^T x - β^2]).
UniPoly e_char_poly_raw(const Tensor& a, const SpectralOptions& opts = {});

/// Normalized E-characteristic polynomial (content-free, positive leading).
UniPoly e_char_poly(const Tensor& a, const SpectralOptions& opts = {});

/// Degree law of the characteristic polynomial: n (m-1)^(n-1).
std::size_t char_poly_degree(std::size_t order, std::size_t dim);

/// True iff A x = λ x^[m-1]. Throws ZeroVector.
bool eigen_check(const Tensor& a, const Rational& lambda, std::span<const Rational> x);

}  // namespace hyperspec
