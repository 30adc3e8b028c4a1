#pragma once

#include <cstdint>
#include <vector>

#include "hyperspec/rational.hpp"

namespace hyperspec {

class Tensor;

/// Fraction-free elimination is used up to this dimension; larger matrices
/// go through the modular CRT path.
inline constexpr std::size_t kBareissMaxDim = 12;

struct DetOptions {
    unsigned workers = 1;
    std::uint64_t prime_seed = 0;
};

/// Exact determinant of a square rational matrix (order-2 tensor).
/// The empty matrix has determinant 1.
Rational det_exact(const Tensor& m, const DetOptions& opts = {});

/// Same as det_exact on a row-major dim x dim array.
Rational det_exact(const std::vector<Rational>& entries, std::size_t dim, const DetOptions& opts = {});

/// Fraction-free (Bareiss) elimination over the integers.
BigInt det_bareiss(std::vector<BigInt> entries, std::size_t dim);

/// Modular determinant over a prime set sized by the Hadamard bound.
BigInt det_modular(const std::vector<BigInt>& entries, std::size_t dim, const DetOptions& opts = {});

/// Product of the Euclidean row norms, rounded up: |det| <= result.
BigInt hadamard_bound(const std::vector<BigInt>& entries, std::size_t dim);

/// Exact coefficient of u^t in det(u I + M) for every t, for an integer matrix.
std::vector<BigInt> shifted_det(const std::vector<BigInt>& entries, std::size_t dim,
                                const DetOptions& opts = {});

/// Scales each row of a rational matrix to integers. Returns the integer
/// matrix and the product of the row multipliers.
std::pair<std::vector<BigInt>, BigInt> integerize_rows(const std::vector<Rational>& entries, std::size_t dim);

}  // namespace hyperspec
