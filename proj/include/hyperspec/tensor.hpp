#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperspec/rational.hpp"

namespace hyperspec {

/// Index tuple (i_1, ..., i_m), zero-based.
using Index = std::vector<std::size_t>;

/// Dense order-m, dimension-n cubical tensor of rationals, row-major by index
/// tuple (i_1 is the slowest index).
class Tensor {
public:
    Tensor(std::size_t order, std::size_t dim);
    Tensor(std::size_t order, std::size_t dim, std::vector<Rational> entries);

    std::size_t order() const { return order_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return data_.size(); }

    const Rational& operator[](std::span<const std::size_t> idx) const { return data_[offset(idx)]; }
    Rational& operator[](std::span<const std::size_t> idx) { return data_[offset(idx)]; }
    const Rational& at(std::initializer_list<std::size_t> idx) const;
    Rational& at(std::initializer_list<std::size_t> idx);

    /// Matrix-style access for order-2 tensors.
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

    const std::vector<Rational>& data() const { return data_; }
    std::vector<Rational>& data() { return data_; }

    std::size_t offset(std::span<const std::size_t> idx) const;
    Index index_of(std::size_t offset) const;

    /// Number of nonzero entries.
    std::size_t nonzeros() const;

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    std::size_t order_;
    std::size_t dim_;
    std::vector<Rational> data_;
};

/// Order-2 tensor used as a matrix.
using RationalMatrix = Tensor;

/// Visits every index tuple of [dim]^order in row-major order.
template <class Fn>
void for_each_index(std::size_t order, std::size_t dim, Fn&& fn) {
    if (dim == 0) return;
    Index idx(order, 0);
    for (;;) {
        fn(static_cast<const Index&>(idx));
        std::size_t pos = order;
        for (;;) {
            if (pos == 0) return;
            --pos;
            if (++idx[pos] < dim) break;
            idx[pos] = 0;
        }
    }
}

Tensor unit_tensor(std::size_t order, std::size_t dim);
RationalMatrix identity_matrix(std::size_t dim);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& a);

/// Column vector as an order-1 tensor.
Tensor vector_tensor(std::span<const Rational> x);

/// General tensor product: A of order m >= 2 times B of order k >= 1 gives an
/// order (m-1)(k-1)+1 tensor with
///   c[i, a_1..a_{m-1}] = sum_{i_2..i_m} a[i, i_2..i_m] b[i_2, a_1] ... b[i_m, a_{m-1}].
Tensor shao_product(const Tensor& a, const Tensor& b);

/// (A x)_i = sum a[i, i_2..i_m] x_{i_2} ... x_{i_m}.
std::vector<Rational> apply(const Tensor& a, std::span<const Rational> x);

/// P A P^T: entry (i_1..i_m) = sum_j a[j_1..j_m] p[i_1,j_1] ... p[i_m,j_m].
/// Evaluated one mode at a time.
Tensor mat_sim(const RationalMatrix& p, const Tensor& a);

bool is_symmetric(const Tensor& a);

}  // namespace hyperspec
